#include "npoly/sequences.hpp"

#include <string>

namespace npoly {

CurveProfile::CurveProfile(int degree, int genus) : degree_(degree), genus_(genus)
{
    if (genus < 0) {
        throw Error(ErrorKind::InvalidProfile,
                    "genus must satisfy g >= 0 (got g = " + std::to_string(genus) + ")");
    }
    if (degree < 2 * genus + 1) {
        throw Error(ErrorKind::InvalidProfile,
                    "degree must satisfy d >= 2g + 1 (got d = " + std::to_string(degree) +
                        ", g = " + std::to_string(genus) + ")");
    }
}

ESequence f_sequence(const CurveProfile& profile)
{
    const int d = profile.degree();
    const int g = profile.genus();
    const int n = profile.rank();

    std::vector<std::int64_t> f(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int k = i - 1;
        // past d - 2g every step gains an extra alpha = k - (d - 2g)
        f[static_cast<std::size_t>(i - 1)] = k <= d - 2 * g ? k : k + (k - (d - 2 * g));
    }
    return ESequence(std::move(f));
}

Verdict validate_window(int n, GapWindow window, WindowRegime regime)
{
    const auto [s, t] = window;
    if (n < 3) return Verdict::reject("window requires N >= 3 (got N = " + std::to_string(n) + ")");
    if (s < 1) return Verdict::reject("window requires s >= 1 (got s = " + std::to_string(s) + ")");
    if (s >= t) {
        return Verdict::reject("window requires s < t (got s = " + std::to_string(s) +
                               ", t = " + std::to_string(t) + ")");
    }
    const int upper = regime == WindowRegime::Strict ? n - 2 : n;
    if (t > upper) {
        return Verdict::reject(std::string("window requires t <= ") +
                               (regime == WindowRegime::Strict ? "N - 2" : "N") + " (got t = " +
                               std::to_string(t) + ", N = " + std::to_string(n) + ")");
    }
    return Verdict::accept();
}

Verdict check_e_sequence(const ESequence& e)
{
    if (e.size() == 0) return Verdict::reject("e-sequence is empty");
    if (e(1) != 0) return Verdict::reject("e_1 must be 0", 1);
    for (int i = 2; i <= e.size(); ++i) {
        if (e(i) < e(i - 1)) {
            return Verdict::reject("e-sequence decreases at index " + std::to_string(i), i);
        }
    }
    return Verdict::accept();
}

Verdict check_r_sequence(const RSequence& r)
{
    if (r.size() == 0) return Verdict::reject("r-sequence is empty");
    for (int i = 2; i <= r.size(); ++i) {
        if (r(i) > r(i - 1)) {
            return Verdict::reject("r-sequence increases at index " + std::to_string(i), i);
        }
    }
    return Verdict::accept();
}

Verdict check_plateau(const ESequence& e, GapWindow window)
{
    for (int j = window.s + 1; j <= window.t - 1 && j <= e.size(); ++j) {
        if (e(j) != e(window.s)) {
            return Verdict::reject("plateau e_s = ... = e_{t-1} fails at index " + std::to_string(j),
                                   j);
        }
    }
    return Verdict::accept();
}

Verdict validate_instance(const ESequence& e, const RSequence& r, GapWindow window)
{
    if (e.size() != r.size()) {
        return Verdict::reject("length mismatch: e has " + std::to_string(e.size()) +
                               " entries, r has " + std::to_string(r.size()));
    }
    if (auto v = check_e_sequence(e); !v) return v;
    if (auto v = check_r_sequence(r); !v) return v;
    if (auto v = validate_window(e.size(), window, WindowRegime::Relaxed); !v) return v;
    return check_plateau(e, window);
}

RSequence normalize(const RSequence& r)
{
    if (r.size() == 0) return r;
    std::vector<Rational> out(r.values().begin(), r.values().end());
    const Rational last = out.back();
    for (auto& x : out) x -= last;
    return RSequence(std::move(out));
}

void require(const Verdict& verdict, ErrorKind kind)
{
    if (!verdict) throw Error(kind, verdict.reason);
}

} // namespace npoly
