#include "npoly/heights.hpp"

#include <string>

namespace npoly {

namespace {

void require_minima(const MinimaProfile& minima, int n)
{
    if (static_cast<int>(minima.mu.size()) != n) {
        throw Error(ErrorKind::InvalidInstance,
                    "minima length " + std::to_string(minima.mu.size()) + " differs from N = " +
                        std::to_string(n));
    }
    for (std::size_t k = 1; k < minima.mu.size(); ++k) {
        if (minima.mu[k] < minima.mu[k - 1]) {
            throw Error(ErrorKind::InvalidInstance,
                        "minima must be nondecreasing (mu_" + std::to_string(k + 1) + " < mu_" +
                            std::to_string(k) + ")");
        }
    }
}

BoundConstant strict_a_st(const CurveProfile& profile, GapWindow window)
{
    require(validate_window(profile.rank(), window, WindowRegime::Strict),
            ErrorKind::InvalidWindow);
    return bound_constant(f_sequence(profile), window);
}

std::vector<Rational> canonical(std::span<const Rational> values)
{
    std::vector<Rational> out(values.begin(), values.end());
    for (auto& x : out) x.canonicalize();
    return out;
}

} // namespace

Rational theorem1_lhs(const HeightInput& raw)
{
    HeightInput input = raw;
    input.h_norm.canonicalize();
    input.c_d.canonicalize();
    input.minima.mu = canonical(raw.minima.mu);
    const auto& [s, t] = input.window;
    const int n = input.profile.rank();
    const Rational a = strict_a_st(input.profile, input.window).value;
    require_minima(input.minima, n);

    const auto mu = [&](int alpha) -> const Rational& {
        return input.minima.mu[static_cast<std::size_t>(alpha - 1)];
    };

    Rational head = 0;
    for (int alpha = 1; alpha <= n + 1 - t; ++alpha) head += mu(alpha);
    Rational tail = 0;
    for (int alpha = n + 1 - s; alpha <= n; ++alpha) tail += mu(alpha);

    const Rational mu1_coefficient = 2 * input.profile.degree() - a * (n - t + s + 1);
    return input.h_norm + mu1_coefficient * mu(1) + a * (head + tail) + input.c_d;
}

MuCoefficientAudit mu_coefficient_audit(const CurveProfile& profile, GapWindow window)
{
    const auto& [s, t] = window;
    const int n = profile.rank();

    MuCoefficientAudit audit;
    audit.a_st = strict_a_st(profile, window);
    const Rational& a = audit.a_st.value;

    audit.coefficients.assign(static_cast<std::size_t>(n), Rational(0));
    audit.coefficients[0] = 2 * profile.degree() - a * (n - t + s + 1);
    for (int alpha = 1; alpha <= n + 1 - t; ++alpha) {
        audit.coefficients[static_cast<std::size_t>(alpha - 1)] += a;
    }
    for (int alpha = n + 1 - s; alpha <= n; ++alpha) {
        audit.coefficients[static_cast<std::size_t>(alpha - 1)] += a;
    }
    for (const auto& c : audit.coefficients) audit.total += c;
    return audit;
}

IntMatrix dual_closed_form(std::span<const std::int64_t> n, GapWindow window, int size)
{
    const auto& [s, t] = window;
    const auto coeff = [&](int i) { return n[static_cast<std::size_t>(i - s - 1)]; };

    IntMatrix v = IntMatrix::identity(size);
    for (int i = s + 2; i <= t; ++i) {
        // v_i = x_i - n_{i-1} x_{i-1} + n_{i-1} n_{i-2} x_{i-2} - ... +- n_{i-1}...n_{s+1} x_{s+1}
        BigInt product = 1;
        for (int k = i - 1; k >= s + 1; --k) {
            product *= -coeff(k);
            v(i, k) = product;
        }
    }
    return v;
}

DualData dual_matrices(std::span<const std::int64_t> n, GapWindow window, int size,
                       std::int64_t n_cap)
{
    require(validate_window(size, window, WindowRegime::Relaxed), ErrorKind::InvalidWindow);
    const auto& [s, t] = window;
    const auto expected = static_cast<std::size_t>(t - 1 - s);
    if (n.size() != expected) {
        throw Error(ErrorKind::InvalidInstance,
                    "n has " + std::to_string(n.size()) + " entries, window needs t - 1 - s = " +
                        std::to_string(expected));
    }
    if (n_cap < 0) throw Error(ErrorKind::CapViolation, "n_cap must be nonnegative");
    for (std::size_t k = 0; k < n.size(); ++k) {
        if (n[k] > n_cap || n[k] < -n_cap) {
            throw Error(ErrorKind::CapViolation,
                        "|n_" + std::to_string(s + 1 + static_cast<int>(k)) + "| = " +
                            std::to_string(n[k] < 0 ? -n[k] : n[k]) + " exceeds n_cap = " +
                            std::to_string(n_cap));
        }
    }

    DualData dual;
    dual.n.assign(n.begin(), n.end());
    dual.window = window;
    dual.n_cap = n_cap;

    dual.w = IntMatrix::identity(size);
    for (int i = s + 1; i <= t - 1; ++i) dual.w(i, i + 1) = n[static_cast<std::size_t>(i - s - 1)];

    dual.v = dual_closed_form(n, window, size);

    const auto inverse = invert(to_rational(dual.w));
    const auto inverted = inverse ? to_integer(inverse->transposed()) : std::nullopt;
    if (!inverted || *inverted != dual.v) {
        throw Error(ErrorKind::Internal, "closed-form dual basis differs from W^-T");
    }
    if (multiply_transposed(dual.w, dual.v) != IntMatrix::identity(size)) {
        throw Error(ErrorKind::Internal, "W V^T is not the identity");
    }
    for (int i = 1; i <= size; ++i) {
        if (i > s + 1 && i <= t) continue;
        for (int k = 1; k <= size; ++k) {
            if (dual.v(i, k) != (i == k ? 1 : 0)) {
                throw Error(ErrorKind::Internal, "v_" + std::to_string(i) + " differs from x_" +
                                                     std::to_string(i));
            }
        }
    }
    return dual;
}

bool NormCertificate::all_pass() const
{
    for (bool p : pass)
        if (!p) return false;
    return true;
}

NormCertificate v_norm_certify(const DualData& dual, std::span<const Rational> raw_norms,
                               const Rational& raw_inflation)
{
    const std::vector<Rational> norms = canonical(raw_norms);
    Rational inflation = raw_inflation;
    inflation.canonicalize();
    const int size = dual.v.size();
    const auto& [s, t] = dual.window;
    if (static_cast<int>(norms.size()) != size) {
        throw Error(ErrorKind::InvalidInstance, "expected " + std::to_string(size) +
                                                    " norms, got " +
                                                    std::to_string(norms.size()));
    }
    for (std::size_t k = 0; k < norms.size(); ++k) {
        if (sgn(norms[k]) <= 0) {
            throw Error(ErrorKind::InvalidInstance,
                        "norm X_" + std::to_string(k + 1) + " must be positive");
        }
        if (k > 0 && norms[k] > norms[k - 1]) {
            throw Error(ErrorKind::InvalidInstance,
                        "norms must be nonincreasing (X_" + std::to_string(k + 1) + " > X_" +
                            std::to_string(k) + ")");
        }
    }
    if (inflation < 1) throw Error(ErrorKind::InvalidInstance, "inflation C must be >= 1");

    const auto x = [&](int k) -> const Rational& { return norms[static_cast<std::size_t>(k - 1)]; };

    NormCertificate cert;
    cert.inflation = inflation;
    cert.minimal_inflation = 0;
    for (int i = 1; i <= size; ++i) {
        Rational bound = 0;
        for (int k = 1; k <= size; ++k) {
            if (sgn(dual.v(i, k)) != 0) bound += Rational(abs(dual.v(i, k))) * x(k);
        }
        const Rational& target = (i >= s + 1 && i <= t) ? x(s + 1) : x(i);
        const Rational ratio = bound / target;
        if (ratio > cert.minimal_inflation) cert.minimal_inflation = ratio;
        cert.pass.push_back(bound <= inflation * target);
        cert.bounds.push_back(std::move(bound));
        cert.targets.push_back(target);
    }
    return cert;
}

} // namespace npoly
