#include "npoly/bounds.hpp"

#include <string>

namespace npoly {

namespace {

void require_shape(const ESequence& e, GapWindow window)
{
    require(check_e_sequence(e), ErrorKind::InvalidInstance);
    require(validate_window(e.size(), window, WindowRegime::Relaxed), ErrorKind::InvalidWindow);
}

bool admissible(int i, int n, GapWindow window)
{
    return (2 <= i && i <= window.s) || (window.t <= i && i <= n);
}

// Weight of sigma_j in sum_{j<=s} r_j + sum_{j>=t} r_j once r is rebuilt
// from its increments.
std::int64_t sigma_weight(int j, GapWindow window)
{
    if (j <= window.s) return j - 1;
    if (j < window.t) return window.s;
    return j - window.t + window.s;
}

// Denominator of the coefficient at an admissible index i.
std::int64_t branch_denominator(int i, const ESequence& e, GapWindow window, Branch branch)
{
    std::int64_t den = 0;
    if (branch == Branch::Low) {
        den = static_cast<std::int64_t>(i - 1) * e(i);
        for (int j = 2; j <= i - 1; ++j) den -= e(j);
    } else {
        den = static_cast<std::int64_t>(i - window.t + window.s) * e(i);
        for (int j = 1; j <= window.s; ++j) den -= e(j);
        for (int j = window.t; j <= i - 1; ++j) den -= e(j);
    }
    return den;
}

} // namespace

const char* to_string(Branch branch) noexcept
{
    return branch == Branch::Low ? "low" : "high";
}

std::vector<int> admissible_indices(int n, GapWindow window)
{
    std::vector<int> out;
    for (int i = 2; i <= n; ++i) {
        if (admissible(i, n, window)) out.push_back(i);
    }
    return out;
}

BoundCoefficient coefficient_b(int i, const ESequence& e, GapWindow window)
{
    require_shape(e, window);
    if (!admissible(i, e.size(), window)) {
        throw Error(ErrorKind::IndexOutOfDomain,
                    "index " + std::to_string(i) + " is outside [2, s] u [t, N]");
    }

    const Branch branch = i <= window.s ? Branch::Low : Branch::High;
    if (e(i) == 0) return {i, Rational(0), branch};

    const std::int64_t den = branch_denominator(i, e, window, branch);
    if (den < e(i)) {
        throw Error(ErrorKind::Internal, "coefficient denominator " + std::to_string(den) +
                                             " below e_" + std::to_string(i));
    }
    Rational value(BigInt(e(i)) * e(i), BigInt(den));
    value.canonicalize();
    return {i, std::move(value), branch};
}

std::vector<BoundCoefficient> coefficient_table(const ESequence& e, GapWindow window)
{
    std::vector<BoundCoefficient> table;
    for (int i : admissible_indices(e.size(), window)) table.push_back(coefficient_b(i, e, window));
    return table;
}

BoundConstant bound_constant(const ESequence& e, GapWindow window)
{
    require_shape(e, window);
    BoundConstant best;
    for (const auto& c : coefficient_table(e, window)) {
        if (best.argmax == 0 || c.value > best.value) {
            best.value = c.value;
            best.argmax = c.index;
        }
    }
    if (best.argmax == 0) {
        throw Error(ErrorKind::Internal, "no admissible index");
    }
    return best;
}

Rational sigma_constraint(const std::vector<Rational>& sigma, GapWindow window)
{
    Rational total = 0;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const int j = static_cast<int>(k) + 2;
        total += sigma[k] * sigma_weight(j, window);
    }
    return total;
}

bool sigma_ordering_holds(const ESequence& e, const std::vector<Rational>& sigma)
{
    if (static_cast<int>(sigma.size()) != e.size() - 1) return false;

    int previous = 0; // last index with a positive gap
    for (int j = 2; j <= e.size(); ++j) {
        const Rational& sj = sigma[static_cast<std::size_t>(j - 2)];
        if (sgn(sj) < 0) return false;
        const std::int64_t gap = e(j) - e(j - 1);
        if (gap == 0) {
            if (sgn(sj) != 0) return false;
            continue;
        }
        if (previous != 0) {
            const Rational& sp = sigma[static_cast<std::size_t>(previous - 2)];
            const std::int64_t prev_gap = e(previous) - e(previous - 1);
            // sp / prev_gap >= sj / gap
            if (sp * gap < sj * prev_gap) return false;
        }
        previous = j;
    }
    return true;
}

VertexInstance vertex_instance(const ESequence& e, GapWindow window, int i)
{
    const BoundCoefficient coefficient = coefficient_b(i, e, window);
    if (e(i) == 0) {
        throw Error(ErrorKind::DegenerateVertex,
                    "vertex " + std::to_string(i) + " is degenerate (e_" + std::to_string(i) +
                        " = 0)");
    }

    const int n = e.size();
    VertexInstance vertex;
    vertex.index = i;
    vertex.alpha = coefficient.value / (BigInt(e(i)) * e(i));

    vertex.sigma.resize(static_cast<std::size_t>(n - 1));
    for (int j = 2; j <= i; ++j) {
        vertex.sigma[static_cast<std::size_t>(j - 2)] = vertex.alpha * (e(j) - e(j - 1));
    }

    std::vector<Rational> r(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 1; --j) {
        r[static_cast<std::size_t>(j - 1)] =
            r[static_cast<std::size_t>(j)] + vertex.sigma[static_cast<std::size_t>(j - 1)];
    }
    vertex.r = RSequence(std::move(r));

    if (sigma_constraint(vertex.sigma, window) != 1 || !sigma_ordering_holds(e, vertex.sigma)) {
        throw Error(ErrorKind::Internal, "vertex " + std::to_string(i) + " leaves the simplex");
    }
    return vertex;
}

SimplexMaximum simplex_maximize(const ESequence& e, GapWindow window)
{
    require_shape(e, window);
    SimplexMaximum best;
    for (int i : admissible_indices(e.size(), window)) {
        if (e(i) == 0) continue;
        VertexInstance vertex = vertex_instance(e, window, i);
        Rational objective = vertex.alpha * (BigInt(e(i)) * e(i));
        if (best.degenerate() || objective > best.value) {
            best.value = std::move(objective);
            best.vertex = std::move(vertex);
        }
    }
    return best;
}

Rational rhs_sum(const RSequence& r, GapWindow window)
{
    const int n = r.size();
    Rational total = 0;
    for (int j = 1; j <= window.s && j <= n; ++j) total += r(j) - r(n);
    for (int j = window.t; j <= n; ++j) total += r(j) - r(n);
    return total;
}

Prop1Report prop1_verify(const ESequence& e, const RSequence& r, GapWindow window,
                         const Prop1Options& options)
{
    require(validate_instance(e, r, window), ErrorKind::InvalidInstance);

    Prop1Report report;
    report.instance = Instance{e, r, window};

    ChainMinimum minimum = min_chain_hull(e, r);
    if (options.cross_check && e.size() <= options.brute_force_cap) {
        const ChainMinimum oracle = min_chain_bruteforce(e, r, options.brute_force_cap);
        if (oracle.value != minimum.value) {
            throw Error(ErrorKind::Internal, "hull minimum " + to_string(minimum.value) +
                                                 " differs from brute force " +
                                                 to_string(oracle.value));
        }
        report.cross_checked = true;
    }
    report.chain_minimum = std::move(minimum.value);
    report.witness = std::move(minimum.witness);
    report.constant = bound_constant(e, window);
    report.rhs_sum = rhs_sum(r, window);
    report.bound = report.constant.value * report.rhs_sum;
    report.slack = report.bound - report.chain_minimum;
    return report;
}

TightnessCertificate tightness_certificate(const ESequence& e, GapWindow window,
                                           int brute_force_cap)
{
    const BoundConstant constant = bound_constant(e, window);
    if (sgn(constant.value) == 0) {
        throw Error(ErrorKind::DegenerateVertex,
                    "every admissible vertex is degenerate (all admissible e_i = 0)");
    }

    TightnessCertificate cert;
    cert.e = e;
    cert.window = window;
    cert.vertex = vertex_instance(e, window, constant.argmax);
    cert.constant = constant.value;

    ChainMinimum minimum = min_chain_hull(e, cert.vertex.r);
    if (e.size() <= brute_force_cap) {
        ChainMinimum oracle = min_chain_bruteforce(e, cert.vertex.r, brute_force_cap);
        if (oracle.value != minimum.value) {
            throw Error(ErrorKind::Internal, "hull and brute force disagree on the vertex instance");
        }
        minimum = std::move(oracle);
    }
    cert.chain_minimum = std::move(minimum.value);
    cert.witness = std::move(minimum.witness);
    cert.rhs_sum = rhs_sum(cert.vertex.r, window);
    return cert;
}

} // namespace npoly
