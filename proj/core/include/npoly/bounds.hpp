#pragma once

#include "npoly/polygon.hpp"
#include "npoly/sequences.hpp"

#include <optional>
#include <vector>

namespace npoly {

enum class Branch {
    Low,  // 2 <= i <= s
    High, // t <= i <= N
};

const char* to_string(Branch branch) noexcept;

struct BoundCoefficient {
    int index = 0;
    Rational value;
    Branch branch = Branch::Low;
};

struct BoundConstant {
    Rational value;
    int argmax = 0;
};

/// Indices [2, s] and [t, N], ascending.
std::vector<int> admissible_indices(int n, GapWindow window);

/// e_i^2 divided by the branch denominator
///   low:  (i-1) e_i - (e_2 + ... + e_{i-1})
///   high: (i-t+s) e_i - (e_1 + ... + e_s + e_t + ... + e_{i-1})
/// and 0 when e_i = 0. The denominator is at least e_i whenever e_i > 0.
BoundCoefficient coefficient_b(int i, const ESequence& e, GapWindow window);

std::vector<BoundCoefficient> coefficient_table(const ESequence& e, GapWindow window);

/// Max of coefficient_b over the admissible indices, smallest index on ties.
/// With e = f_sequence(profile) this is A(s, t).
BoundConstant bound_constant(const ESequence& e, GapWindow window);

/// Extremal configuration at vertex i of the constraint simplex:
/// sigma_j = alpha (e_j - e_{j-1}) for j <= i, zero beyond, r_N = 0.
struct VertexInstance {
    int index = 0;
    Rational alpha;
    std::vector<Rational> sigma; // sigma_2 .. sigma_N, stored from position 0
    RSequence r;
};

/// sum_j c_j sigma_j with c_j = j-1 (j <= s), s (s < j < t), j-t+s (j >= t).
/// Equals sum_{j<=s} r_j + sum_{j>=t} r_j for the r rebuilt from sigma.
Rational sigma_constraint(const std::vector<Rational>& sigma, GapWindow window);

/// Ordering of the ratios sigma_j / (e_j - e_{j-1}), checked without
/// division: nonincreasing across positive gaps, sigma_j = 0 on zero gaps,
/// and every sigma_j >= 0.
bool sigma_ordering_holds(const ESequence& e, const std::vector<Rational>& sigma);

/// Throws Error(DegenerateVertex) when e_i = 0.
VertexInstance vertex_instance(const ESequence& e, GapWindow window, int i);

struct SimplexMaximum {
    Rational value;
    std::optional<VertexInstance> vertex; // empty when every vertex is degenerate

    bool degenerate() const noexcept { return !vertex.has_value(); }
};

/// Evaluates alpha e_i^2 at every non-degenerate admissible vertex.
SimplexMaximum simplex_maximize(const ESequence& e, GapWindow window);

/// sum_{j<=s} (r_j - r_N) + sum_{j>=t} (r_j - r_N)
Rational rhs_sum(const RSequence& r, GapWindow window);

struct Prop1Options {
    int brute_force_cap = kDefaultBruteForceCap;
    bool cross_check = true; // brute force alongside the hull when N <= cap
};

struct Prop1Report {
    Instance instance;
    Rational chain_minimum; // S
    Chain witness;
    BoundConstant constant; // B(s, t)
    Rational rhs_sum;
    Rational bound; // B(s, t) * rhs_sum
    Rational slack; // bound - S
    bool cross_checked = false;

    bool holds() const { return sgn(slack) >= 0; }
};

/// Throws Error(InvalidInstance) when validate_instance rejects, and
/// Error(Internal) if the hull and brute-force minima disagree.
Prop1Report prop1_verify(const ESequence& e, const RSequence& r, GapWindow window,
                         const Prop1Options& options = {});

struct TightnessCertificate {
    ESequence e;
    GapWindow window;
    VertexInstance vertex;
    Rational constant; // B(s, t)
    Rational chain_minimum; // S of the vertex instance
    Chain witness;
    Rational rhs_sum;

    bool exact() const { return chain_minimum == constant * rhs_sum; }
};

/// Vertex instance at the argmax of bound_constant, with its chain minimum
/// recomputed by brute force (N <= cap) and by the hull.
TightnessCertificate tightness_certificate(const ESequence& e, GapWindow window,
                                           int brute_force_cap = kDefaultBruteForceCap);

} // namespace npoly
