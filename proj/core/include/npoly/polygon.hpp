#pragma once

#include "npoly/sequences.hpp"

#include <cstddef>
#include <vector>

namespace npoly {

inline constexpr int kDefaultBruteForceCap = 20;

/// Increasing index list 1 = i_0 < i_1 < ... < i_l = N.
struct Chain {
    std::vector<int> indices;

    friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainMinimum {
    Rational value;
    Chain witness;
};

/// Checks that `chain` starts at 1, ends at n, and strictly increases.
Verdict validate_chain(const Chain& chain, int n);

/// Trapezoid sum  sum_j (r_{i_j} - r_{i_{j+1}}) (e_{i_j} + e_{i_{j+1}}).
/// Throws Error(InvalidChain) for a malformed chain.
Rational chain_cost(const ESequence& e, const RSequence& r, const Chain& chain);

/// Exhaustive minimum over all 2^(N-2) chains. Ties go to the
/// lexicographically smallest index list. Throws Error(CapExceeded) when
/// N > cap; the search is never truncated.
ChainMinimum min_chain_bruteforce(const ESequence& e, const RSequence& r,
                                  int cap = kDefaultBruteForceCap);

/// Same minimum, read off the lower convex hull of the points (e_j, r_j).
/// Requires a valid e-sequence and a nonincreasing r-sequence.
///
/// At every abscissa only the lowest point can lie on the minimizing path,
/// except at e = 0 where the path must also start at point 1; the vertical
/// drop there costs nothing because its trapezoid width is 2 e_1 = 0.
/// Collinear points are dropped from the witness.
ChainMinimum min_chain_hull(const ESequence& e, const RSequence& r);

} // namespace npoly
