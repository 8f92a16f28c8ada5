#pragma once

#include "npoly/bounds.hpp"
#include "npoly/matrix.hpp"
#include "npoly/sequences.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace npoly {

/// Logarithmic successive minima mu_1 <= ... <= mu_N.
struct MinimaProfile {
    std::vector<Rational> mu;
};

struct HeightInput {
    Rational h_norm; // h(X_K) / [K:Q]
    Rational c_d;    // c(d), supplied by the caller
    CurveProfile profile;
    GapWindow window; // strict regime
    MinimaProfile minima;
};

/// h_norm + (2d - A(N-t+s+1)) mu_1
///        + A (mu_1 + ... + mu_{N+1-t} + mu_{N+1-s} + ... + mu_N) + c_d,
/// A = A(s, t) from the f-sequence. Evaluated, never asserted >= 0.
Rational theorem1_lhs(const HeightInput& input);

struct MuCoefficientAudit {
    BoundConstant a_st;
    std::vector<Rational> coefficients; // coefficient of mu_1 .. mu_N
    Rational total;                     // always 2d
};

MuCoefficientAudit mu_coefficient_audit(const CurveProfile& profile, GapWindow window);

struct DualData {
    std::vector<std::int64_t> n; // n_{s+1} .. n_{t-1}
    GapWindow window;
    std::int64_t n_cap = 0;
    IntMatrix w; // row i: w_i in the y-basis
    IntMatrix v; // row i: v_i in the x-basis
};

/// W has rows w_i = y_i + n_i y_{i+1} on s+1 <= i <= t-1 and identity rows
/// elsewhere. V is built from the alternating-product closed form and from
/// the exact inverse transpose of W; both routes must agree, as must
/// W V^T = I and v_i = x_i outside s+2 <= i <= t.
///
/// Throws Error(CapViolation) when some |n_i| > n_cap, Error(InvalidInstance)
/// on a length mismatch, Error(InvalidWindow) for a bad window.
DualData dual_matrices(std::span<const std::int64_t> n, GapWindow window, int size,
                       std::int64_t n_cap);

/// Closed form alone: V(i, k) = (-1)^(i-k) n_k n_{k+1} ... n_{i-1} for
/// s+1 <= k < i <= t.
IntMatrix dual_closed_form(std::span<const std::int64_t> n, GapWindow window, int size);

struct NormCertificate {
    std::vector<Rational> bounds;  // sum_k |V(i,k)| X_k
    std::vector<Rational> targets; // X_i, or X_{s+1} on s+1 <= i <= t
    std::vector<bool> pass;
    Rational inflation;         // C supplied by the caller
    Rational minimal_inflation; // max_i bounds_i / targets_i

    bool all_pass() const;
};

/// Norms X_1 >= ... >= X_N > 0, inflation C >= 1.
NormCertificate v_norm_certify(const DualData& dual, std::span<const Rational> norms,
                               const Rational& inflation);

} // namespace npoly
