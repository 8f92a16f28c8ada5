#include "oracles.hpp"
#include "support.hpp"

#include <npoly/error.hpp>
#include <npoly/heights.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace npoly;

namespace {

std::vector<Rational> rats(std::initializer_list<int> xs)
{
    std::vector<Rational> v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

HeightInput make_input(int d, int g, GapWindow w, std::vector<Rational> mu)
{
    return {Rational(0), Rational(0), CurveProfile(d, g), w, MinimaProfile{std::move(mu)}};
}

} // namespace

TEST(HeightLhs, Examples)
{
    EXPECT_EQ(theorem1_lhs(make_input(5, 0, {1, 3}, rats({0, 0, 0, 0, 0, 0}))), 0);
    EXPECT_EQ(theorem1_lhs(make_input(5, 0, {1, 3}, rats({1, 1, 1, 1, 1, 1}))), 10);
    // A(1,3) = 16/7; (16/7) * ((0+1+2+3) + 5)
    EXPECT_EQ(theorem1_lhs(make_input(5, 0, {1, 3}, rats({0, 1, 2, 3, 4, 5}))), Rational(176, 7));

    HeightInput in = make_input(5, 0, {1, 3}, rats({0, 0, 0, 0, 0, 0}));
    in.h_norm = Rational(3, 2);
    in.c_d = -4;
    EXPECT_EQ(theorem1_lhs(in), Rational(-5, 2));
}

TEST(HeightLhs, ErrorPaths)
{
    EXPECT_THROW((void)theorem1_lhs(make_input(5, 0, {1, 5}, rats({0, 0, 0, 0, 0, 0}))), Error);
    EXPECT_THROW((void)theorem1_lhs(make_input(5, 0, {1, 3}, rats({0, 0, 0, 0, 0}))), Error);
    try {
        (void)theorem1_lhs(make_input(5, 0, {1, 3}, rats({0, 2, 1, 3, 4, 5})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInstance);
    }
}

TEST(MuCoefficientAudit, Examples)
{
    EXPECT_EQ(mu_coefficient_audit(CurveProfile(5, 0), {1, 3}).total, 10);
    EXPECT_EQ(mu_coefficient_audit(CurveProfile(7, 2), {2, 4}).total, 14);
    for (int s = -1; s <= 3; ++s) {
        for (int t = s + 1; t <= 4; ++t) {
            EXPECT_THROW((void)mu_coefficient_audit(CurveProfile(3, 1), {s, t}), Error);
        }
    }
}

TEST(MuCoefficientAudit, TotalIsTwoDOnGrid)
{
    for (int d = 1; d <= 30; ++d) {
        for (int g = 0; 2 * g + 1 <= d; ++g) {
            const CurveProfile p(d, g);
            for (int s = 1; s <= p.rank() - 3; ++s) {
                for (int t = s + 1; t <= p.rank() - 2; ++t) {
                    ASSERT_EQ(mu_coefficient_audit(p, {s, t}).total, 2 * d);
                }
            }
        }
    }
}

TEST(HeightLhs, AuditRouteAgrees)
{
    std::mt19937_64 rng(20);
    for (int k = 0; k < 300; ++k) {
        const int d = static_cast<int>(gen::uniform(rng, 4, 20));
        const int g = static_cast<int>(gen::uniform(rng, 0, (d - 1) / 2));
        const CurveProfile p(d, g);
        if (p.rank() < 4) continue;
        const int s = static_cast<int>(gen::uniform(rng, 1, p.rank() - 3));
        const int t = static_cast<int>(gen::uniform(rng, s + 1, p.rank() - 2));
        auto mu = gen::random_r(rng, p.rank(), 20);
        std::reverse(mu.begin(), mu.end());
        HeightInput in{Rational(gen::uniform(rng, -9, 9)), Rational(1, 3), p, {s, t},
                       MinimaProfile{mu}};
        const auto audit = mu_coefficient_audit(p, {s, t});
        Rational via_audit = in.h_norm + in.c_d;
        for (std::size_t a = 0; a < mu.size(); ++a) via_audit += audit.coefficients[a] * mu[a];
        ASSERT_EQ(theorem1_lhs(in), via_audit);
    }
}

TEST(HeightLhs, ShiftCovariance)
{
    std::mt19937_64 rng(21);
    for (int k = 0; k < 300; ++k) {
        const int d = static_cast<int>(gen::uniform(rng, 3, 25));
        const int g = static_cast<int>(gen::uniform(rng, 0, (d - 1) / 2));
        const CurveProfile p(d, g);
        if (p.rank() < 4) continue;
        const int s = static_cast<int>(gen::uniform(rng, 1, p.rank() - 3));
        const int t = static_cast<int>(gen::uniform(rng, s + 1, p.rank() - 2));
        auto mu = gen::random_r(rng, p.rank(), 10);
        std::reverse(mu.begin(), mu.end());
        Rational lambda{BigInt(gen::uniform(rng, -100, 100)), BigInt(gen::uniform(rng, 1, 9))};
        lambda.canonicalize();
        auto shifted = mu;
        for (auto& x : shifted) x += lambda;
        const auto a = theorem1_lhs({Rational(0), Rational(0), p, {s, t}, MinimaProfile{mu}});
        const auto b = theorem1_lhs({Rational(0), Rational(0), p, {s, t}, MinimaProfile{shifted}});
        ASSERT_EQ(b - a, 2 * d * lambda);
    }
}

TEST(DualMatrices, Examples)
{
    const std::vector<std::int64_t> five{5};
    const DualData a = dual_matrices(five, {1, 3}, 4, 10);
    EXPECT_EQ(a.v(3, 3), 1);
    EXPECT_EQ(a.v(3, 2), -5);
    EXPECT_EQ(a.v(3, 1), 0);
    EXPECT_EQ(a.v(3, 4), 0);
    EXPECT_EQ(a.w(2, 3), 5);
    EXPECT_EQ(multiply_transposed(a.w, a.v), IntMatrix::identity(4));

    const std::vector<std::int64_t> zeros{0, 0, 0};
    const DualData z = dual_matrices(zeros, {1, 5}, 6, 0);
    EXPECT_EQ(z.v, IntMatrix::identity(6));
    EXPECT_EQ(z.w, IntMatrix::identity(6));

    const std::vector<std::int64_t> two_three{2, 3};
    const DualData b = dual_matrices(two_three, {1, 4}, 6, 3);
    EXPECT_EQ(b.v(3, 2), -2);
    EXPECT_EQ(b.v(4, 3), -3);
    EXPECT_EQ(b.v(4, 2), 6);
    EXPECT_EQ(b.v(4, 4), 1);
}

TEST(DualMatrices, ErrorPaths)
{
    const std::vector<std::int64_t> big{11};
    try {
        (void)dual_matrices(big, {1, 3}, 4, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapViolation);
    }
    const std::vector<std::int64_t> neg{-11};
    EXPECT_THROW((void)dual_matrices(neg, {1, 3}, 4, 10), Error);
    const std::vector<std::int64_t> two{1, 2};
    try {
        (void)dual_matrices(two, {1, 3}, 4, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInstance);
    }
    EXPECT_THROW((void)dual_matrices(two, {1, 4}, 3, 10), Error);
}

TEST(DualMatrices, RandomAgainstBackSubstitution)
{
    std::mt19937_64 rng(22);
    for (int k = 0; k < 300; ++k) {
        const int size = static_cast<int>(gen::uniform(rng, 3, 15));
        const GapWindow w = gen::random_window(rng, size);
        std::vector<std::int64_t> n;
        for (int i = w.s + 1; i <= w.t - 1; ++i) n.push_back(gen::uniform(rng, -100, 100));
        const DualData dual = dual_matrices(n, w, size, 100);
        const auto v = oracle::dual_by_back_substitution(n, w.s, w.t, size);
        for (int i = 1; i <= size; ++i)
            for (int j = 1; j <= size; ++j) ASSERT_EQ(dual.v(i, j), v[i - 1][j - 1]);
        ASSERT_EQ(determinant(to_rational(dual.w)), 1);
    }
}

TEST(MatrixHelpers, InvertAndDeterminant)
{
    RationalMatrix m(2);
    m(1, 1) = 0; m(1, 2) = 2;
    m(2, 1) = 3; m(2, 2) = 1;
    const auto inv = invert(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ((*inv)(1, 1), Rational(-1, 6));
    EXPECT_EQ((*inv)(1, 2), Rational(1, 3));
    EXPECT_EQ(determinant(m), -6);
    RationalMatrix singular(2);
    singular(1, 1) = 1; singular(1, 2) = 2;
    singular(2, 1) = 2; singular(2, 2) = 4;
    EXPECT_FALSE(invert(singular));
    EXPECT_EQ(determinant(singular), 0);
}

TEST(VNormCertify, Examples)
{
    const std::vector<std::int64_t> zeros{0, 0};
    const auto z = dual_matrices(zeros, {1, 4}, 5, 0);
    const auto zc = v_norm_certify(z, rats({9, 7, 7, 2, 1}), Rational(1));
    EXPECT_EQ(zc.bounds, rats({9, 7, 7, 2, 1}));
    EXPECT_EQ(zc.minimal_inflation, 1);
    EXPECT_TRUE(zc.all_pass());

    const std::vector<std::int64_t> five{5};
    const auto a = v_norm_certify(dual_matrices(five, {1, 3}, 4, 5), rats({8, 4, 2, 1}), Rational(5));
    EXPECT_EQ(a.bounds[2], 22);
    EXPECT_EQ(a.targets[2], 4);
    EXPECT_EQ(a.minimal_inflation, Rational(11, 2));
    EXPECT_FALSE(a.pass[2]);
    EXPECT_FALSE(a.all_pass());

    const std::vector<std::int64_t> two_three{2, 3};
    const auto b = v_norm_certify(dual_matrices(two_three, {1, 4}, 6, 3),
                                  rats({32, 16, 8, 4, 2, 1}), Rational(31, 4));
    EXPECT_EQ(b.bounds[3], 124);
    EXPECT_EQ(b.targets[3], 16);
    EXPECT_EQ(b.minimal_inflation, Rational(31, 4));
    EXPECT_TRUE(b.all_pass());
}

TEST(VNormCertify, ErrorPaths)
{
    const std::vector<std::int64_t> five{5};
    const auto dual = dual_matrices(five, {1, 3}, 4, 5);
    EXPECT_THROW((void)v_norm_certify(dual, rats({8, 4, 2}), Rational(1)), Error);
    EXPECT_THROW((void)v_norm_certify(dual, rats({8, 4, 2, 0}), Rational(1)), Error);
    EXPECT_THROW((void)v_norm_certify(dual, rats({8, 4, 5, 1}), Rational(1)), Error);
    EXPECT_THROW((void)v_norm_certify(dual, rats({8, 4, 2, 1}), Rational(1, 2)), Error);
}

// n = 0 passes with C = 1; the bound grows with every |n_i| and every X_k.
TEST(VNormCertify, Monotonicity)
{
    std::mt19937_64 rng(23);
    for (int k = 0; k < 300; ++k) {
        const int size = static_cast<int>(gen::uniform(rng, 3, 10));
        const GapWindow w = gen::random_window(rng, size);
        std::vector<std::int64_t> n;
        for (int i = w.s + 1; i <= w.t - 1; ++i) n.push_back(gen::uniform(rng, -20, 20));
        auto norms = gen::random_r(rng, size, 9);
        for (auto& x : norms) x = abs(x) + 1;
        std::sort(norms.begin(), norms.end(), [](const Rational& a, const Rational& b) { return a > b; });

        const std::vector<std::int64_t> zero(n.size(), 0);
        const auto base = v_norm_certify(dual_matrices(zero, w, size, 0), norms, Rational(1));
        ASSERT_TRUE(base.all_pass());
        ASSERT_EQ(base.minimal_inflation, 1);

        const auto cert = v_norm_certify(dual_matrices(n, w, size, 20), norms, Rational(1));
        if (!n.empty()) {
            auto bigger = n;
            const auto pick = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<int>(n.size()) - 1));
            bigger[pick] += bigger[pick] >= 0 ? 1 : -1;
            const auto grown = v_norm_certify(dual_matrices(bigger, w, size, 21), norms, Rational(1));
            for (int i = 0; i < size; ++i) ASSERT_GE(grown.bounds[i], cert.bounds[i]);
        }
        auto larger = norms;
        larger[0] += 1;
        const auto up = v_norm_certify(dual_matrices(n, w, size, 20), larger, Rational(1));
        for (int i = 0; i < size; ++i) ASSERT_GE(up.bounds[i], cert.bounds[i]);
    }
}
