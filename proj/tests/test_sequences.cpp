#include "oracles.hpp"
#include "support.hpp"

#include <npoly/sequences.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace npoly;

namespace {

std::vector<std::int64_t> values(const ESequence& e)
{
    return {e.values().begin(), e.values().end()};
}

RSequence rs(std::initializer_list<int> xs)
{
    std::vector<Rational> v;
    for (int x : xs) v.emplace_back(x);
    return RSequence(std::move(v));
}

} // namespace

TEST(CurveProfile, DerivesRank)
{
    const CurveProfile p(7, 2);
    EXPECT_EQ(p.rank(), 6);
}

TEST(CurveProfile, RejectsViolatedInequality)
{
    try {
        CurveProfile(4, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidProfile);
        EXPECT_NE(std::string(e.what()).find("d >= 2g + 1"), std::string::npos);
    }
    try {
        CurveProfile(3, -1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("g >= 0"), std::string::npos);
    }
}

TEST(FSequence, Examples)
{
    EXPECT_EQ(values(f_sequence(CurveProfile(5, 0))), (std::vector<std::int64_t>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(values(f_sequence(CurveProfile(7, 2))), (std::vector<std::int64_t>{0, 1, 2, 3, 5, 7}));
    EXPECT_EQ(values(f_sequence(CurveProfile(3, 1))), (std::vector<std::int64_t>{0, 1, 3}));
}

TEST(FSequence, MatchesPiecewiseOracleAndShape)
{
    for (int d = 1; d <= 40; ++d) {
        for (int g = 0; 2 * g + 1 <= d; ++g) {
            const auto f = values(f_sequence(CurveProfile(d, g)));
            ASSERT_EQ(f, oracle::f_sequence(d, g)) << d << ' ' << g;
            ASSERT_EQ(f.front(), 0);
            ASSERT_EQ(f.back(), d);
            int gap_two = 0;
            for (std::size_t k = 1; k < f.size(); ++k) {
                const auto gap = f[k] - f[k - 1];
                ASSERT_TRUE(gap == 1 || gap == 2);
                gap_two += gap == 2;
            }
            ASSERT_EQ(gap_two, g);
        }
    }
}

TEST(ValidateWindow, Examples)
{
    EXPECT_TRUE(validate_window(6, {1, 3}, WindowRegime::Strict));
    const Verdict v = validate_window(4, {1, 3}, WindowRegime::Strict);
    EXPECT_FALSE(v);
    EXPECT_NE(v.reason.find("t <= N - 2"), std::string::npos);
    EXPECT_TRUE(validate_window(4, {1, 3}, WindowRegime::Relaxed));
}

TEST(ValidateWindow, EdgeCases)
{
    EXPECT_FALSE(validate_window(6, {0, 3}, WindowRegime::Relaxed));
    EXPECT_FALSE(validate_window(6, {3, 3}, WindowRegime::Relaxed));
    EXPECT_FALSE(validate_window(6, {1, 7}, WindowRegime::Relaxed));
    EXPECT_TRUE(validate_window(6, {2, 3}, WindowRegime::Relaxed)); // t = s + 1
    EXPECT_FALSE(validate_window(2, {1, 2}, WindowRegime::Relaxed));
}

TEST(ValidateInstance, Examples)
{
    EXPECT_TRUE(validate_instance(ESequence({0, 0, 1, 2, 4}), rs({3, 2, 1, 1, 0}), {1, 3}));

    const RSequence r = rs({1, 1, 1, 1});
    EXPECT_TRUE(validate_instance(ESequence({0, 1, 1, 2}), r, {2, 3}));
    EXPECT_EQ(normalize(r), rs({0, 0, 0, 0}));

    const Verdict v = validate_instance(ESequence({0, 2, 1}), rs({0, 0, 0}), {1, 2});
    EXPECT_FALSE(v);
    EXPECT_EQ(v.index, 3);
}

TEST(ValidateInstance, ErrorPaths)
{
    EXPECT_FALSE(validate_instance(ESequence({0, 1}), rs({1, 0, 0}), {1, 2}));
    Verdict v = validate_instance(ESequence({1, 1, 2}), rs({0, 0, 0}), {1, 2});
    EXPECT_EQ(v.index, 1);
    v = validate_instance(ESequence({0, 1, 2}), rs({2, 1, 3}), {1, 2});
    EXPECT_EQ(v.index, 3);
    EXPECT_NE(v.reason.find("r-sequence"), std::string::npos);
    v = validate_instance(ESequence({0, 1, 2, 3}), rs({3, 2, 1, 0}), {1, 3});
    EXPECT_FALSE(v);
    EXPECT_EQ(v.index, 2);
    EXPECT_NE(v.reason.find("plateau"), std::string::npos);
}

TEST(ValidateInstance, NormalizeSubtractsLast)
{
    const RSequence r({Rational(7, 2), Rational(1), Rational(-1, 3)});
    EXPECT_EQ(normalize(r), RSequence({Rational(23, 6), Rational(4, 3), Rational(0)}));
}

// Arbitrary finite inputs always produce accept or a structured rejection.
TEST(ValidateInstance, TotalOnRandomGarbage)
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 5000; ++k) {
        const int ne = static_cast<int>(gen::uniform(rng, 0, 8));
        const int nr = static_cast<int>(gen::uniform(rng, 0, 8));
        std::vector<std::int64_t> e;
        for (int i = 0; i < ne; ++i) e.push_back(gen::uniform(rng, -3, 5));
        std::vector<Rational> r;
        for (int i = 0; i < nr; ++i) r.emplace_back(gen::uniform(rng, -5, 5));
        const GapWindow w{static_cast<int>(gen::uniform(rng, -2, 10)),
                          static_cast<int>(gen::uniform(rng, -2, 10))};
        Verdict v;
        ASSERT_NO_THROW(v = validate_instance(ESequence(e), RSequence(r), w));
        if (!v) ASSERT_FALSE(v.reason.empty());
        for (auto regime : {WindowRegime::Strict, WindowRegime::Relaxed}) {
            ASSERT_NO_THROW((void)validate_window(ne, w, regime));
        }
    }
}
