#pragma once

// Random instance generators shared by the unit tests.

#include <npoly/sequences.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace npoly::gen {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::vector<std::int64_t> random_e(std::mt19937_64& rng, int n, std::int64_t e_max)
{
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    for (int k = 1; k < n; ++k) e[k] = uniform(rng, 0, e_max);
    std::sort(e.begin() + 1, e.end());
    return e;
}

inline void flatten_plateau(std::vector<std::int64_t>& e, GapWindow w)
{
    for (int j = w.s + 1; j <= w.t - 1; ++j) e[j - 1] = e[w.s - 1];
}

inline std::vector<Rational> random_r(std::mt19937_64& rng, int n, std::int64_t den_cap)
{
    std::vector<Rational> r;
    for (int k = 0; k < n; ++k) {
        const std::int64_t q = uniform(rng, 1, den_cap);
        Rational x{BigInt(uniform(rng, -20 * q, 20 * q)), BigInt(q)};
        x.canonicalize();
        r.push_back(x);
    }
    std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return r;
}

inline GapWindow random_window(std::mt19937_64& rng, int n)
{
    const int s = static_cast<int>(uniform(rng, 1, n - 1));
    return {s, static_cast<int>(uniform(rng, s + 1, n))};
}

struct RandomInstance {
    ESequence e;
    RSequence r;
    GapWindow window;
};

inline RandomInstance random_instance(std::mt19937_64& rng, int n_min, int n_max,
                                      std::int64_t e_max = 50, std::int64_t den_cap = 30)
{
    const int n = static_cast<int>(uniform(rng, n_min, n_max));
    const GapWindow w = random_window(rng, n);
    auto e = random_e(rng, n, e_max);
    flatten_plateau(e, w);
    return {ESequence(std::move(e)), RSequence(random_r(rng, n, den_cap)), w};
}

} // namespace npoly::gen
