#include "cli/fuzz.hpp"

#include <npoly/error.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace npoly::cli {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform integer in [lo, hi]; std::uniform_int_distribution is not
// reproducible across standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return lo + static_cast<std::int64_t>(x % range);
}

struct Outcome {
    bool violation = false;
    bool mismatch = false;
    Rational slack;
    std::optional<bool> tightness;
};

Outcome run_one(const FuzzConfig& config, std::uint64_t index, const Instance& instance)
{
    const auto& [e, r, window] = instance;
    require(validate_instance(e, r, window), ErrorKind::Internal);

    Outcome out;
    const Prop1Report report =
        prop1_verify(e, r, window, {.brute_force_cap = config.brute_force_cap, .cross_check = false});
    const ChainMinimum oracle = min_chain_bruteforce(e, r, config.brute_force_cap);
    out.mismatch = oracle.value != report.chain_minimum;
    out.violation = !report.holds();
    out.slack = report.slack;

    if (index % static_cast<std::uint64_t>(config.tightness_every) == 0 &&
        sgn(bound_constant(e, window).value) > 0) {
        const TightnessCertificate cert = tightness_certificate(e, window, config.brute_force_cap);
        out.tightness = cert.exact() && cert.rhs_sum == 1;
    }
    return out;
}

} // namespace

void validate_config(const FuzzConfig& config)
{
    const auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
    if (config.count < 1) bad("count must be >= 1");
    if (config.n_min < 3) bad("n_min must be >= 3");
    if (config.n_max < config.n_min) bad("n_max must be >= n_min");
    if (config.e_max < 0) bad("e_max must be >= 0");
    if (config.r_denominator_cap < 1) bad("r_denominator_cap must be >= 1");
    if (config.tightness_every < 1) bad("tightness_every must be >= 1");
    if (config.jobs < 1) bad("jobs must be >= 1");
    if (config.n_max > config.brute_force_cap) {
        throw Error(ErrorKind::CapExceeded,
                    "n_max = " + std::to_string(config.n_max) + " exceeds the brute-force cap " +
                        std::to_string(config.brute_force_cap));
    }
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(seed + (index + 1) * kGolden);
}

Instance generate_instance(const FuzzConfig& config, std::uint64_t index)
{
    std::mt19937_64 rng(instance_seed(config.seed, index));

    const int n = static_cast<int>(draw(rng, config.n_min, config.n_max));
    const int s = static_cast<int>(draw(rng, 1, n - 1));
    const int t = static_cast<int>(draw(rng, s + 1, n));

    const std::int64_t e_top = draw(rng, 0, 3) == 0 ? std::min(config.e_max, 4) : config.e_max;
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    for (int k = 1; k < n; ++k) e[static_cast<std::size_t>(k)] = draw(rng, 0, e_top);
    std::sort(e.begin() + 1, e.end());
    for (int j = s + 1; j <= t - 1; ++j) {
        e[static_cast<std::size_t>(j - 1)] = e[static_cast<std::size_t>(s - 1)];
    }

    std::vector<Rational> r;
    r.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (k > 0 && draw(rng, 0, 3) == 0) {
            r.push_back(r.back());
            continue;
        }
        const std::int64_t q = draw(rng, 1, config.r_denominator_cap);
        const std::int64_t p = draw(rng, -25 * q, 25 * q);
        Rational value{BigInt(p), BigInt(q)};
        value.canonicalize();
        r.push_back(std::move(value));
    }
    std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });

    return {ESequence(std::move(e)), RSequence(std::move(r)), GapWindow{s, t}};
}

CampaignReport fuzz_campaign(const FuzzConfig& config)
{
    validate_config(config);
    const auto start = std::chrono::steady_clock::now();

    const auto count = static_cast<std::size_t>(config.count);
    std::vector<Outcome> outcomes(count);
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(config.jobs));

    const auto worker = [&](std::size_t job) {
        try {
            for (std::size_t k = job; k < count; k += static_cast<std::size_t>(config.jobs)) {
                outcomes[k] = run_one(config, k, generate_instance(config, k));
            }
        } catch (...) {
            failures[job] = std::current_exception();
        }
    };

    if (config.jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        for (int job = 0; job < config.jobs; ++job) {
            threads.emplace_back(worker, static_cast<std::size_t>(job));
        }
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    CampaignReport report;
    report.config = config;
    for (std::size_t k = 0; k < count; ++k) {
        const Outcome& o = outcomes[k];
        ++report.instances;
        if (o.mismatch) ++report.hull_brute_mismatches;
        if (o.violation) {
            ++report.violations;
            report.counterexamples.push_back({k, generate_instance(config, k)});
        }
        if (k == 0 || o.slack < report.min_slack) report.min_slack = o.slack;
        if (o.tightness) {
            ++report.tightness_checks_run;
            if (*o.tightness) ++report.tightness_checks_passed;
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json to_json(const CampaignReport& report, bool with_timing)
{
    const FuzzConfig& c = report.config;
    Json j = {{"config",
               {{"seed", c.seed},
                {"count", c.count},
                {"n_min", c.n_min},
                {"n_max", c.n_max},
                {"e_max", c.e_max},
                {"r_denominator_cap", c.r_denominator_cap},
                {"brute_force_cap", c.brute_force_cap},
                {"tightness_every", c.tightness_every}}},
              {"instances", report.instances},
              {"violations", report.violations},
              {"hull_brute_mismatches", report.hull_brute_mismatches},
              {"min_slack", report.min_slack},
              {"tightness_checks_run", report.tightness_checks_run},
              {"tightness_checks_passed", report.tightness_checks_passed}};
    if (with_timing) j["wall_seconds"] = report.wall_seconds;
    return j;
}

} // namespace npoly::cli
