#pragma once

#include <npoly/bounds.hpp>
#include <npoly/json_io.hpp>

#include <cstdint>
#include <vector>

namespace npoly::cli {

struct FuzzConfig {
    std::uint64_t seed = 0;
    int count = 1;
    int n_min = 4;
    int n_max = 12;
    int e_max = 50;
    int r_denominator_cap = 1000;
    int brute_force_cap = kDefaultBruteForceCap;
    int tightness_every = 100;
    int jobs = 1;
};

/// Error(InvalidArgument) for a malformed config, Error(CapExceeded) when
/// n_max is above the brute-force cap.
void validate_config(const FuzzConfig& config);

struct Counterexample {
    std::uint64_t index = 0;
    Instance instance;
};

struct CampaignReport {
    FuzzConfig config;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    std::uint64_t hull_brute_mismatches = 0;
    Rational min_slack;
    std::uint64_t tightness_checks_run = 0;
    std::uint64_t tightness_checks_passed = 0;
    double wall_seconds = 0.0;
    std::vector<Counterexample> counterexamples;
};

/// Sub-seed for instance `index`: one splitmix64 step from
/// seed + (index + 1) * 0x9e3779b97f4a7c15.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// The "splitmix-mt" generator. From the instance sub-seed, an mt19937_64
/// stream (bounded draws by rejection, so the output is identical on every
/// standard library) produces, in order:
///   N uniform in [n_min, n_max]; s uniform in [1, N-1]; t uniform in [s+1, N];
///   a range flag (1 in 4 instances draw e from [0, min(e_max, 4)] to force
///   ties, otherwise [0, e_max]); N-1 e-values, sorted, prefixed by e_1 = 0,
///   then flattened to e_s on the plateau s < j < t;
///   N r-values p/q with q uniform in [1, cap], p uniform in [-25q, 25q],
///   each repeating its predecessor with probability 1/4, sorted descending.
Instance generate_instance(const FuzzConfig& config, std::uint64_t index);

/// Runs `count` instances: validation, chain-minimum inequality check, hull vs
/// brute force, and a tightness certificate on every `tightness_every`-th
/// instance. Work is split across `jobs` threads and merged in index order,
/// so everything except wall_seconds is schedule-independent.
CampaignReport fuzz_campaign(const FuzzConfig& config);

Json to_json(const CampaignReport& report, bool with_timing);

} // namespace npoly::cli
