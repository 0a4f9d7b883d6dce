#pragma once

#include "rifs/space.hpp"
#include "rifs/step_function.hpp"
#include "rifs/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rifs {

struct Range {
    double lo;
    double hi;
};

struct TrialConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t max_pieces = 8;
    Range value_range{0.1, 10.0};
    Range length_range{0.01, 10.0};
    double tolerance = 1e-9;
    // Worker threads; results do not depend on it.
    unsigned jobs = 1;

    void validate() const;
};

// Deterministic generator for trial `index` of a run seeded with `seed`.
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t index);

// Random step function: piece count uniform in [1, max_pieces], lengths
// log-uniform in length_range (with occasional gaps of the same law),
// values uniform in value_range with random signs.  On [0, 1) the layout is
// rescaled to fit.
StepFunction random_step_function(std::mt19937_64& rng, const TrialConfig& cfg,
                                  Domain alpha = Domain::infinite, bool nonnegative = false);

struct ViolationWitness {
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::string description;
    double magnitude = 0.0;
    std::vector<StepFunction> inputs;
};

struct ProbeReport {
    std::string property;
    std::size_t trials_run = 0;
    std::size_t violation_count = 0;
    // At most max_reported_witnesses are kept, lowest trial index first.
    std::vector<ViolationWitness> violations;

    bool violation_found() const { return violation_count > 0; }
    std::string verdict() const { return violation_found() ? "violation" : "no-violation-found"; }
};

inline constexpr std::size_t max_reported_witnesses = 10;

using RearrangeFn = std::function<StepFunction(const StepFunction&)>;

// Rearrangement and maximal-function laws over random inputs.  `rearranger`
// replaces the library rearrangement in self-test mode.
ProbeReport run_core_suite(const TrialConfig& cfg, RearrangeFn rearranger = {});

// x ≺ y implies ||x|| <= ||y||, with y = x* + b* for a random bump b >= 0.
ProbeReport run_kmono_suite(const SpaceHandle& space, const TrialConfig& cfg);

struct DukmRow {
    std::size_t n;
    double norm_x;
    double norm_y;
    double norm_difference; // ||y_n* - x_n*||
    double phi_ratio;       // phi(2n) / (2n)
    bool chain_holds;       // x_{n+1} ≺ x_n ≺ y_n
};

// x_n = (1/2n) chi_[0,2n), y_n = (1/n) chi_[0,n), n = 1..n_max.
std::vector<DukmRow> dukm_sequence_run(const SpaceHandle& space, std::size_t n_max);

struct FundamentalLimits {
    Verdict phi_infinite;
    Verdict embeds_l1;
    double ratio_limit = 0.0;
    // Orlicz spaces only: K-order continuity, and its conjunction with
    // phi(infinity) = infinity.
    std::optional<Verdict> koc;
    std::optional<Verdict> koc_and_phi_infinite;
};

FundamentalLimits fundamental_limits(const SpaceHandle& space);

// Search for x != y on the unit sphere of the dim_grid-cell subspace with
// ||x + y|| >= 2 - tolerance and ||x - y|| >= 0.1.
ProbeReport rotundity_probe(const SpaceHandle& space, std::size_t dim_grid, const TrialConfig& cfg);

// Search for x ≺ y with x* != y* and equal norms.  Seeds: the L^1 pair
// chi_[0,2), 2 chi_[0,1) and the pair chi_[0,1) + 0.5 chi_[1,3), chi_[0,2);
// random pairs come from block averages of y*.
ProbeReport skm_probe(const SpaceHandle& space, const TrialConfig& cfg);

} // namespace rifs
