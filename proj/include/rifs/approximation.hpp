#pragma once

#include "rifs/orlicz.hpp"
#include "rifs/space.hpp"
#include "rifs/step_function.hpp"
#include "rifs/verdict.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rifs {

// Candidate set A: a finite list of members, optionally replaced by its
// convex hull.  With rearrangement_closed set, every a* must itself be a
// member (checked up to canonical_tol on construction).
class CandidateSet {
public:
    explicit CandidateSet(std::vector<StepFunction> members, bool hull = false,
                          bool rearrangement_closed = false);

    const std::vector<StepFunction>& members() const { return members_; }
    bool hull() const { return hull_; }
    bool rearrangement_closed() const { return rearrangement_closed_; }

private:
    std::vector<StepFunction> members_;
    bool hull_;
    bool rearrangement_closed_;
};

// Index of a member equal to a* for every member a, or the first offender.
std::optional<std::size_t> rearrangement_closure_offender(const std::vector<StepFunction>& members);

struct Minimizer {
    std::vector<double> coefficients;
    StepFunction point;
    double gap = 0.0;
};

struct ProjectionResult {
    double distance = 0.0;
    std::vector<Minimizer> minimizers;
    std::size_t iterations = 0;
    // Accepted iterates of the optimizer: coefficients and ||x - a_k||.
    std::vector<std::vector<double>> trace_coefficients;
    std::vector<double> trace_values;
};

inline constexpr double tie_tol = 1e-10;
inline constexpr std::size_t max_hull_members = 12;
inline constexpr std::size_t max_line_searches = 100000;

// Exact argmin over the members; all members within tie_tol are reported.
ProjectionResult project_finite(const StepFunction& x, const CandidateSet& A, const SpaceHandle& space);

// Minimizes ||x - sum theta_i a_i|| over the simplex by pairwise coordinate
// descent with golden-section line searches, starting from the best member.
ProjectionResult project_hull(const StepFunction& x, const CandidateSet& A, const SpaceHandle& space,
                              double tol = 1e-6);

// Combination sum theta_i a_i.
StepFunction combination(const std::vector<StepFunction>& members, const std::vector<double>& theta);

struct SequenceTerm {
    StepFunction difference; // a_k - x
    double gap = 0.0;        // ||a_k - x|| - dist(x, A)
};

// n terms sampled from the optimizer trajectory (constant for finite A);
// gaps are nonincreasing and the last term is the reported minimizer.
std::vector<SequenceTerm> minimizing_sequence(const StepFunction& x, const CandidateSet& A,
                                              const SpaceHandle& space, std::size_t n, double tol = 1e-6);

// a' ≺ a for every member a'.
bool k_upper_bound_check(const StepFunction& a, const CandidateSet& A);

struct ExperimentReport {
    Verdict rearrangement_closed;
    Verdict members_dominated_by_x; // A ≺ x
    Verdict x_dominated_by_members; // x ≺ a for every a
    Verdict koc;
    bool hypotheses_hold = false;
    ProjectionResult projection; // of x* onto A
    bool minimizer_set_nonempty = false;
};

ExperimentReport dominated_projection_experiment(const StepFunction& x, const CandidateSet& A,
                                                 const OrliczSpec& psi, Domain alpha);

} // namespace rifs
