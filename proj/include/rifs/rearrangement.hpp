#pragma once

#include "rifs/step_function.hpp"

#include <vector>

namespace rifs {

// mu{ s : |x(s)| > lambda }.
double distribution(const StepFunction& x, double lambda);

// Decreasing rearrangement x*: nonincreasing, nonnegative, left-packed,
// equimeasurable with |x|.  Ties keep source order.
StepFunction rearrange(const StepFunction& x);

// Exact representation of the maximal function
//     x**(t) = (1/t) * integral_0^t x*(s) ds
// as x**(t) = level[k] + mass[k] / t on (breaks[k], breaks[k+1]), with the
// last pair describing the tail beyond the support (level zero).
class MaximalCurve {
public:
    MaximalCurve() = default;
    explicit MaximalCurve(const StepFunction& x);

    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& masses() const { return masses_; }

    double operator()(double t) const;
    // Limit at 0+, equal to x*(0+) and to the sup norm of the curve.
    double at_zero() const { return levels_.front(); }
    // Total integral of x*, i.e. the coefficient of 1/t in the tail.
    double total_mass() const { return masses_.back(); }

private:
    std::vector<double> breaks_{0.0};
    std::vector<double> levels_{0.0};
    std::vector<double> masses_{0.0};
};

inline MaximalCurve maximal_curve(const StepFunction& x) { return MaximalCurve(x); }

// Default domination tolerance: 1e-12 scaled by max(1, sup y**).
double default_domination_tol(const StepFunction& y);

// x ≺ y, i.e. x**(t) <= y**(t) + tol for every t > 0.  On each interval of
// the common breakpoint refinement the difference of the two curves is
// monotone, so the endpoints and the limit at 0+ decide the question.
bool hlp_dominates(const StepFunction& x, const StepFunction& y, double tol);
bool hlp_dominates(const StepFunction& x, const StepFunction& y);

// Largest t at which x**(t) - y**(t) is maximal over the refinement points,
// together with that difference.  Used to build witnesses.
struct DominationGap {
    double t;
    double excess;
};
DominationGap max_domination_excess(const StepFunction& x, const StepFunction& y);

bool equimeasurable(const StepFunction& x, const StepFunction& y);

struct Interval {
    double t0;
    double t1;
    double length() const { return t1 - t0; }
    bool operator==(const Interval&) const = default;
};

// Measure preserving map given by interval translations source -> target.
struct TransportMap {
    std::vector<std::pair<Interval, Interval>> pairs;

    bool empty() const { return pairs.empty(); }
    double source_measure() const;
    double target_measure() const;
    // f∘sigma restricted to the source intervals.
    StepFunction pull_back(const StepFunction& f) const;
};

// Ryff map sigma : supp(x) -> supp(x*) with x*∘sigma = |x| a.e. on supp(x).
TransportMap ryff_transport(const StepFunction& x);

} // namespace rifs
