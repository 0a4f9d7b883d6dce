#include "rifs/rearrangement.hpp"

#include "rifs/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rifs {

double distribution(const StepFunction& x, double lambda)
{
    if (!(lambda >= 0.0))
        fail(ErrorCode::invalid_argument, "distribution level must be nonnegative");
    double m = 0.0;
    for (const auto& p : x.pieces())
        if (std::abs(p.v) > lambda)
            m += p.length();
    return m;
}

namespace {

// Indices of x's pieces ordered by decreasing |v|, ties by source order.
std::vector<std::size_t> decreasing_order(const StepFunction& x)
{
    const auto& pieces = x.pieces();
    std::vector<std::size_t> order(pieces.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(pieces[a].v) > std::abs(pieces[b].v);
    });
    return order;
}

} // namespace

StepFunction rearrange(const StepFunction& x)
{
    const auto& pieces = x.pieces();
    std::vector<Piece> out;
    out.reserve(pieces.size());
    double cursor = 0.0;
    for (std::size_t i : decreasing_order(x)) {
        const double len = pieces[i].length();
        out.push_back({cursor, cursor + len, std::abs(pieces[i].v)});
        cursor += len;
    }
    return StepFunction(std::move(out), x.alpha());
}

MaximalCurve::MaximalCurve(const StepFunction& x)
{
    const StepFunction star = rearrange(x);
    breaks_.assign(1, 0.0);
    levels_.clear();
    masses_.clear();
    double integral = 0.0;
    for (const auto& p : star.pieces()) {
        levels_.push_back(p.v);
        masses_.push_back(integral - p.v * p.t0);
        integral += p.v * p.length();
        breaks_.push_back(p.t1);
    }
    levels_.push_back(0.0);
    masses_.push_back(integral);
}

double MaximalCurve::operator()(double t) const
{
    if (t <= 0.0)
        return at_zero();
    if (std::isinf(t))
        return 0.0;
    const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    const auto k = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return levels_[k] + masses_[k] / t;
}

double default_domination_tol(const StepFunction& y)
{
    return canonical_tol * std::max(1.0, y.sup_norm());
}

namespace {

std::vector<double> merged_breaks(const MaximalCurve& a, const MaximalCurve& b)
{
    std::vector<double> points;
    points.reserve(a.breaks().size() + b.breaks().size());
    std::merge(a.breaks().begin(), a.breaks().end(), b.breaks().begin(), b.breaks().end(),
               std::back_inserter(points));
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

} // namespace

DominationGap max_domination_excess(const StepFunction& x, const StepFunction& y)
{
    const MaximalCurve cx(x), cy(y);
    DominationGap gap{0.0, cx.at_zero() - cy.at_zero()};
    for (double t : merged_breaks(cx, cy)) {
        if (t <= 0.0)
            continue;
        const double d = cx(t) - cy(t);
        if (d > gap.excess)
            gap = {t, d};
    }
    return gap;
}

bool hlp_dominates(const StepFunction& x, const StepFunction& y, double tol)
{
    if (!(tol >= 0.0))
        fail(ErrorCode::invalid_argument, "domination tolerance must be nonnegative");
    const MaximalCurve cx(x), cy(y);
    if (cx.at_zero() > cy.at_zero() + tol)
        return false;
    for (double t : merged_breaks(cx, cy)) {
        if (t > 0.0 && cx(t) > cy(t) + tol)
            return false;
    }
    // Beyond the last breakpoint both curves decay like mass/t, so the
    // difference tends to 0 and the last endpoint already decided it.
    return true;
}

bool hlp_dominates(const StepFunction& x, const StepFunction& y)
{
    return hlp_dominates(x, y, default_domination_tol(y));
}

bool equimeasurable(const StepFunction& x, const StepFunction& y)
{
    return rearrange(x).approx_equal(rearrange(y));
}

double TransportMap::source_measure() const
{
    double m = 0.0;
    for (const auto& [src, dst] : pairs)
        m += src.length();
    return m;
}

double TransportMap::target_measure() const
{
    double m = 0.0;
    for (const auto& [src, dst] : pairs)
        m += dst.length();
    return m;
}

StepFunction TransportMap::pull_back(const StepFunction& f) const
{
    std::vector<Piece> out;
    for (const auto& [src, dst] : pairs) {
        const double shift = src.t0 - dst.t0;
        for (const auto& p : f.pieces()) {
            const double lo = std::max(p.t0, dst.t0);
            const double hi = std::min(p.t1, dst.t1);
            if (hi > lo)
                out.push_back({lo + shift, hi + shift, p.v});
        }
    }
    return StepFunction(std::move(out), f.alpha());
}

TransportMap ryff_transport(const StepFunction& x)
{
    TransportMap map;
    const auto& pieces = x.pieces();
    double cursor = 0.0;
    for (std::size_t i : decreasing_order(x)) {
        const double len = pieces[i].length();
        map.pairs.push_back({{pieces[i].t0, pieces[i].t1}, {cursor, cursor + len}});
        cursor += len;
    }
    return map;
}

} // namespace rifs
