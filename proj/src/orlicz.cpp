#include "rifs/orlicz.hpp"

#include "rifs/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace rifs {

namespace {

constexpr double inv_phi = 0.6180339887498948482; // 1/golden ratio

// Maximizes a unimodal f on [lo, hi]; returns the best abscissa.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                  int max_iter = 400)
{
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < max_iter && (hi - lo) > rel_tol * std::max(1.0, std::abs(hi)); ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? x1 : x2;
}

} // namespace

OrliczSpec OrliczSpec::power(double p, double c)
{
    OrliczSpec s;
    s.family_ = OrliczFamily::power;
    s.p_ = p;
    s.c_ = c;
    s.validate();
    return s;
}

OrliczSpec OrliczSpec::shifted_power(double a, double p, double c)
{
    OrliczSpec s;
    s.family_ = OrliczFamily::shifted_power;
    s.a_ = a;
    s.p_ = p;
    s.c_ = c;
    s.validate();
    return s;
}

OrliczSpec OrliczSpec::exp_minus_one(double c)
{
    OrliczSpec s;
    s.family_ = OrliczFamily::exp_minus_one;
    s.c_ = c;
    s.validate();
    return s;
}

OrliczSpec OrliczSpec::table(std::vector<std::pair<double, double>> points, TableTail tail)
{
    OrliczSpec s;
    s.family_ = OrliczFamily::table;
    std::sort(points.begin(), points.end());
    s.points_ = std::move(points);
    s.tail_ = tail;
    s.validate();
    return s;
}

void OrliczSpec::validate() const
{
    if (!(c_ > 0.0) || !std::isfinite(c_))
        fail(ErrorCode::invalid_argument, "Orlicz scale must be positive and finite");
    switch (family_) {
    case OrliczFamily::power:
    case OrliczFamily::shifted_power:
        if (!(p_ >= 1.0) || !std::isfinite(p_))
            fail(ErrorCode::invalid_argument, "Orlicz exponent must be >= 1 for convexity");
        if (!(a_ >= 0.0) || !std::isfinite(a_))
            fail(ErrorCode::invalid_argument, "Orlicz shift must be >= 0");
        break;
    case OrliczFamily::exp_minus_one:
        break;
    case OrliczFamily::table: {
        if (points_.size() < 2)
            fail(ErrorCode::invalid_argument, "Orlicz table needs at least two points");
        if (points_.front() != std::pair{0.0, 0.0})
            fail(ErrorCode::invalid_argument, "Orlicz table must start at (0, 0)");
        double prev_slope = 0.0;
        for (std::size_t i = 1; i < points_.size(); ++i) {
            const auto [u0, y0] = points_[i - 1];
            const auto [u1, y1] = points_[i];
            if (!(u1 > u0) || !std::isfinite(u1) || !std::isfinite(y1) || y1 < 0.0)
                fail(ErrorCode::invalid_argument, "Orlicz table points must be finite, increasing, nonnegative");
            const double slope = (y1 - y0) / (u1 - u0);
            if (slope < prev_slope - 1e-12 * std::max(1.0, prev_slope))
                fail(ErrorCode::invalid_argument, "Orlicz table is not convex");
            prev_slope = slope;
        }
        if (tail_ == TableTail::linear && !(prev_slope > 0.0))
            fail(ErrorCode::invalid_argument, "Orlicz table with linear tail must end with a positive slope");
        break;
    }
    }
    // Probe the defining properties on a grid as a final guard.
    double prev = 0.0;
    for (double u = 1e-3; u < 1e3; u *= 1.5) {
        const double v = (*this)(u);
        if (v < prev || v < 0.0)
            fail(ErrorCode::invalid_argument, "Orlicz function is not nondecreasing on the probe grid");
        prev = v;
    }
}

double OrliczSpec::operator()(double u) const
{
    u = std::abs(u);
    switch (family_) {
    case OrliczFamily::power:
        return c_ * std::pow(u, p_);
    case OrliczFamily::shifted_power:
        return u <= a_ ? 0.0 : c_ * std::pow(u - a_, p_);
    case OrliczFamily::exp_minus_one:
        return c_ * std::expm1(u);
    case OrliczFamily::table: {
        const auto it = std::upper_bound(points_.begin(), points_.end(), u,
                                         [](double x, const auto& pt) { return x < pt.first; });
        if (it == points_.end()) {
            const auto& last = points_.back();
            if (u == last.first)
                return last.second;
            if (tail_ == TableTail::infinite)
                return infinity;
            const auto& before = points_[points_.size() - 2];
            const double slope = (last.second - before.second) / (last.first - before.first);
            return last.second + slope * (u - last.first);
        }
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        return lo.second + (hi.second - lo.second) * (u - lo.first) / (hi.first - lo.first);
    }
    }
    return 0.0;
}

double OrliczSpec::derivative(double u) const
{
    u = std::abs(u);
    switch (family_) {
    case OrliczFamily::power:
        return p_ == 1.0 ? c_ : c_ * p_ * std::pow(u, p_ - 1.0);
    case OrliczFamily::shifted_power:
        if (u < a_)
            return 0.0;
        return p_ == 1.0 ? c_ : c_ * p_ * std::pow(u - a_, p_ - 1.0);
    case OrliczFamily::exp_minus_one:
        return c_ * std::exp(u);
    case OrliczFamily::table: {
        auto it = std::upper_bound(points_.begin(), points_.end(), u,
                                   [](double x, const auto& pt) { return x < pt.first; });
        if (it == points_.end()) {
            if (tail_ == TableTail::infinite)
                return infinity;
            it = points_.end() - 1;
        }
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        return (hi.second - lo.second) / (hi.first - lo.first);
    }
    }
    return 0.0;
}

bool OrliczSpec::finite_valued() const
{
    return family_ != OrliczFamily::table || tail_ == TableTail::linear;
}

double young_conjugate_numeric(const OrliczSpec& psi, double u)
{
    u = std::abs(u);
    if (u == 0.0)
        return 0.0;
    auto objective = [&](double v) {
        const double y = psi(v);
        return std::isinf(y) ? -infinity : u * v - y;
    };
    // Expand until the concave objective turns down.
    double hi = 1.0;
    while (objective(2.0 * hi) > objective(hi)) {
        hi *= 2.0;
        if (hi > 1e15)
            return infinity;
    }
    hi *= 2.0;
    const double v = golden_max(objective, 0.0, hi, 1e-12);
    return std::max(0.0, std::max(objective(v), objective(0.0)));
}

double young_conjugate(const OrliczSpec& psi, double u)
{
    u = std::abs(u);
    if (u == 0.0)
        return 0.0;
    if (psi.family() == OrliczFamily::power) {
        const double p = psi.exponent();
        const double c = psi.scale();
        if (p == 1.0)
            return u <= c ? 0.0 : infinity;
        // Stationary point c p v^(p-1) = u.
        const double v = std::pow(u / (c * p), 1.0 / (p - 1.0));
        return u * v - c * std::pow(v, p);
    }
    return young_conjugate_numeric(psi, u);
}

namespace {

// rho(x / lambda) without materializing the scaled function.
double scaled_modular(const StepFunction& x, const OrliczSpec& psi, double lambda)
{
    double sum = 0.0;
    for (const auto& p : x.pieces()) {
        sum += p.length() * psi(p.v / lambda);
        if (std::isinf(sum))
            return infinity;
    }
    return sum;
}

} // namespace

double modular(const StepFunction& x, const OrliczSpec& psi)
{
    return scaled_modular(x, psi, 1.0);
}

double luxemburg_norm(const StepFunction& x, const OrliczSpec& psi)
{
    if (x.is_zero())
        return 0.0;
    auto rho = [&](double lambda) { return scaled_modular(x, psi, lambda); };
    double hi = x.sup_norm();
    int guard = 0;
    while (rho(hi) > 1.0) {
        hi *= 2.0;
        if (++guard > 2000 || std::isinf(hi))
            fail(ErrorCode::non_convergence, "Luxemburg search never reached rho <= 1");
    }
    double lo = hi;
    guard = 0;
    while (rho(lo) <= 1.0) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 2000 || lo == 0.0)
            fail(ErrorCode::non_convergence, "Luxemburg search found rho <= 1 at every scale");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (rho(mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double orlicz_norm(const StepFunction& x, const OrliczSpec& psi)
{
    if (x.is_zero())
        return 0.0;
    const double lux = luxemburg_norm(x, psi);
    // lambda (1 + rho(x / lambda)) is convex in lambda = 1/k, hence unimodal
    // in log(lambda); the minimizer lies below 2 * lux.
    auto amemiya = [&](double log_lambda) {
        const double lambda = std::exp(log_lambda);
        return lambda * (1.0 + scaled_modular(x, psi, lambda));
    };
    auto negated = [&](double s) { return -amemiya(s); };
    // Walk down from 2 * lux in factors of 2 until the objective turns up;
    // the minimizer is then bracketed by the neighbours of the best point.
    const double step = std::log(2.0);
    const double floor = std::log(lux) - 12.0 * std::log(10.0);
    double best_s = std::log(2.0 * lux);
    double best = amemiya(best_s);
    double s = best_s - step;
    for (; s >= floor; s -= step) {
        const double v = amemiya(s);
        if (!(v < best))
            break;
        best = v;
        best_s = s;
    }
    if (s < floor)
        return best;
    const double found = golden_max(negated, best_s - step, best_s + step, 1e-13, 600);
    return std::min(best, amemiya(found));
}

} // namespace rifs
