#include "rifs/weight.hpp"

#include "rifs/error.hpp"
#include "rifs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rifs {

namespace {

constexpr double e_const = std::numbers::e;

bool near_minus_one(double k) { return std::abs(k + 1.0) <= exponent_tol; }

QuadratureOptions weight_quadrature()
{
    QuadratureOptions q;
    q.rel_tol = 1e-10;
    return q;
}

} // namespace

double WeightPiece::operator()(double t) const
{
    if (c == 0.0)
        return 0.0;
    double v = c * std::pow(t, a);
    if (b != 0.0)
        v *= std::pow(std::log(e_const + t), b);
    return v;
}

double power_log_integral(double a, double b, double lo, double hi)
{
    if (!(lo >= 0.0) || !(hi >= lo))
        fail(ErrorCode::invalid_argument, "power_log_integral needs 0 <= lo <= hi");
    if (hi == lo)
        return 0.0;
    if (lo == 0.0 && a <= -1.0 + exponent_tol)
        return infinity;
    if (std::isinf(hi) && Asymptotic::power_log(1.0, a, b).integral_diverges())
        return infinity;

    const double k = a + 1.0;
    if (b == 0.0) {
        if (near_minus_one(a))
            return std::log(hi / lo);
        const double upper = std::isinf(hi) ? 0.0 : std::pow(hi, k);
        const double lower = lo == 0.0 ? 0.0 : std::pow(lo, k);
        return (upper - lower) / k;
    }

    auto g = [b](double t) { return std::pow(std::log(e_const + t), b); };
    if (near_minus_one(a)) {
        // u = log t
        auto integrand = [&](double u) { return g(std::exp(u)); };
        if (std::isinf(hi))
            return integrate_to_infinity(integrand, std::log(lo), weight_quadrature()).value;
        return integrate(integrand, std::log(lo), std::log(hi), weight_quadrature()).value;
    }
    // u = t^k, dt * t^a = du / k
    const double u_lo = lo == 0.0 ? 0.0 : std::pow(lo, k);
    const double u_hi = std::isinf(hi) ? 0.0 : std::pow(hi, k);
    const double inv_k = 1.0 / k;
    auto integrand = [&](double u) { return g(std::pow(u, inv_k)); };
    const double u1 = std::min(u_lo, u_hi);
    const double u2 = std::max(u_lo, u_hi);
    return integrate(integrand, u1, u2, weight_quadrature()).value / std::abs(k);
}

WeightSpec::WeightSpec(std::vector<WeightPiece> pieces) : pieces_(std::move(pieces))
{
    if (pieces_.empty())
        fail(ErrorCode::invalid_argument, "weight needs at least one piece");
    if (pieces_.front().t0 != 0.0)
        fail(ErrorCode::invalid_argument, "weight pieces must start at 0");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        auto& p = pieces_[i];
        if (!(std::isfinite(p.c) && std::isfinite(p.a) && std::isfinite(p.b)))
            fail(ErrorCode::invalid_argument, "weight piece has a non-finite parameter");
        if (p.c < 0.0)
            fail(ErrorCode::invalid_argument, "weight must be nonnegative (c >= 0)");
        if (!(p.t1 > p.t0))
            fail(ErrorCode::invalid_argument, "weight piece is empty or reversed");
        if (std::isinf(p.t1) && i + 1 != pieces_.size())
            fail(ErrorCode::invalid_argument, "only the last weight piece may reach infinity");
        if (i > 0) {
            const double prev = pieces_[i - 1].t1;
            if (std::abs(p.t0 - prev) > canonical_tol * std::max(1.0, prev))
                fail(ErrorCode::invalid_argument, "weight pieces must partition the domain");
            p.t0 = prev;
        }
    }
}

WeightSpec WeightSpec::power(double c, double a, double b)
{
    return WeightSpec({{0.0, infinity, c, a, b}});
}

bool WeightSpec::reaches_infinity() const { return std::isinf(end()); }

const WeightPiece* WeightSpec::first_flat_piece() const
{
    for (const auto& p : pieces_)
        if (p.c == 0.0)
            return &p;
    return nullptr;
}

double WeightSpec::operator()(double t) const
{
    for (const auto& p : pieces_)
        if (t >= p.t0 && t < p.t1)
            return p(t);
    return 0.0;
}

double WeightSpec::shifted_integral(double shift, double lo, double hi) const
{
    if (!(lo >= 0.0) || !(hi >= lo))
        fail(ErrorCode::invalid_argument, "weight integral needs 0 <= lo <= hi");
    if (hi > end())
        fail(ErrorCode::domain, "weight integral extends beyond the weight's domain");
    double sum = 0.0;
    for (const auto& p : pieces_) {
        const double l = std::max(lo, p.t0);
        const double h = std::min(hi, p.t1);
        if (!(h > l) || p.c == 0.0)
            continue;
        sum += p.c * power_log_integral(p.a + shift, p.b, l, h);
        if (std::isinf(sum))
            return infinity;
    }
    return sum;
}

double WeightSpec::W(double t) const
{
    if (!(t > 0.0))
        fail(ErrorCode::domain, "W(t) needs t > 0");
    return integral(0.0, t);
}

double WeightSpec::Wp(double p, double s, Domain alpha) const
{
    if (!(p > 0.0))
        fail(ErrorCode::invalid_argument, "W_p needs p > 0");
    const double upper = domain_length(alpha);
    if (!(s > 0.0) || s > upper)
        fail(ErrorCode::domain, "W_p(s) needs 0 < s < alpha");
    const double tail = shifted_integral(-p, s, upper);
    if (std::isinf(tail))
        fail(ErrorCode::dp_violation, "integral_s^alpha t^-p w(t) dt diverges: weight is not in D_p");
    return std::pow(s, p) * tail;
}

Asymptotic WeightSpec::w_at_infinity() const
{
    if (!reaches_infinity())
        fail(ErrorCode::domain, "weight does not extend to infinity");
    const auto& t = tail();
    return t.c == 0.0 ? Asymptotic::zero() : Asymptotic::power_log(t.c, t.a, t.b);
}

Asymptotic WeightSpec::W_at_infinity() const
{
    const Asymptotic w = w_at_infinity();
    if (w.integral_diverges()) {
        if (auto W = antiderivative(w))
            return *W;
        fail(ErrorCode::domain, "antiderivative of the weight tail is outside the log class");
    }
    const double total = W(infinity);
    return total == 0.0 ? Asymptotic::zero() : Asymptotic::constant(total);
}

Asymptotic WeightSpec::Wp_at_infinity(double p) const
{
    const Asymptotic w = w_at_infinity();
    const Asymptotic shifted = w * Asymptotic::power_log(1.0, -p, 0.0);
    if (shifted.integral_diverges())
        fail(ErrorCode::dp_violation, "W_p diverges: weight tail is not in D_p");
    const auto tail = tail_integral(shifted);
    if (!tail)
        fail(ErrorCode::domain, "tail integral of the weight is outside the log class");
    return Asymptotic::power_log(1.0, p, 0.0) * *tail;
}

double weight_W(const WeightSpec& w, double t, Domain alpha)
{
    if (t > domain_length(alpha))
        fail(ErrorCode::domain, "W(t) evaluated outside (0, alpha)");
    return w.W(t);
}

double weight_Wp(const WeightSpec& w, double p, double s, Domain alpha)
{
    return w.Wp(p, s, alpha);
}

bool in_D_p(const WeightSpec& w, double p, Domain alpha)
{
    if (!(p > 0.0))
        fail(ErrorCode::invalid_argument, "D_p needs p > 0");
    if (w.end() < domain_length(alpha))
        fail(ErrorCode::domain, "weight does not cover the domain");
    const auto& head = w.head();
    if (head.c > 0.0 && head.a <= -1.0 + exponent_tol)
        return false;
    if (alpha == Domain::unit)
        return true;
    const auto& tail = w.tail();
    return tail.c == 0.0 || !Asymptotic::power_log(1.0, tail.a - p, tail.b).integral_diverges();
}

} // namespace rifs
