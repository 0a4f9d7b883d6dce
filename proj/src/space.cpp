#include "rifs/space.hpp"

#include "rifs/error.hpp"
#include "rifs/quadrature.hpp"
#include "rifs/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rifs {

namespace {

void check_weight_covers(const WeightSpec& w, Domain alpha)
{
    if (w.end() < domain_length(alpha))
        fail(ErrorCode::domain, "weight does not cover the whole domain");
}

void check_p(double p)
{
    if (!(p > 0.0) || !std::isfinite(p))
        fail(ErrorCode::invalid_argument, "Lorentz exponent p must be in (0, infinity)");
}

} // namespace

SpaceHandle::SpaceHandle(Kind kind, Domain alpha) : kind_(std::move(kind)), alpha_(alpha)
{
    if (const auto* l = std::get_if<LorentzLambda>(&kind_)) {
        check_p(l->p);
        check_weight_covers(l->w, alpha_);
        if (std::isinf(l->w.W(std::min(1.0, l->w.end()))))
            fail(ErrorCode::domain, "weight is not locally integrable at 0");
    } else if (const auto* g = std::get_if<LorentzGamma>(&kind_)) {
        check_p(g->p);
        check_weight_covers(g->w, alpha_);
        if (!in_D_p(g->w, g->p, alpha_))
            fail(ErrorCode::dp_violation, "Gamma space weight is not in D_p");
    }
}

SpaceHandle SpaceHandle::lambda(double p, WeightSpec w, Domain alpha)
{
    return SpaceHandle(LorentzLambda{p, std::move(w)}, alpha);
}

SpaceHandle SpaceHandle::gamma(double p, WeightSpec w, Domain alpha)
{
    return SpaceHandle(LorentzGamma{p, std::move(w)}, alpha);
}

SpaceHandle SpaceHandle::orlicz(OrliczSpec psi, OrliczFlavor flavor, Domain alpha)
{
    return SpaceHandle(OrliczSpace{std::move(psi), flavor}, alpha);
}

SpaceHandle SpaceHandle::lp(double p, Domain alpha)
{
    return orlicz(OrliczSpec::power(p), OrliczFlavor::luxemburg, alpha);
}

std::string SpaceHandle::describe() const
{
    std::ostringstream os;
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, LorentzLambda>)
                os << "Lambda(p=" << k.p << ")";
            else if constexpr (std::is_same_v<T, LorentzGamma>)
                os << "Gamma(p=" << k.p << ")";
            else
                os << (k.flavor == OrliczFlavor::luxemburg ? "Orlicz-Luxemburg" : "Orlicz-Amemiya");
        },
        kind_);
    os << " on [0," << (alpha_ == Domain::unit ? "1" : "inf") << ")";
    return os.str();
}

double SpaceHandle::norm(const StepFunction& x) const
{
    if (x.alpha() != alpha_ && x.support_end() > domain_length(alpha_))
        fail(ErrorCode::domain, "function support exceeds the space's domain");
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, LorentzLambda>)
                return lambda_norm(x, k.p, k.w);
            else if constexpr (std::is_same_v<T, LorentzGamma>)
                return gamma_norm(x, k.p, k.w);
            else
                return k.flavor == OrliczFlavor::luxemburg ? luxemburg_norm(x, k.psi)
                                                           : orlicz_norm(x, k.psi);
        },
        kind_);
}

double lambda_norm(const StepFunction& x, double p, const WeightSpec& w)
{
    check_p(p);
    const StepFunction star = rearrange(x);
    double sum = 0.0;
    for (const auto& piece : star.pieces())
        sum += std::pow(piece.v, p) * w.integral(piece.t0, piece.t1);
    if (std::isinf(sum))
        fail(ErrorCode::divergent, "Lambda norm integral diverges");
    return std::pow(sum, 1.0 / p);
}

double gamma_norm(const StepFunction& x, double p, const WeightSpec& w)
{
    check_p(p);
    if (!in_D_p(w, p, x.alpha()))
        fail(ErrorCode::dp_violation, "Gamma norm needs the weight in D_p");
    if (x.is_zero())
        return 0.0;

    const MaximalCurve curve(x);
    const auto& breaks = curve.breaks();
    const auto& levels = curve.levels();
    const auto& masses = curve.masses();
    const std::size_t m = breaks.size() - 1;

    QuadratureOptions quad;
    quad.rel_tol = 1e-12;

    // First interval: x** is the constant x*(0+).
    double sum = std::pow(levels[0], p) * w.integral(0.0, breaks[1]);

    for (std::size_t k = 1; k < m; ++k) {
        const double B = levels[k], A = masses[k];
        for (const auto& piece : w.pieces()) {
            const double lo = std::max(breaks[k], piece.t0);
            const double hi = std::min(breaks[k + 1], piece.t1);
            if (!(hi > lo) || piece.c == 0.0)
                continue;
            auto integrand = [&](double t) { return std::pow(B + A / t, p) * piece(t); };
            sum += integrate(integrand, lo, hi, quad).value;
        }
    }

    // Beyond the support x**(t) = mass / t.
    const double upper = domain_length(x.alpha());
    if (breaks[m] < upper)
        sum += std::pow(masses[m], p) * w.shifted_integral(-p, breaks[m], upper);
    if (std::isinf(sum))
        fail(ErrorCode::divergent, "Gamma norm integral diverges");
    return std::pow(sum, 1.0 / p);
}

double fundamental_function(const SpaceHandle& space, double t)
{
    if (!(t > 0.0) || t > domain_length(space.alpha()))
        fail(ErrorCode::domain, "fundamental function needs 0 < t < alpha");
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, LorentzLambda>) {
                return std::pow(k.w.W(t), 1.0 / k.p);
            } else if constexpr (std::is_same_v<T, LorentzGamma>) {
                const double wp = t < domain_length(space.alpha()) ? k.w.Wp(k.p, t, space.alpha()) : 0.0;
                return std::pow(k.w.W(t) + wp, 1.0 / k.p);
            } else {
                return space.norm(StepFunction::indicator(0.0, t, 1.0, space.alpha()));
            }
        },
        space.kind());
}

} // namespace rifs
