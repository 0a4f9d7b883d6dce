#pragma once

#include "rifs/orlicz.hpp"
#include "rifs/step_function.hpp"
#include "rifs/weight.hpp"

#include <string>
#include <variant>

namespace rifs {

struct LorentzLambda {
    double p;
    WeightSpec w;
};

struct LorentzGamma {
    double p;
    WeightSpec w;
};

enum class OrliczFlavor { luxemburg, orlicz };

struct OrliczSpace {
    OrliczSpec psi;
    OrliczFlavor flavor = OrliczFlavor::luxemburg;
};

// A tagged norm evaluator on [0, alpha).
class SpaceHandle {
public:
    using Kind = std::variant<LorentzLambda, LorentzGamma, OrliczSpace>;

    SpaceHandle(Kind kind, Domain alpha);

    static SpaceHandle lambda(double p, WeightSpec w, Domain alpha = Domain::infinite);
    static SpaceHandle gamma(double p, WeightSpec w, Domain alpha = Domain::infinite);
    static SpaceHandle orlicz(OrliczSpec psi, OrliczFlavor flavor = OrliczFlavor::luxemburg,
                              Domain alpha = Domain::infinite);
    // L^p as the Orlicz space of psi(u) = |u|^p.
    static SpaceHandle lp(double p, Domain alpha = Domain::infinite);

    const Kind& kind() const { return kind_; }
    Domain alpha() const { return alpha_; }
    std::string describe() const;

    double norm(const StepFunction& x) const;

private:
    Kind kind_;
    Domain alpha_;
};

// (integral (x*)^p w)^(1/p), exact per piece of x*.
double lambda_norm(const StepFunction& x, double p, const WeightSpec& w);
// (integral (x**)^p w)^(1/p); requires w in D_p.
double gamma_norm(const StepFunction& x, double p, const WeightSpec& w);

// phi(t) = || chi_(0,t) ||.
double fundamental_function(const SpaceHandle& space, double t);

} // namespace rifs
