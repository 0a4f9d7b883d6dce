#pragma once

#include "rifs/asymptotics.hpp"
#include "rifs/step_function.hpp"

#include <vector>

namespace rifs {

// w(t) = c * t^a * log(e + t)^b on [t0, t1).
struct WeightPiece {
    double t0;
    double t1; // may be infinity for the last piece
    double c;
    double a;
    double b = 0.0;

    double operator()(double t) const;
};

// integral_lo^hi t^a log(e+t)^b dt, hi may be infinity.  Closed form when
// b == 0, otherwise adaptive quadrature after a power substitution.  Returns
// infinity when the integral diverges (decided from the exponents).
double power_log_integral(double a, double b, double lo, double hi);

// Nonnegative weight on (0, end) made of power-log pieces.
class WeightSpec {
public:
    WeightSpec() = default;
    explicit WeightSpec(std::vector<WeightPiece> pieces);

    static WeightSpec power(double c, double a, double b = 0.0);
    static WeightSpec constant(double c = 1.0) { return power(c, 0.0); }

    const std::vector<WeightPiece>& pieces() const { return pieces_; }
    double end() const { return pieces_.back().t1; }
    bool reaches_infinity() const;
    // True when some piece has c == 0, i.e. W is flat there.
    const WeightPiece* first_flat_piece() const;

    double operator()(double t) const;

    // W(t) = integral_0^t w; t may be infinity.
    double W(double t) const;
    // integral_lo^hi w(s) s^shift ds, hi may be infinity (returns inf on divergence).
    double shifted_integral(double shift, double lo, double hi) const;
    // integral_lo^hi w over [lo, hi], hi possibly infinity.
    double integral(double lo, double hi) const { return shifted_integral(0.0, lo, hi); }

    // W_p(s) = s^p * integral_s^alpha t^-p w(t) dt.  Signals dp_violation
    // when the integral diverges.
    double Wp(double p, double s, Domain alpha = Domain::infinite) const;

    // Leading behaviour at infinity (requires reaches_infinity()).
    Asymptotic W_at_infinity() const;
    Asymptotic Wp_at_infinity(double p) const;
    Asymptotic w_at_infinity() const;

    // Near zero w(t) ~ c0 * t^a0.
    const WeightPiece& head() const { return pieces_.front(); }
    const WeightPiece& tail() const { return pieces_.back(); }

private:
    std::vector<WeightPiece> pieces_;
};

double weight_W(const WeightSpec& w, double t, Domain alpha = Domain::infinite);
double weight_Wp(const WeightSpec& w, double p, double s, Domain alpha = Domain::infinite);

// w in D_p: W(s) < inf and W_p(s) < inf for all 0 < s < alpha (s <= 1 if alpha = 1).
bool in_D_p(const WeightSpec& w, double p, Domain alpha);

} // namespace rifs
