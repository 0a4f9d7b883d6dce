#pragma once

#include "rifs/step_function.hpp"

#include <utility>
#include <vector>

namespace rifs {

enum class OrliczFamily { power, shifted_power, exp_minus_one, table };

// What a table-defined psi does past its last point.
enum class TableTail { linear, infinite };

// An Orlicz function psi from one of a few named families:
//   power          psi(u) = c |u|^p                  (p >= 1)
//   shifted_power  psi(u) = c max(0, |u| - a)^p       (a >= 0, p >= 1)
//   exp_minus_one  psi(u) = c (exp|u| - 1)
//   table          piecewise linear through (u_i, psi_i), u_0 = 0, psi_0 = 0
class OrliczSpec {
public:
    static OrliczSpec power(double p, double c = 1.0);
    static OrliczSpec shifted_power(double a, double p, double c = 1.0);
    static OrliczSpec exp_minus_one(double c = 1.0);
    static OrliczSpec table(std::vector<std::pair<double, double>> points,
                            TableTail tail = TableTail::linear);

    OrliczFamily family() const { return family_; }
    double exponent() const { return p_; }
    double shift() const { return a_; }
    double scale() const { return c_; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }
    TableTail table_tail() const { return tail_; }

    // psi(u), possibly +infinity.
    double operator()(double u) const;
    // Right derivative of psi at |u|.
    double derivative(double u) const;
    bool finite_valued() const;
    // Families whose limit behaviour is known in closed form.
    bool analytic() const { return family_ != OrliczFamily::table; }

private:
    OrliczSpec() = default;
    void validate() const;

    OrliczFamily family_ = OrliczFamily::power;
    double p_ = 1.0;
    double a_ = 0.0;
    double c_ = 1.0;
    std::vector<std::pair<double, double>> points_;
    TableTail tail_ = TableTail::linear;
};

// Complementary function sup_{v>0} (|u| v - psi(v)); infinity when unbounded.
double young_conjugate(const OrliczSpec& psi, double u);
// Same supremum by golden-section search, regardless of family.
double young_conjugate_numeric(const OrliczSpec& psi, double u);

// rho_psi(x) = integral psi(x(t)) dt.
double modular(const StepFunction& x, const OrliczSpec& psi);

// inf{ lambda > 0 : rho(x / lambda) <= 1 }.
double luxemburg_norm(const StepFunction& x, const OrliczSpec& psi);

// inf_{k>0} (1/k)(1 + rho(k x)), the Amemiya form of the Orlicz norm.
double orlicz_norm(const StepFunction& x, const OrliczSpec& psi);

} // namespace rifs
