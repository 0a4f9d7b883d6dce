#pragma once

#include <array>
#include <optional>
#include <string>

namespace rifs {

// Leading behaviour c * t^e[0] * (log t)^e[1] * (log log t)^e[2] of a
// positive function as t -> infinity.  A zero coefficient means the function
// vanishes identically near infinity.  Weight pieces c*t^a*log(e+t)^b map to
// exponents (a, b, 0) since log(e+t) ~ log t.
struct Asymptotic {
    double coef = 0.0;
    std::array<double, 3> exps{0.0, 0.0, 0.0};

    static Asymptotic zero() { return {}; }
    static Asymptotic constant(double c) { return {c, {0.0, 0.0, 0.0}}; }
    static Asymptotic power_log(double c, double a, double b) { return {c, {a, b, 0.0}}; }

    bool is_zero() const { return coef == 0.0; }
    // -1, 0, +1: lexicographic sign of the exponent triple.
    int growth_sign() const;
    // lim_{t->inf}: 0, coef, or infinity.
    double limit() const;
    // Whether integral_T^inf of the function diverges.
    bool integral_diverges() const;

    std::string describe() const;
};

// Exponent triples are compared with this slack.
inline constexpr double exponent_tol = 1e-12;

int compare_exponents(const Asymptotic& a, const Asymptotic& b);

// Sum of two positive functions: the faster-growing term wins.
Asymptotic operator+(const Asymptotic& a, const Asymptotic& b);
Asymptotic operator*(const Asymptotic& a, const Asymptotic& b);
Asymptotic operator/(const Asymptotic& a, const Asymptotic& b);
Asymptotic pow(const Asymptotic& a, double r);

// Leading term of integral_T^t f for a divergent f; nullopt when the
// antiderivative leaves the log-log class (e.g. (t log t loglog t)^-1).
std::optional<Asymptotic> antiderivative(const Asymptotic& f);
// Leading term of integral_t^inf f for a convergent f.
std::optional<Asymptotic> tail_integral(const Asymptotic& f);

} // namespace rifs
