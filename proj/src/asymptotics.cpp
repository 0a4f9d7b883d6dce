#include "rifs/asymptotics.hpp"

#include "rifs/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace rifs {

namespace {

int sign_of(double e)
{
    if (e > exponent_tol)
        return 1;
    if (e < -exponent_tol)
        return -1;
    return 0;
}

bool near(double a, double b) { return std::abs(a - b) <= exponent_tol; }

} // namespace

int Asymptotic::growth_sign() const
{
    for (double e : exps)
        if (int s = sign_of(e))
            return s;
    return 0;
}

double Asymptotic::limit() const
{
    if (is_zero())
        return 0.0;
    switch (growth_sign()) {
    case 1: return std::numeric_limits<double>::infinity();
    case -1: return 0.0;
    default: return coef;
    }
}

bool Asymptotic::integral_diverges() const
{
    if (is_zero())
        return false;
    // Divergent exactly when (e0, e1, e2) >= (-1, -1, -1) lexicographically.
    for (double e : exps) {
        if (e > -1.0 + exponent_tol)
            return true;
        if (e < -1.0 - exponent_tol)
            return false;
    }
    return true;
}

std::string Asymptotic::describe() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    os << coef << " * t^" << exps[0];
    if (!near(exps[1], 0.0))
        os << " * log(t)^" << exps[1];
    if (!near(exps[2], 0.0))
        os << " * loglog(t)^" << exps[2];
    return os.str();
}

int compare_exponents(const Asymptotic& a, const Asymptotic& b)
{
    for (int i = 0; i < 3; ++i)
        if (int s = sign_of(a.exps[i] - b.exps[i]))
            return s;
    return 0;
}

Asymptotic operator+(const Asymptotic& a, const Asymptotic& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    switch (compare_exponents(a, b)) {
    case 1: return a;
    case -1: return b;
    default: return {a.coef + b.coef, a.exps};
    }
}

Asymptotic operator*(const Asymptotic& a, const Asymptotic& b)
{
    if (a.is_zero() || b.is_zero())
        return Asymptotic::zero();
    return {a.coef * b.coef,
            {a.exps[0] + b.exps[0], a.exps[1] + b.exps[1], a.exps[2] + b.exps[2]}};
}

Asymptotic operator/(const Asymptotic& a, const Asymptotic& b)
{
    if (b.is_zero())
        fail(ErrorCode::domain, "asymptotic division by an eventually-zero function");
    return a * pow(b, -1.0);
}

Asymptotic pow(const Asymptotic& a, double r)
{
    if (a.is_zero()) {
        if (r < 0.0)
            fail(ErrorCode::domain, "negative power of an eventually-zero function");
        return a;
    }
    return {std::pow(a.coef, r), {a.exps[0] * r, a.exps[1] * r, a.exps[2] * r}};
}

std::optional<Asymptotic> antiderivative(const Asymptotic& f)
{
    if (f.is_zero())
        return Asymptotic::zero();
    if (!f.integral_diverges())
        return std::nullopt;
    auto e = f.exps;
    for (int i = 0; i < 3; ++i) {
        if (!near(e[i], -1.0)) {
            // Raise the first exponent that is not -1; the earlier ones are
            // exactly -1 and get absorbed by d/dt of log^k.
            const double k = e[i] + 1.0;
            std::array<double, 3> out{0.0, 0.0, 0.0};
            out[i] = k;
            for (int j = i + 1; j < 3; ++j)
                out[j] = e[j];
            return Asymptotic{f.coef / k, out};
        }
    }
    return std::nullopt;
}

std::optional<Asymptotic> tail_integral(const Asymptotic& f)
{
    if (f.is_zero())
        return Asymptotic::zero();
    if (f.integral_diverges())
        return std::nullopt;
    auto e = f.exps;
    for (int i = 0; i < 3; ++i) {
        if (!near(e[i], -1.0)) {
            const double k = e[i] + 1.0; // negative
            std::array<double, 3> out{0.0, 0.0, 0.0};
            out[i] = k;
            for (int j = i + 1; j < 3; ++j)
                out[j] = e[j];
            return Asymptotic{f.coef / -k, out};
        }
    }
    return std::nullopt;
}

} // namespace rifs
