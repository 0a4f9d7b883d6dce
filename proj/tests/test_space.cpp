#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rifs/error.hpp"
#include "rifs/rearrangement.hpp"
#include "rifs/space.hpp"

#include <cmath>
#include <random>

using namespace rifs;

namespace {

const WeightSpec one = WeightSpec::constant(1.0);
const WeightSpec inv_sqrt = WeightSpec::power(1.0, -0.5);

// Gamma norm^p by direct quadrature of (x**)^p w on a log grid, from the
// oracle x**.
double gamma_norm_p_oracle(const StepFunction& x, double p, const std::function<double(double)>& w)
{
    const auto sorted = oracle::sorted_cells(oracle::cells_of(x));
    auto f = [&](double t) { return std::pow(oracle::double_star_at(sorted, t), p) * w(t); };
    const double S = x.support_measure();
    // Breakpoints of x* split the Simpson panels.
    std::vector<double> cuts{1e-12};
    double s = 0.0;
    for (const auto& c : sorted) {
        s += c.length;
        cuts.push_back(s);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        acc += oracle::log_simpson(f, cuts[i], cuts[i + 1], 4000);
    acc += oracle::log_simpson(f, S, S * 1e9, 20000);
    // On (0, 1e-12) x** is the constant x*(0+).
    acc += std::pow(sorted.front().value, p) * 2.0 * std::sqrt(1e-12);
    return acc;
}

} // namespace

TEST_CASE("Lambda norm examples")
{
    const StepFunction x({{0, 1, 2.0}, {3, 4, -1.0}});
    CHECK(lambda_norm(x, 2.0, one) == doctest::Approx(std::sqrt(5.0)));
    CHECK(lambda_norm(StepFunction::indicator(0, 1), 2.0, inv_sqrt) == doctest::Approx(std::sqrt(2.0)));
    CHECK(lambda_norm(StepFunction(), 2.0, one) == 0.0);
}

TEST_CASE("Gamma norm examples")
{
    CHECK(gamma_norm(StepFunction(), 2.0, one) == 0.0);
    for (double t : {0.5, 1.0, 3.0}) {
        const double id = std::pow(one.W(t) + one.Wp(2.0, t), 0.5);
        CHECK(gamma_norm(StepFunction::indicator(0, t), 2.0, one) == doctest::Approx(id).epsilon(1e-10));
    }
    CHECK_THROWS_AS(gamma_norm(StepFunction::indicator(0, 1), 2.0, WeightSpec::power(1.0, 2.0)), Error);
}

TEST_CASE("Gamma norm against direct quadrature of x**")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = StepFunction::from_cells(oracle::random_cells(rng, 6), 0.4);
        if (x.is_zero())
            continue;
        const double ref = gamma_norm_p_oracle(x, 2.0, [](double t) { return 1.0 / std::sqrt(t); });
        // The oracle truncates the tail at 1e9 * S; add it back analytically.
        const double S = x.support_measure();
        const double mass = oracle::star_integral(oracle::sorted_cells(oracle::cells_of(x)), S);
        const double tail = mass * mass * (2.0 / 3.0) * std::pow(S * 1e9, -1.5);
        CHECK(std::pow(gamma_norm(x, 2.0, inv_sqrt), 2.0) == doctest::Approx(ref + tail).epsilon(1e-7));
    }
}

TEST_CASE("fundamental function examples")
{
    const auto g = SpaceHandle::gamma(2.0, one);
    CHECK(fundamental_function(g, 1.0) == doctest::Approx(std::sqrt(2.0)));
    for (double p : {1.0, 2.0, 3.0})
        for (double t : {0.1, 2.0, 50.0})
            CHECK(fundamental_function(SpaceHandle::lp(p), t) == doctest::Approx(std::pow(t, 1.0 / p)).epsilon(1e-12));
    CHECK(fundamental_function(g, 1e-12) < 1e-5);
    CHECK_THROWS_AS(fundamental_function(g, 0.0), Error);
}

TEST_CASE("space validation")
{
    CHECK_THROWS_AS(SpaceHandle::gamma(2.0, WeightSpec::power(1.0, 1.5)), Error);
    CHECK_THROWS_AS(SpaceHandle::lambda(0.0, one), Error);
    CHECK_THROWS_AS(SpaceHandle::lambda(2.0, WeightSpec({{0, 1, 1.0, 0.0}})), Error);
    CHECK_NOTHROW(SpaceHandle::lambda(2.0, WeightSpec({{0, 1, 1.0, 0.0}}), Domain::unit));
}

TEST_CASE("norm properties on random inputs")
{
    const std::vector<SpaceHandle> spaces{
        SpaceHandle::lambda(2.0, inv_sqrt),
        SpaceHandle::gamma(2.0, one),
        SpaceHandle::gamma(1.5, inv_sqrt),
        SpaceHandle::orlicz(OrliczSpec::power(3.0)),
        SpaceHandle::orlicz(OrliczSpec::exp_minus_one(), OrliczFlavor::orlicz),
    };
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const auto x = StepFunction::from_cells(oracle::random_cells(rng, 8), 0.5);
        const auto y = StepFunction::from_cells(oracle::random_cells(rng, 8), 0.25);
        for (const auto& s : spaces) {
            const double nx = s.norm(x), ny = s.norm(y), nxy = s.norm(add(x, y));
            CHECK(nxy <= nx + ny + 1e-8);
            CHECK(s.norm(scale(x, -2.5)) == doctest::Approx(2.5 * nx).epsilon(1e-8));
            CHECK(s.norm(rearrange(x)) == doctest::Approx(nx).epsilon(1e-9));
        }
        CHECK(gamma_norm(x, 2.0, one) >= lambda_norm(x, 2.0, one) - 1e-12);
        if (hlp_dominates(x, y))
            CHECK(gamma_norm(x, 2.0, inv_sqrt) <= gamma_norm(y, 2.0, inv_sqrt) + 1e-9);
        // Built-in domination: x ≺ x* + |y|*.
        const auto big = add(rearrange(x), rearrange(y));
        CHECK(gamma_norm(x, 2.0, inv_sqrt) <= gamma_norm(big, 2.0, inv_sqrt) + 1e-9);
    }
}

TEST_CASE("fundamental function is quasiconcave on a grid")
{
    for (const auto& s : {SpaceHandle::gamma(2.0, inv_sqrt), SpaceHandle::lambda(3.0, one),
                          SpaceHandle::orlicz(OrliczSpec::exp_minus_one())}) {
        double prev_phi = 0.0, prev_ratio = INFINITY;
        for (int k = -12; k <= 12; ++k) {
            const double t = std::pow(2.0, k);
            const double phi = fundamental_function(s, t);
            CHECK(phi >= prev_phi * (1 - 1e-12));
            CHECK(phi / t <= prev_ratio * (1 + 1e-12));
            prev_phi = phi;
            prev_ratio = phi / t;
        }
    }
}
