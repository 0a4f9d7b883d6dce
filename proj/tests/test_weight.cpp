#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rifs/error.hpp"
#include "rifs/weight.hpp"

#include <cmath>
#include <numbers>

using namespace rifs;

TEST_CASE("W examples")
{
    CHECK(weight_W(WeightSpec::constant(1.0), 3.0) == doctest::Approx(3.0));
    CHECK(weight_W(WeightSpec::power(1.0, -0.5), 4.0) == doctest::Approx(4.0));
    const WeightSpec tail_m2({{0, 1, 1.0, 0.0}, {1, INFINITY, 1.0, -2.0}});
    CHECK(std::isfinite(tail_m2.W(INFINITY)));
    CHECK(tail_m2.W(INFINITY) == doctest::Approx(2.0));
    CHECK(tail_m2.W_at_infinity().limit() == doctest::Approx(2.0));
}

TEST_CASE("W_p examples")
{
    CHECK(weight_Wp(WeightSpec::constant(1.0), 2.0, 1.0) == doctest::Approx(1.0));
    CHECK(weight_Wp(WeightSpec::power(1.0, -0.5), 2.0, 1.0) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(weight_Wp(WeightSpec::power(1.0, 1.0), 2.0, 1.0), Error);
    CHECK_THROWS_AS(weight_Wp(WeightSpec::power(1.0, 2.0), 2.0, 1.0), Error);
}

TEST_CASE("D_p membership")
{
    CHECK(in_D_p(WeightSpec::constant(1.0), 2.0, Domain::infinite));
    CHECK_FALSE(in_D_p(WeightSpec::power(1.0, -2.0), 2.0, Domain::infinite));
    const WeightSpec grows({{0, 1, 1.0, 0.0}, {1, INFINITY, 1.0, 2.0}});
    CHECK_FALSE(in_D_p(grows, 2.0, Domain::infinite));
    // On [0,1) only the head matters.
    CHECK(in_D_p(WeightSpec({{0, 1, 1.0, 0.5}}), 2.0, Domain::unit));
}

TEST_CASE("log pieces against Simpson")
{
    const double a = -0.5, b = 1.5;
    const double exact = power_log_integral(a, b, 0.5, 20.0);
    const double ref = oracle::log_simpson(
        [&](double t) { return std::pow(t, a) * std::pow(std::log(std::numbers::e + t), b); }, 0.5, 20.0, 4000);
    CHECK(exact == doctest::Approx(ref).epsilon(1e-9));
    CHECK(power_log_integral(-1.0, 0.0, 1.0, std::numbers::e) == doctest::Approx(1.0));
    CHECK(std::isinf(power_log_integral(-1.0, 0.0, 1.0, INFINITY)));
    CHECK(std::isinf(power_log_integral(-1.0, -1.0, 1.0, INFINITY)));
    CHECK(std::isfinite(power_log_integral(-1.0, -2.0, 1.0, INFINITY)));
}

TEST_CASE("piecewise weights integrate piece by piece")
{
    const WeightSpec w({{0, 1, 1.0, -0.5}, {1, 3, 0.0, 0.0}, {3, INFINITY, 2.0, -3.0}});
    CHECK(w.W(1.0) == doctest::Approx(2.0));
    CHECK(w.W(2.0) == doctest::Approx(2.0));
    CHECK(w.W(INFINITY) == doctest::Approx(2.0 + 2.0 / (2.0 * 9.0)));
    CHECK(w.first_flat_piece() != nullptr);
    CHECK(w.first_flat_piece()->t0 == 1.0);
    CHECK(w(2.0) == 0.0);
    CHECK(w(4.0) == doctest::Approx(2.0 / 64.0));
}

TEST_CASE("invalid weights are rejected")
{
    CHECK_THROWS_AS(WeightSpec({{0.5, INFINITY, 1.0, 0.0}}), Error);
    CHECK_THROWS_AS(WeightSpec({{0, 1, -1.0, 0.0}}), Error);
    CHECK_THROWS_AS(WeightSpec({{0, 1, 1.0, 0.0}, {2, INFINITY, 1.0, 0.0}}), Error);
}

TEST_CASE("asymptotics of W and W_p")
{
    const auto w = WeightSpec::power(1.0, -0.5);
    const auto W = w.W_at_infinity();
    CHECK(W.coef == doctest::Approx(2.0));
    CHECK(W.exps[0] == doctest::Approx(0.5));
    const auto Wp = w.Wp_at_infinity(2.0);
    CHECK(Wp.coef == doctest::Approx(2.0 / 3.0));
    CHECK(Wp.exps[0] == doctest::Approx(0.5));
}
