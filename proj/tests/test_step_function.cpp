#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rifs/error.hpp"
#include "rifs/step_function.hpp"

#include <cmath>
#include <vector>

using namespace rifs;

TEST_CASE("canonical form sorts, merges and drops zero pieces")
{
    const StepFunction x({{2, 3, 1.0}, {0, 1, 2.0}, {1, 2, 2.0}, {3, 4, 0.0}});
    REQUIRE(x.pieces().size() == 2);
    CHECK(x.pieces()[0] == Piece{0, 2, 2.0});
    CHECK(x.pieces()[1] == Piece{2, 3, 1.0});
    CHECK(x.support_end() == 3.0);
    CHECK(x.support_measure() == 3.0);
    CHECK(x.sup_norm() == 2.0);
}

TEST_CASE("evaluation is right-continuous and zero off the support")
{
    const auto x = StepFunction::indicator(1.0, 2.0, 3.0);
    CHECK(x(0.5) == 0.0);
    CHECK(x(1.0) == 3.0);
    CHECK(x(1.999) == 3.0);
    CHECK(x(2.0) == 0.0);
}

TEST_CASE("invalid pieces are rejected")
{
    CHECK_THROWS_AS(StepFunction({{1, 1, 1.0}}), Error);
    CHECK_THROWS_AS(StepFunction({{-1, 1, 1.0}}), Error);
    CHECK_THROWS_AS(StepFunction({{0, 2, 1.0}, {1, 3, 1.0}}), Error);
    CHECK_THROWS_AS(StepFunction({{0, 2, 1.0}}, Domain::unit), Error);
    CHECK_THROWS_AS(StepFunction({{0, 1, std::nan("")}}), Error);
}

TEST_CASE("cells build a grid function")
{
    const std::vector<double> v{1.0, 1.0, -2.0, 0.0, 3.0};
    const auto x = StepFunction::from_cells(v, 0.5);
    CHECK(x(0.25) == 1.0);
    CHECK(x(1.1) == -2.0);
    CHECK(x(1.6) == 0.0);
    CHECK(x(2.2) == 3.0);
    CHECK(x.pieces().size() == 3);
}

TEST_CASE("combine examples")
{
    const auto chi = StepFunction::indicator(0, 1);
    CHECK(add(chi, chi).approx_equal(StepFunction::indicator(0, 1, 2.0)));
    CHECK(scale(chi, 0.0).is_zero());
    const StepFunction z({{0, 1, -2.0}, {1, 2, 1.0}});
    CHECK(abs(z).approx_equal(StepFunction({{0, 1, 2.0}, {1, 2, 1.0}})));
    CHECK_THROWS_AS(scale(chi, INFINITY), Error);

    const StepFunction args[] = {chi, StepFunction::indicator(0.5, 2.0, 3.0)};
    CHECK(combine(CombineOp::max, args).approx_equal(StepFunction({{0, 0.5, 1.0}, {0.5, 2.0, 3.0}})));
    CHECK(combine(CombineOp::min, args).approx_equal(StepFunction({{0.5, 1.0, 1.0}})));
    CHECK(combine(CombineOp::add, args).approx_equal(add(args[0], args[1])));
    CHECK(subtract(chi, chi).is_zero());
}

TEST_CASE("common breakpoints merge and deduplicate")
{
    const StepFunction fs[] = {StepFunction::indicator(0, 2), StepFunction::indicator(1, 2)};
    CHECK(common_breakpoints(fs) == std::vector<double>{0, 1, 2});
}

TEST_CASE("unit domain clamps and rejects foreign arithmetic")
{
    const auto x = StepFunction::indicator(0, 0.5, 1.0, Domain::unit);
    const auto y = StepFunction::indicator(0, 0.5, 1.0, Domain::infinite);
    CHECK_THROWS_AS(add(x, y), Error);
}
