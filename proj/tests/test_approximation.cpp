#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rifs/approximation.hpp"
#include "rifs/error.hpp"
#include "rifs/rearrangement.hpp"

#include <cmath>
#include <random>

using namespace rifs;

namespace {

const SpaceHandle l2 = SpaceHandle::orlicz(OrliczSpec::power(2));
const StepFunction chi01 = StepFunction::indicator(0, 1);
const StepFunction chi12({{1, 2, 1.0}});

// L2 norm of a combination of vectors of cell values on a uniform grid of width h.
double cell_l2(const std::vector<double>& v, double h)
{
    double s = 0.0;
    for (double c : v)
        s += c * c * h;
    return std::sqrt(s);
}

} // namespace

TEST_CASE("finite projection examples")
{
    const StepFunction x({{0, 1, 1.5}, {2, 3, -1.0}});
    const auto in = project_finite(x, CandidateSet({chi01, x}), l2);
    CHECK(in.distance == 0.0);
    REQUIRE(in.minimizers.size() == 1);
    CHECK(in.minimizers[0].coefficients == std::vector<double>{0.0, 1.0});

    const auto tie = project_finite(chi01, CandidateSet({StepFunction(), scale(chi01, 2.0)}), l2);
    CHECK(tie.distance == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tie.minimizers.size() == 2);

    const auto zero = project_finite(x, CandidateSet({StepFunction()}), l2);
    CHECK(zero.distance == doctest::Approx(std::sqrt(1.5 * 1.5 + 1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(project_finite(x, CandidateSet({chi01}, true), l2), Error);
    CHECK_THROWS_AS(CandidateSet({}), Error);
}

TEST_CASE("rearrangement-closed candidate sets")
{
    const StepFunction a({{1, 2, 1.0}, {2, 3, 2.0}});
    CHECK_THROWS_AS(CandidateSet({a}, false, true), Error);
    CHECK_NOTHROW(CandidateSet({a, rearrange(a)}, false, true));
    CHECK(rearrangement_closure_offender({a}).value() == 0);
    CHECK_FALSE(rearrangement_closure_offender({a, rearrange(a)}).has_value());
}

TEST_CASE("finite projection equals the brute-force minimum")
{
    std::mt19937_64 rng(11);
    const std::vector<SpaceHandle> spaces{l2, SpaceHandle::gamma(2.0, WeightSpec::power(1.0, -0.5)),
                                          SpaceHandle::lp(1)};
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = StepFunction::from_cells(oracle::random_cells(rng, 5), 0.5);
        std::vector<StepFunction> members;
        const int m = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < m; ++i)
            members.push_back(StepFunction::from_cells(oracle::random_cells(rng, 5), 0.5));
        const auto& s = spaces[static_cast<std::size_t>(trial) % spaces.size()];
        const auto r = project_finite(x, CandidateSet(members), s);
        double best = INFINITY;
        for (const auto& a : members)
            best = std::min(best, s.norm(subtract(x, a)));
        CHECK(r.distance == best);
        REQUIRE_FALSE(r.minimizers.empty());
        for (const auto& mz : r.minimizers)
            CHECK(mz.gap <= tie_tol);
    }
}

TEST_CASE("hull projection examples")
{
    const auto mid = project_hull(chi01, CandidateSet({StepFunction(), scale(chi01, 2.0)}, true), l2);
    CHECK(mid.distance <= 1e-6);
    REQUIRE_FALSE(mid.minimizers.empty());
    CHECK(mid.minimizers[0].coefficients[0] == doctest::Approx(0.5).epsilon(1e-3));

    const auto pair = project_hull(StepFunction(), CandidateSet({chi01, chi12}, true), l2);
    CHECK(std::abs(pair.distance - 1.0 / std::sqrt(2.0)) <= 1e-4);
    CHECK(std::abs(pair.minimizers[0].coefficients[0] - 0.5) <= 1e-3);

    const StepFunction x({{0, 1, 0.3}, {1, 2, 0.2}});
    CHECK(project_hull(x, CandidateSet({chi01, chi12}, true), l2).distance
          <= project_finite(x, CandidateSet({chi01, chi12}), l2).distance);
    // A singleton hull adds nothing.
    CHECK(project_hull(x, CandidateSet({chi01}, true), l2).distance
          == doctest::Approx(project_finite(x, CandidateSet({chi01}), l2).distance).epsilon(1e-12));
    std::vector<StepFunction> many(max_hull_members + 1, chi01);
    CHECK_THROWS_AS(project_hull(x, CandidateSet(many, true), l2), Error);
}

TEST_CASE("hull projection against a simplex grid search")
{
    std::mt19937_64 rng(17);
    const int cells = 4;
    const double h = 0.5;
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::vector<double>> a(3, std::vector<double>(cells));
        std::vector<double> xv(cells);
        for (auto& m : a)
            for (auto& c : m)
                c = u(rng);
        for (auto& c : xv)
            c = u(rng);
        std::vector<StepFunction> members;
        for (const auto& m : a)
            members.push_back(StepFunction::from_cells(m, h));
        const auto x = StepFunction::from_cells(xv, h);

        double grid_best = INFINITY;
        const int n = 1000;
        std::vector<double> diff(cells);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                const double t0 = i / double(n), t1 = j / double(n), t2 = 1.0 - t0 - t1;
                for (int k = 0; k < cells; ++k)
                    diff[k] = xv[k] - (t0 * a[0][k] + t1 * a[1][k] + t2 * a[2][k]);
                grid_best = std::min(grid_best, cell_l2(diff, h));
            }
        const auto r = project_hull(x, CandidateSet(members, true), l2);
        CHECK(r.distance <= grid_best + 1e-9);
        CHECK(grid_best - r.distance <= 1e-4 * std::max(1.0, grid_best));
        CHECK(r.distance <= project_finite(x, CandidateSet(members), l2).distance + 1e-12);
    }
}

TEST_CASE("minimizing sequences")
{
    const CandidateSet pair({chi01, chi12}, true);
    CHECK(minimizing_sequence(StepFunction(), pair, l2, 0).empty());
    const auto seq = minimizing_sequence(StepFunction(), pair, l2, 8);
    REQUIRE(seq.size() == 8);
    for (std::size_t i = 1; i < seq.size(); ++i)
        CHECK(seq[i].gap <= seq[i - 1].gap);
    CHECK(seq.back().gap <= 1e-6);
    CHECK(l2.norm(seq.back().difference) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));

    const StepFunction x({{0, 1, 0.3}});
    const auto fin = minimizing_sequence(x, CandidateSet({chi01, chi12}), l2, 4);
    REQUIRE(fin.size() == 4);
    for (const auto& term : fin) {
        CHECK(term.gap == 0.0);
        CHECK(term.difference.pieces() == fin.front().difference.pieces());
    }
}

TEST_CASE("K-upper bounds")
{
    const StepFunction x({{0, 1, 1.0}, {1, 3, 0.5}});
    CHECK(k_upper_bound_check(x, CandidateSet({x})));
    CHECK(k_upper_bound_check(scale(chi01, 2.0), CandidateSet({StepFunction::indicator(0, 2)})));
    CHECK_FALSE(k_upper_bound_check(chi01, CandidateSet({StepFunction::indicator(0, 2)})));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<StepFunction> members;
        StepFunction bound;
        for (int i = 0; i < 4; ++i) {
            members.push_back(StepFunction::from_cells(oracle::random_cells(rng, 6), 0.3));
            bound = add(bound, rearrange(members.back()));
        }
        CHECK(k_upper_bound_check(bound, CandidateSet(members)));
    }
}

TEST_CASE("dominated projection experiment")
{
    const StepFunction x({{0, 1, 2.0}, {1, 3, 1.0}});
    const StepFunction a({{1, 2, 1.0}});
    const CandidateSet A({a, rearrange(a), scale(chi01, 0.5)}, false, true);

    const auto ok = dominated_projection_experiment(x, A, OrliczSpec::power(2), Domain::infinite);
    CHECK(ok.rearrangement_closed.is_holds());
    CHECK(ok.members_dominated_by_x.is_holds());
    CHECK(ok.koc.is_holds());
    CHECK(ok.hypotheses_hold);
    CHECK(ok.minimizer_set_nonempty);
    CHECK(ok.projection.distance
          == doctest::Approx(project_finite(rearrange(x), A, SpaceHandle::orlicz(OrliczSpec::power(2))).distance));

    const auto e = dominated_projection_experiment(x, A, OrliczSpec::exp_minus_one(), Domain::infinite);
    CHECK(e.koc.is_fails());
    CHECK_FALSE(e.hypotheses_hold);
    CHECK(e.minimizer_set_nonempty);

    const StepFunction big = scale(StepFunction::indicator(0, 4), 3.0);
    const auto bad = dominated_projection_experiment(x, CandidateSet({big}, false, true), OrliczSpec::power(2),
                                                     Domain::infinite);
    REQUIRE(bad.members_dominated_by_x.is_fails());
    REQUIRE(bad.members_dominated_by_x.witness);
    // big** - x** is 1 on (0, 1], grows to 3 - 1 = 2 at t = 4 and decays as 8/t after.
    CHECK(bad.members_dominated_by_x.witness->location == doctest::Approx(4.0));
    CHECK(bad.members_dominated_by_x.witness->value == doctest::Approx(2.0));
    CHECK(bad.x_dominated_by_members.is_holds());
    CHECK_FALSE(bad.hypotheses_hold);
}
