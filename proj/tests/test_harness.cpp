#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rifs/error.hpp"
#include "rifs/harness.hpp"
#include "rifs/rearrangement.hpp"

#include <algorithm>
#include <cmath>

using namespace rifs;

namespace {

const WeightSpec inv_sqrt = WeightSpec::power(1.0, -0.5);
const WeightSpec flat_1_3({{0, 1, 1.0, -0.5}, {1, 3, 0.0, 0.0}, {3, INFINITY, 1.0, -0.5}});

TrialConfig config(std::uint64_t seed, std::size_t trials)
{
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    return cfg;
}

bool same_report(const ProbeReport& a, const ProbeReport& b)
{
    if (a.trials_run != b.trials_run || a.violation_count != b.violation_count
        || a.violations.size() != b.violations.size())
        return false;
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        const auto& u = a.violations[i];
        const auto& v = b.violations[i];
        if (u.trial != v.trial || u.magnitude != v.magnitude || u.inputs.size() != v.inputs.size())
            return false;
        for (std::size_t k = 0; k < u.inputs.size(); ++k)
            if (u.inputs[k].pieces() != v.inputs[k].pieces())
                return false;
    }
    return true;
}

} // namespace

TEST_CASE("trial configuration")
{
    CHECK_NOTHROW(TrialConfig{}.validate());
    auto bad = config(1, 0);
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = config(1, 5);
    bad.value_range = {2.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), Error);

    // Substreams depend on (seed, index) only.
    auto a = trial_stream(7, 3), b = trial_stream(7, 3), c = trial_stream(7, 4);
    CHECK(a() == b());
    CHECK(trial_stream(7, 3)() != c());
}

TEST_CASE("random step functions follow the configured law")
{
    auto cfg = config(3, 1);
    cfg.max_pieces = 5;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto rng = trial_stream(3, i);
        const auto x = random_step_function(rng, cfg);
        CHECK(x.pieces().size() >= 1);
        CHECK(x.pieces().size() <= cfg.max_pieces);
        for (const auto& p : x.pieces()) {
            CHECK(std::abs(p.v) >= cfg.value_range.lo);
            CHECK(std::abs(p.v) <= cfg.value_range.hi);
        }
        auto rng2 = trial_stream(3, i);
        const auto u = random_step_function(rng2, cfg, Domain::unit, true);
        CHECK(u.support_measure() <= 1.0 + 1e-12);
        for (const auto& p : u.pieces())
            CHECK(p.v > 0.0);
    }
}

TEST_CASE("core suite")
{
    const auto r = run_core_suite(config(1, 2000));
    CHECK(r.trials_run == 2000);
    CHECK(r.verdict() == "no-violation-found");
    CHECK(run_core_suite(config(1, 1)).trials_run == 1);

    // A rearrangement that sorts the wrong way is caught, and the witness replays.
    const RearrangeFn ascending = [](const StepFunction& x) {
        const auto star = rearrange(x);
        const double S = star.support_measure();
        std::vector<Piece> pieces;
        for (const auto& p : star.pieces())
            pieces.push_back({S - p.t1, S - p.t0, p.v});
        std::reverse(pieces.begin(), pieces.end());
        return StepFunction(pieces);
    };
    const auto bad = run_core_suite(config(1, 50), ascending);
    REQUIRE(bad.violation_found());
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations.size() <= max_reported_witnesses);
    CHECK(bad.violations.front().seed == 1);
    CHECK_FALSE(bad.violations.front().inputs.empty());
    CHECK(same_report(bad, run_core_suite(config(1, 50), ascending)));
}

TEST_CASE("K-monotonicity suite")
{
    for (const auto& s : {SpaceHandle::gamma(2.0, WeightSpec::constant(1.0)), SpaceHandle::lambda(2.0, inv_sqrt),
                          SpaceHandle::orlicz(OrliczSpec::power(2))}) {
        const auto r = run_kmono_suite(s, config(5, 1000));
        CHECK(r.trials_run == 1000);
        CHECK(r.verdict() == "no-violation-found");
    }
}

TEST_CASE("DUKM sequences")
{
    const auto l1 = dukm_sequence_run(SpaceHandle::orlicz(OrliczSpec::power(1)), 50);
    REQUIRE(l1.size() == 50);
    for (const auto& row : l1) {
        CHECK(row.chain_holds);
        CHECK(std::abs(row.norm_difference - 1.0) <= 1e-12);
        CHECK(std::abs(row.phi_ratio - 1.0) <= 1e-12);
        CHECK(row.norm_x == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row.norm_y == doctest::Approx(1.0).epsilon(1e-12));
    }

    const auto g = dukm_sequence_run(SpaceHandle::gamma(2.0, inv_sqrt), 1000);
    REQUIRE(g.size() == 1000);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g[i].chain_holds);
        // phi(t)^2 = (8/3) sqrt t for this weight.
        const double t = 2.0 * static_cast<double>(g[i].n);
        CHECK(g[i].phi_ratio == doctest::Approx(std::sqrt(8.0 / 3.0) * std::pow(t, 0.25) / t).epsilon(1e-9));
        CHECK(g[i].norm_difference == doctest::Approx(g[i].phi_ratio).epsilon(1e-9));
        if (i > 0)
            CHECK(g[i].norm_difference < g[i - 1].norm_difference);
    }
    CHECK(g.back().norm_difference < 0.05);

    const auto single = dukm_sequence_run(SpaceHandle::lp(2), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].chain_holds);
}

TEST_CASE("fundamental limits")
{
    const auto g = fundamental_limits(SpaceHandle::gamma(2.0, WeightSpec::constant(1.0)));
    CHECK(g.phi_infinite.is_holds());
    CHECK(g.ratio_limit == 0.0);
    CHECK(g.embeds_l1.is_fails());
    CHECK_FALSE(g.koc.has_value());

    const auto l1 = fundamental_limits(SpaceHandle::orlicz(OrliczSpec::power(1)));
    CHECK(l1.ratio_limit == doctest::Approx(1.0));
    CHECK(l1.embeds_l1.is_holds());
    REQUIRE(l1.koc);
    CHECK(l1.koc->is_fails());

    const auto sh = fundamental_limits(SpaceHandle::orlicz(OrliczSpec::shifted_power(1, 2)));
    CHECK(sh.phi_infinite.is_fails());
    REQUIRE(sh.koc_and_phi_infinite);
    CHECK(sh.koc_and_phi_infinite->is_fails());

    const auto p2 = fundamental_limits(SpaceHandle::orlicz(OrliczSpec::power(2)));
    REQUIRE(p2.koc_and_phi_infinite);
    CHECK(p2.koc_and_phi_infinite->is_holds());
}

TEST_CASE("rotundity probe")
{
    CHECK(rotundity_probe(SpaceHandle::lp(2), 4, config(2, 1000)).verdict() == "no-violation-found");

    const auto l1 = rotundity_probe(SpaceHandle::lp(1), 4, config(2, 1000));
    REQUIRE(l1.violation_found());
    const auto& w = l1.violations.front();
    REQUIRE(w.inputs.size() == 2);
    const auto s = SpaceHandle::lp(1);
    CHECK(s.norm(w.inputs[0]) == doctest::Approx(1.0));
    CHECK(s.norm(w.inputs[1]) == doctest::Approx(1.0));
    CHECK(s.norm(add(w.inputs[0], w.inputs[1])) >= 2.0 - 1e-9);
    CHECK(s.norm(subtract(w.inputs[0], w.inputs[1])) >= 0.1);

    const auto box = SpaceHandle::orlicz(OrliczSpec::table({{0, 0}, {1, 0}}, TableTail::infinite));
    CHECK(rotundity_probe(box, 4, config(2, 1000)).violation_found());
}

TEST_CASE("strict K-monotonicity probe")
{
    const auto flat = SpaceHandle::gamma(2.0, flat_1_3);
    const auto r = skm_probe(flat, config(4, 100));
    REQUIRE(r.violation_found());
    bool seeded = false;
    for (const auto& v : r.violations) {
        REQUIRE(v.inputs.size() == 2);
        const auto& x = v.inputs[0];
        const auto& y = v.inputs[1];
        CHECK(hlp_dominates(x, y));
        CHECK(rearrange(x).pieces() != rearrange(y).pieces());
        CHECK(std::abs(flat.norm(x) - flat.norm(y)) <= 1e-9);
        if (x.pieces() == StepFunction({{0, 1, 1.0}, {1, 3, 0.5}}).pieces()
            && y.pieces() == StepFunction::indicator(0, 2).pieces())
            seeded = true;
    }
    CHECK(seeded);

    CHECK(skm_probe(SpaceHandle::gamma(2.0, inv_sqrt), config(4, 10000)).verdict() == "no-violation-found");
    CHECK(skm_probe(SpaceHandle::lp(1), config(4, 100)).violation_found());
}

TEST_CASE("reports replay and do not depend on the worker count")
{
    auto cfg = config(9, 400);
    const auto base = run_kmono_suite(SpaceHandle::gamma(2.0, inv_sqrt), cfg);
    cfg.jobs = 4;
    CHECK(same_report(base, run_kmono_suite(SpaceHandle::gamma(2.0, inv_sqrt), cfg)));

    auto l1 = config(9, 300);
    const auto a = rotundity_probe(SpaceHandle::lp(1), 3, l1);
    l1.jobs = 3;
    CHECK(same_report(a, rotundity_probe(SpaceHandle::lp(1), 3, l1)));
    CHECK(same_report(a, rotundity_probe(SpaceHandle::lp(1), 3, config(9, 300))));
}
