#include "rifs/harness.hpp"

#include "rifs/deciders.hpp"
#include "rifs/error.hpp"
#include "rifs/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace rifs {

void TrialConfig::validate() const
{
    if (trials < 1)
        fail(ErrorCode::invalid_argument, "trials must be at least 1");
    if (max_pieces < 1)
        fail(ErrorCode::invalid_argument, "max_pieces must be at least 1");
    if (!(value_range.lo > 0.0) || !(value_range.hi >= value_range.lo))
        fail(ErrorCode::invalid_argument, "value_range must be a nonempty positive interval");
    if (!(length_range.lo > 0.0) || !(length_range.hi >= length_range.lo))
        fail(ErrorCode::invalid_argument, "length_range must be a nonempty positive interval");
    if (!(tolerance >= 0.0))
        fail(ErrorCode::invalid_argument, "tolerance must be nonnegative");
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

namespace {

double log_uniform(std::mt19937_64& rng, Range r)
{
    std::uniform_real_distribution<double> u(std::log(r.lo), std::log(r.hi));
    return r.lo == r.hi ? r.lo : std::exp(u(rng));
}

double relative_slack(double tol, double scale) { return tol * std::max(1.0, std::abs(scale)); }

// Runs fn(rng, index, witness) for every trial index, possibly on several
// threads, and collects the violations in trial order.
template <class Fn>
ProbeReport run_trials(const TrialConfig& cfg, std::string property, std::size_t first_index, Fn&& fn)
{
    cfg.validate();
    ProbeReport rep;
    rep.property = std::move(property);
    rep.trials_run = cfg.trials;

    std::vector<ViolationWitness> found;
    std::size_t count = 0;
    std::mutex mu;
    std::exception_ptr error;

    auto worker = [&](std::size_t begin, std::size_t end) {
        try {
            std::vector<ViolationWitness> local;
            std::size_t local_count = 0;
            for (std::size_t i = begin; i < end; ++i) {
                const std::size_t index = first_index + i;
                auto rng = trial_stream(cfg.seed, index);
                ViolationWitness w;
                if (fn(rng, index, w)) {
                    w.seed = cfg.seed;
                    w.trial = index;
                    ++local_count;
                    if (local.size() < max_reported_witnesses)
                        local.push_back(std::move(w));
                }
            }
            std::lock_guard lock(mu);
            count += local_count;
            found.insert(found.end(), local.begin(), local.end());
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error)
                error = std::current_exception();
        }
    };

    const std::size_t jobs = std::clamp<std::size_t>(cfg.jobs, 1, cfg.trials);
    if (jobs == 1) {
        worker(0, cfg.trials);
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (cfg.trials + jobs - 1) / jobs;
        for (std::size_t j = 0; j < jobs; ++j) {
            const std::size_t b = j * chunk, e = std::min(cfg.trials, b + chunk);
            if (b < e)
                threads.emplace_back(worker, b, e);
        }
        for (auto& t : threads)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.trial < b.trial; });
    if (found.size() > max_reported_witnesses)
        found.resize(max_reported_witnesses);
    rep.violations = std::move(found);
    rep.violation_count = count;
    return rep;
}

void merge_into(ProbeReport& into, ProbeReport&& from)
{
    into.trials_run += from.trials_run;
    into.violation_count += from.violation_count;
    for (auto& w : from.violations)
        if (into.violations.size() < max_reported_witnesses)
            into.violations.push_back(std::move(w));
}

std::string describe_at(const std::string& what, double t, double lhs, double rhs)
{
    std::ostringstream os;
    os.precision(17);
    os << what << " at t=" << t << ": " << lhs << " vs " << rhs;
    return os.str();
}

// Same pieces in shuffled order with fresh gaps: equimeasurable with x.
StepFunction shuffled(const StepFunction& x, std::mt19937_64& rng)
{
    auto pieces = x.pieces();
    std::shuffle(pieces.begin(), pieces.end(), rng);
    std::uniform_real_distribution<double> gap(0.0, 1.0);
    double cursor = 0.0;
    for (auto& p : pieces) {
        cursor += gap(rng) < 0.3 ? gap(rng) : 0.0;
        const double len = p.length();
        p = {cursor, cursor + len, -p.v};
        cursor += len;
    }
    return StepFunction(std::move(pieces), x.alpha());
}

double l1_distance(const StepFunction& x, const StepFunction& y)
{
    const StepFunction d = subtract(x, y);
    double s = 0.0;
    for (const auto& p : d.pieces())
        s += std::abs(p.v) * p.length();
    return s;
}

} // namespace

StepFunction random_step_function(std::mt19937_64& rng, const TrialConfig& cfg, Domain alpha, bool nonnegative)
{
    std::uniform_int_distribution<std::size_t> count(1, cfg.max_pieces);
    std::uniform_real_distribution<double> value(cfg.value_range.lo, cfg.value_range.hi);
    std::bernoulli_distribution coin(0.5), gap(0.3);

    const std::size_t n = count(rng);
    std::vector<Piece> pieces;
    double cursor = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (gap(rng))
            cursor += log_uniform(rng, cfg.length_range);
        const double len = log_uniform(rng, cfg.length_range);
        double v = value(rng);
        if (!nonnegative && coin(rng))
            v = -v;
        pieces.push_back({cursor, cursor + len, v});
        cursor += len;
    }
    if (alpha == Domain::unit) {
        std::uniform_real_distribution<double> end(0.5, 1.0);
        const double factor = end(rng) / cursor;
        for (auto& p : pieces) {
            p.t0 *= factor;
            p.t1 = std::min(1.0, p.t1 * factor);
        }
    }
    return StepFunction(std::move(pieces), alpha);
}

ProbeReport run_core_suite(const TrialConfig& cfg, RearrangeFn rearranger)
{
    if (!rearranger)
        rearranger = [](const StepFunction& x) { return rearrange(x); };

    const std::vector<SpaceHandle> spaces{
        SpaceHandle::lambda(2.0, WeightSpec::power(1.0, -0.5)),
        SpaceHandle::gamma(2.0, WeightSpec::constant(1.0)),
        SpaceHandle::orlicz(OrliczSpec::power(3.0)),
    };
    const double tol = cfg.tolerance;

    return run_trials(cfg, "core", 0, [&](std::mt19937_64& rng, std::size_t, ViolationWitness& w) {
        const StepFunction x = random_step_function(rng, cfg);
        const StepFunction y1 = random_step_function(rng, cfg);
        const StepFunction y2 = random_step_function(rng, cfg);
        w.inputs = {x, y1, y2};
        auto flag = [&](std::string what, double t, double lhs, double rhs) {
            w.description = describe_at(what, t, lhs, rhs);
            w.magnitude = lhs - rhs;
            return true;
        };

        const StepFunction xs = rearranger(x);
        const MaximalCurve cx(x);

        // x* is nonincreasing, nonnegative and equimeasurable with x.
        double prev = infinity;
        for (const auto& p : xs.pieces()) {
            if (p.v < 0.0 || p.v > prev)
                return flag("x* not nonincreasing", p.t0, p.v, prev);
            prev = p.v;
            const double dx = distribution(x, p.v * (1.0 - 1e-12));
            const double ds = distribution(xs, p.v * (1.0 - 1e-12));
            if (std::abs(dx - ds) > relative_slack(tol, dx))
                return flag("distribution of x* differs from x", p.v, ds, dx);
        }
        if (std::abs(xs.support_measure() - x.support_measure()) > relative_slack(tol, x.support_measure()))
            return flag("support measure of x* differs", 0.0, xs.support_measure(), x.support_measure());

        // x* <= x** just inside every piece of x*, x** nonincreasing and continuous.
        for (const auto& p : xs.pieces()) {
            const double t = p.t0 + 1e-9 * p.length();
            if (p.v > cx(t) + relative_slack(tol, cx(t)))
                return flag("x* > x**", t, p.v, cx(t));
        }
        const auto& br = cx.breaks();
        double last = cx.at_zero();
        for (std::size_t k = 1; k < br.size(); ++k) {
            const double b = br[k];
            const double left = cx.levels()[k - 1] + cx.masses()[k - 1] / b;
            const double right = cx.levels()[k] + cx.masses()[k] / b;
            if (std::abs(left - right) > relative_slack(tol, left))
                return flag("x** discontinuous", b, left, right);
            if (left > last + relative_slack(tol, last))
                return flag("x** increasing", b, left, last);
            last = left;
        }

        // (x + y)** <= x** + y** on the merged breakpoints.
        const MaximalCurve cy(y1), cs(add(x, y1));
        const std::vector<StepFunction> pair{x, y1, rearrange(x), rearrange(y1)};
        for (double t : common_breakpoints(pair)) {
            if (t <= 0.0)
                continue;
            const double lhs = cs(t), rhs = cx(t) + cy(t);
            if (lhs > rhs + relative_slack(tol, rhs))
                return flag("(x+y)** > x** + y**", t, lhs, rhs);
        }

        // x + y1 + y2 ≺ x* + y1* + y2*.
        const StepFunction lhs = add(add(x, y1), y2);
        const StepFunction rhs = add(add(xs, rearranger(y1)), rearranger(y2));
        if (!hlp_dominates(lhs, rhs, relative_slack(tol, rhs.sup_norm()))) {
            const auto g = max_domination_excess(lhs, rhs);
            return flag("x + y1 + y2 not ≺ x* + y1* + y2*", g.t, g.excess, 0.0);
        }

        // Equimeasurable functions share every r.i. norm.
        const StepFunction xp = shuffled(x, rng);
        for (const auto& space : spaces) {
            const double n0 = space.norm(x);
            for (const StepFunction* other : {&xs, &xp}) {
                const double n1 = space.norm(*other);
                if (std::abs(n0 - n1) > relative_slack(tol, n0))
                    return flag("norms of equimeasurable functions differ in " + space.describe(), 0.0, n1, n0);
            }
        }

        // Transitivity on a constructed chain x ≺ x* + b* ≺ (x* + b*)* + c*.
        const StepFunction b = random_step_function(rng, cfg, Domain::infinite, true);
        const StepFunction mid = add(xs, rearrange(b));
        const StepFunction top = add(rearrange(mid), rearrange(y2));
        if (hlp_dominates(x, mid, relative_slack(tol, mid.sup_norm()))
            && hlp_dominates(mid, top, relative_slack(tol, top.sup_norm()))
            && !hlp_dominates(x, top, relative_slack(tol, top.sup_norm()))) {
            const auto g = max_domination_excess(x, top);
            return flag("domination not transitive", g.t, g.excess, 0.0);
        }
        return false;
    });
}

ProbeReport run_kmono_suite(const SpaceHandle& space, const TrialConfig& cfg)
{
    return run_trials(cfg, "kmono", 0, [&](std::mt19937_64& rng, std::size_t, ViolationWitness& w) {
        const StepFunction x = random_step_function(rng, cfg, space.alpha());
        const StepFunction b = random_step_function(rng, cfg, space.alpha(), true);
        const StepFunction y = add(rearrange(x), rearrange(b));
        const double nx = space.norm(x), ny = space.norm(y);
        if (nx > ny + relative_slack(cfg.tolerance, ny)) {
            w.inputs = {x, y};
            w.description = describe_at("||x|| > ||y|| with x ≺ y", 0.0, nx, ny);
            w.magnitude = nx - ny;
            return true;
        }
        return false;
    });
}

std::vector<DukmRow> dukm_sequence_run(const SpaceHandle& space, std::size_t n_max)
{
    if (space.alpha() != Domain::infinite)
        fail(ErrorCode::invalid_argument, "the DUKM sequences live on [0, infinity)");
    auto x_n = [](std::size_t n) { return StepFunction::indicator(0.0, 2.0 * n, 1.0 / (2.0 * n)); };
    auto y_n = [](std::size_t n) { return StepFunction::indicator(0.0, static_cast<double>(n), 1.0 / n); };

    std::vector<DukmRow> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const StepFunction x = x_n(n), y = y_n(n), x_next = x_n(n + 1);
        DukmRow r;
        r.n = n;
        r.norm_x = space.norm(x);
        r.norm_y = space.norm(y);
        r.norm_difference = space.norm(subtract(rearrange(y), rearrange(x)));
        r.phi_ratio = fundamental_function(space, 2.0 * n) / (2.0 * n);
        r.chain_holds = hlp_dominates(x_next, x) && hlp_dominates(x, y);
        rows.push_back(r);
    }
    return rows;
}

FundamentalLimits fundamental_limits(const SpaceHandle& space)
{
    FundamentalLimits out;
    out.phi_infinite = phi_at_infinity(space);
    out.embeds_l1 = embeds_in_L1(space);
    out.ratio_limit = fundamental_ratio_limit(space);
    if (const auto* o = std::get_if<OrliczSpace>(&space.kind())) {
        out.koc = orlicz_koc_decider(o->psi, space.alpha());
        const Verdict& k = *out.koc;
        const Verdict& p = out.phi_infinite;
        if (k.is_holds() && p.is_holds())
            out.koc_and_phi_infinite = Verdict::holds("K-order continuous with phi(infinity) = infinity");
        else if (k.is_fails())
            out.koc_and_phi_infinite = Verdict::fails("not K-order continuous: " + k.reason, *k.witness);
        else if (p.is_fails())
            out.koc_and_phi_infinite = Verdict::fails("phi(infinity) is finite", *p.witness);
        else
            out.koc_and_phi_infinite = Verdict::inconclusive("K-order continuity is undecided");
    }
    return out;
}

ProbeReport rotundity_probe(const SpaceHandle& space, std::size_t dim_grid, const TrialConfig& cfg)
{
    if (dim_grid < 2)
        fail(ErrorCode::invalid_argument, "rotundity probe needs at least two cells");
    cfg.validate();
    constexpr double min_separation = 0.1;
    const double h = space.alpha() == Domain::unit ? 1.0 / static_cast<double>(dim_grid) : 1.0;
    const double tol = cfg.tolerance;

    auto normalized = [&](std::vector<double> v) {
        const StepFunction f = StepFunction::from_cells(v, h, space.alpha());
        const double n = space.norm(f);
        return n > 0.0 ? scale(f, 1.0 / n) : f;
    };
    // ||x + y|| when x, y are unit vectors far enough apart, else -inf.
    auto midpoint_norm = [&](const StepFunction& x, const StepFunction& y) {
        if (x.is_zero() || y.is_zero() || space.norm(subtract(x, y)) < min_separation)
            return -infinity;
        return space.norm(add(x, y));
    };
    auto record = [&](ViolationWitness& w, const StepFunction& x, const StepFunction& y, double s) {
        w.inputs = {x, y};
        w.description = describe_at("||x + y|| >= 2 - tol on the unit sphere", 0.0, s, 2.0);
        w.magnitude = s;
    };

    // Deterministic family: disjoint cells, and a cell against a two-cell sum.
    std::vector<std::pair<StepFunction, StepFunction>> seeds;
    const std::size_t k = std::min<std::size_t>(dim_grid, 4);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            std::vector<double> ei(dim_grid, 0.0), ej(dim_grid, 0.0), eij(dim_grid, 0.0);
            ei[i] = 1.0;
            ej[j] = 1.0;
            eij[i] = eij[j] = 1.0;
            seeds.emplace_back(normalized(ei), normalized(ej));
            seeds.emplace_back(normalized(ei), normalized(eij));
        }
    }
    ProbeReport rep;
    rep.property = "rotundity";
    for (std::size_t s = 0; s < seeds.size(); ++s) {
        ++rep.trials_run;
        const auto& [x, y] = seeds[s];
        const double m = midpoint_norm(x, y);
        if (m >= 2.0 - tol) {
            ++rep.violation_count;
            if (rep.violations.size() < max_reported_witnesses) {
                ViolationWitness w;
                w.seed = cfg.seed;
                w.trial = s;
                record(w, x, y, m);
                rep.violations.push_back(std::move(w));
            }
        }
    }

    auto random_vector = [&](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> value(cfg.value_range.lo, cfg.value_range.hi);
        std::bernoulli_distribution coin(0.5), zero(0.3);
        std::vector<double> v(dim_grid);
        for (auto& c : v)
            c = zero(rng) ? 0.0 : (coin(rng) ? 1.0 : -1.0) * value(rng);
        return v;
    };

    const std::size_t offset = seeds.size();
    merge_into(rep, run_trials(cfg, "rotundity", offset, [&](std::mt19937_64& rng, std::size_t, ViolationWitness& w) {
        auto vx = random_vector(rng);
        auto vy = random_vector(rng);
        StepFunction x = normalized(vx), y = normalized(vy);
        double best = midpoint_norm(x, y);
        // Local refinement: random coordinate nudges of y that raise ||x + y||.
        std::normal_distribution<double> nudge(0.0, 0.1);
        std::uniform_int_distribution<std::size_t> cell(0, dim_grid - 1);
        for (int step = 0; step < 20 && best < 2.0 - tol; ++step) {
            auto cand = vy;
            cand[cell(rng)] += nudge(rng) * (cfg.value_range.hi);
            const StepFunction yc = normalized(cand);
            const double m = midpoint_norm(x, yc);
            if (m > best) {
                best = m;
                vy = std::move(cand);
                y = yc;
            }
        }
        if (best >= 2.0 - tol) {
            record(w, x, y, best);
            return true;
        }
        return false;
    }));
    return rep;
}

ProbeReport skm_probe(const SpaceHandle& space, const TrialConfig& cfg)
{
    cfg.validate();
    constexpr double min_gap = 1e-3;
    const double tol = cfg.tolerance;

    // Violation: x ≺ y, x* and y* at least min_gap apart in L^1, equal norms.
    auto check = [&](const StepFunction& x, const StepFunction& y, ViolationWitness& w) {
        if (!hlp_dominates(x, y))
            return false;
        if (l1_distance(rearrange(x), rearrange(y)) < min_gap)
            return false;
        const double nx = space.norm(x), ny = space.norm(y);
        if (std::abs(nx - ny) > relative_slack(tol, ny))
            return false;
        w.inputs = {x, y};
        w.description = describe_at("x ≺ y, x* != y*, ||x|| = ||y||", 0.0, nx, ny);
        w.magnitude = std::abs(nx - ny);
        return true;
    };

    ProbeReport rep;
    rep.property = "skm";
    if (space.alpha() == Domain::infinite) {
        const std::vector<std::pair<StepFunction, StepFunction>> seeds{
            {StepFunction::indicator(0.0, 2.0), StepFunction::indicator(0.0, 1.0, 2.0)},
            {add(StepFunction::indicator(0.0, 1.0), StepFunction::indicator(1.0, 3.0, 0.5)),
             StepFunction::indicator(0.0, 2.0)},
        };
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            ++rep.trials_run;
            ViolationWitness w;
            if (check(seeds[s].first, seeds[s].second, w)) {
                w.seed = cfg.seed;
                w.trial = s;
                ++rep.violation_count;
                rep.violations.push_back(std::move(w));
            }
        }
    }

    const std::size_t offset = rep.trials_run;
    merge_into(rep, run_trials(cfg, "skm", offset, [&](std::mt19937_64& rng, std::size_t, ViolationWitness& w) {
        const StepFunction y = random_step_function(rng, cfg, space.alpha());
        const StepFunction ys = rearrange(y);
        if (ys.is_zero())
            return false;
        // Blocks are unions of consecutive pieces of y*; the last block may
        // stretch past the support.
        std::bernoulli_distribution keep(0.5), stretch(0.5);
        std::uniform_real_distribution<double> extra(0.0, 1.0);
        std::vector<double> cuts{0.0};
        const auto br = ys.breakpoints();
        for (std::size_t i = 1; i + 1 < br.size(); ++i)
            if (keep(rng))
                cuts.push_back(br[i]);
        double end = ys.support_end();
        if (stretch(rng))
            end = std::min(domain_length(space.alpha()), end * (1.0 + extra(rng)));
        cuts.push_back(end);

        std::vector<Piece> blocks;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            double mass = 0.0;
            for (const auto& p : ys.pieces()) {
                const double lo = std::max(p.t0, cuts[k]), hi = std::min(p.t1, cuts[k + 1]);
                if (hi > lo)
                    mass += p.v * (hi - lo);
            }
            blocks.push_back({cuts[k], cuts[k + 1], mass / (cuts[k + 1] - cuts[k])});
        }
        const StepFunction x(std::move(blocks), space.alpha());
        return check(x, y, w);
    }));
    return rep;
}

} // namespace rifs
