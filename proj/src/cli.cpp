#include "rifs/cli.hpp"

#include "rifs/error.hpp"
#include "rifs/io.hpp"
#include "rifs/rearrangement.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

namespace rifs {

namespace {

using io::json;

// Missing inputs a subcommand needs; reported as a usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool present, const std::string& what)
{
    if (!present)
        throw UsageError("missing required option " + what);
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Inputs {
    std::string in, x, y, space, weight, psi, target, candidates, trace;
    std::string alpha = "inf";
    std::string format = "json";
    std::string what;
    std::vector<double> grid;
    std::optional<double> p;
    std::optional<double> tol;
    double hull_tol = 1e-6;
    bool hull = false;
    bool experiment = false;
    bool self_test = false;
    std::size_t sequence = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t max_pieces = 8;
    double tolerance = 1e-9;
    unsigned jobs = 1;
    std::size_t n_max = 50;
    std::size_t dim = 8;
};

Domain parse_alpha(const std::string& s) { return io::domain_from_json(json(s)); }

int cmd_rearrange(const Inputs& in, std::ostream& out)
{
    const StepFunction x = io::step_function_from_json(io::load(in.in));
    if (in.format == "csv") {
        require(!in.grid.empty(), "--grid for csv output");
        out << io::emit_curve(x, io::Curve::star, in.grid);
    } else {
        print(out, io::to_json(rearrange(x)));
    }
    return 0;
}

int cmd_maximal(const Inputs& in, std::ostream& out)
{
    const StepFunction x = io::step_function_from_json(io::load(in.in));
    if (in.format == "csv") {
        require(!in.grid.empty(), "--grid for csv output");
        out << io::emit_curve(x, io::Curve::starstar, in.grid);
        return 0;
    }
    const MaximalCurve curve(x);
    json j = io::to_json(curve);
    if (!in.grid.empty()) {
        json values = json::array();
        for (double t : in.grid)
            values.push_back({{"t", io::number(t)}, {"value", io::number(curve(t))}});
        j["values"] = values;
    }
    print(out, j);
    return 0;
}

int cmd_dominates(const Inputs& in, std::ostream& out)
{
    const StepFunction x = io::step_function_from_json(io::load(in.x));
    const StepFunction y = io::step_function_from_json(io::load(in.y));
    const double tol = in.tol.value_or(default_domination_tol(y));
    const auto gap = max_domination_excess(x, y);
    print(out, {{"dominates", hlp_dominates(x, y, tol)},
                {"tolerance", io::number(tol)},
                {"max_excess", {{"t", io::number(gap.t)}, {"excess", io::number(gap.excess)}}}});
    return 0;
}

int cmd_norm(const Inputs& in, std::ostream& out)
{
    const SpaceHandle space = io::space_from_json(io::load(in.space));
    const StepFunction x = io::step_function_from_json(io::load(in.in));
    print(out, {{"norm", io::number(space.norm(x))}});
    return 0;
}

int cmd_fundamental(const Inputs& in, std::ostream& out)
{
    const SpaceHandle space = io::space_from_json(io::load(in.space));
    require(!in.grid.empty(), "--t");
    if (in.format == "csv") {
        out << "t,value\n";
        for (double t : in.grid)
            out << io::format_number(t) << ',' << io::format_number(fundamental_function(space, t)) << '\n';
        return 0;
    }
    json rows = json::array();
    for (double t : in.grid)
        rows.push_back({{"t", io::number(t)}, {"value", io::number(fundamental_function(space, t))}});
    print(out, {{"phi", rows}});
    return 0;
}

int cmd_check(const Inputs& in, std::ostream& out)
{
    auto weight_and_p = [&] {
        require(in.p.has_value(), "--p");
        require(!in.weight.empty(), "--weight");
        return std::pair{*in.p, io::weight_from_json(io::load(in.weight))};
    };
    auto psi = [&] {
        require(!in.psi.empty(), "--psi");
        return io::orlicz_from_json(io::load(in.psi));
    };

    Verdict v;
    if (in.what == "reflexive") {
        auto [p, w] = weight_and_p();
        v = gamma_reflexive_decider(p, w);
    } else if (in.what == "approx-compact") {
        auto [p, w] = weight_and_p();
        v = gamma_approx_compact_decider(p, w);
    } else if (in.what == "rbp") {
        auto [p, w] = weight_and_p();
        v = rbp_check(p, w);
    } else if (in.what == "koc") {
        v = orlicz_koc_decider(psi(), parse_alpha(in.alpha));
    } else if (in.what == "delta2") {
        v = is_delta2(psi());
    } else {
        require(!in.space.empty(), "--space");
        v = embeds_in_L1(io::space_from_json(io::load(in.space)));
    }
    print(out, io::to_json(v));
    return 0;
}

int cmd_project(const Inputs& in, std::ostream& out)
{
    const SpaceHandle space = io::space_from_json(io::load(in.space));
    const StepFunction x = io::step_function_from_json(io::load(in.target));
    const CandidateSet A = io::candidates_from_json(io::load(in.candidates), in.hull);

    ProjectionResult r;
    json j;
    if (in.experiment) {
        const auto* o = std::get_if<OrliczSpace>(&space.kind());
        if (!o)
            throw UsageError("--experiment needs an Orlicz space");
        const ExperimentReport rep = dominated_projection_experiment(x, A, o->psi, space.alpha());
        r = rep.projection;
        j = io::to_json(rep);
    } else {
        r = A.hull() ? project_hull(x, A, space, in.hull_tol) : project_finite(x, A, space);
        j = io::to_json(r);
    }
    if (in.sequence > 0) {
        json seq = json::array();
        for (const auto& term : minimizing_sequence(x, A, space, in.sequence, in.hull_tol))
            seq.push_back({{"difference", io::to_json(term.difference)}, {"gap", io::number(term.gap)}});
        j["sequence"] = seq;
    }
    if (!in.trace.empty()) {
        std::ofstream f(in.trace);
        if (!f)
            fail(ErrorCode::io, "cannot write '" + in.trace + "'");
        f << io::trace_csv(r);
    }
    print(out, j);
    return 0;
}

int cmd_verify(const Inputs& in, std::ostream& out)
{
    TrialConfig cfg;
    cfg.seed = in.seed;
    cfg.trials = in.trials;
    cfg.max_pieces = in.max_pieces;
    cfg.tolerance = in.tolerance;
    cfg.jobs = in.jobs;

    if (in.what == "core") {
        RearrangeFn stub;
        if (in.self_test) {
            // Planted defect: ascending instead of descending order.
            stub = [](const StepFunction& x) {
                const StepFunction s = rearrange(x);
                std::vector<Piece> rev;
                double cursor = 0.0;
                for (auto it = s.pieces().rbegin(); it != s.pieces().rend(); ++it) {
                    rev.push_back({cursor, cursor + it->length(), it->v});
                    cursor += it->length();
                }
                return StepFunction(std::move(rev), x.alpha());
            };
        }
        print(out, io::to_json(run_core_suite(cfg, stub)));
        return 0;
    }

    require(!in.space.empty(), "--space");
    const SpaceHandle space = io::space_from_json(io::load(in.space));
    if (in.what == "kmono") {
        print(out, io::to_json(run_kmono_suite(space, cfg)));
    } else if (in.what == "dukm") {
        const auto rows = dukm_sequence_run(space, in.n_max);
        if (in.format == "csv")
            out << io::dukm_csv(rows);
        else
            print(out, io::to_json(rows));
    } else if (in.what == "limits") {
        print(out, io::to_json(fundamental_limits(space)));
    } else if (in.what == "rotundity") {
        print(out, io::to_json(rotundity_probe(space, in.dim, cfg)));
    } else {
        print(out, io::to_json(skm_probe(space, cfg)));
    }
    return 0;
}

void write_error(std::ostream& err, std::string_view code, const std::string& message)
{
    err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rearrangement-invariant function space toolkit", "rifs_cli"};
    app.require_subcommand(1, 1);

    Inputs in;
    std::function<int()> action;
    auto formats = CLI::IsMember({"json", "csv"});

    auto* rear = app.add_subcommand("rearrange", "Decreasing rearrangement x*");
    rear->add_option("--in", in.in, "Step function (file or inline JSON)")->required();
    rear->add_option("--format", in.format)->check(formats);
    rear->add_option("--grid", in.grid, "Sample points for csv output")->delimiter(',');
    rear->callback([&] { action = [&] { return cmd_rearrange(in, out); }; });

    auto* maxi = app.add_subcommand("maximal", "Maximal function x**");
    maxi->add_option("--in", in.in)->required();
    maxi->add_option("--format", in.format)->check(formats);
    maxi->add_option("--grid", in.grid)->delimiter(',');
    maxi->callback([&] { action = [&] { return cmd_maximal(in, out); }; });

    auto* dom = app.add_subcommand("dominates", "Hardy-Littlewood-Polya relation x ≺ y");
    dom->add_option("--x", in.x)->required();
    dom->add_option("--y", in.y)->required();
    dom->add_option("--tol", in.tol);
    dom->callback([&] { action = [&] { return cmd_dominates(in, out); }; });

    auto* nrm = app.add_subcommand("norm", "Norm of a step function");
    nrm->add_option("--space", in.space)->required();
    nrm->add_option("--in", in.in)->required();
    nrm->callback([&] { action = [&] { return cmd_norm(in, out); }; });

    auto* fun = app.add_subcommand("fundamental", "Fundamental function phi(t)");
    fun->add_option("--space", in.space)->required();
    fun->add_option("--t", in.grid)->delimiter(',')->required();
    fun->add_option("--format", in.format)->check(formats);
    fun->callback([&] { action = [&] { return cmd_fundamental(in, out); }; });

    auto* chk = app.add_subcommand("check", "Decision procedures");
    chk->add_option("what", in.what)
        ->required()
        ->check(CLI::IsMember({"reflexive", "approx-compact", "koc", "embeds-l1", "rbp", "delta2"}));
    chk->add_option("--p", in.p);
    chk->add_option("--weight", in.weight);
    chk->add_option("--psi", in.psi);
    chk->add_option("--space", in.space);
    chk->add_option("--alpha", in.alpha)->check(CLI::IsMember({"1", "inf"}));
    chk->callback([&] { action = [&] { return cmd_check(in, out); }; });

    auto* prj = app.add_subcommand("project", "Best approximation from a candidate set");
    prj->add_option("--space", in.space)->required();
    prj->add_option("--target", in.target)->required();
    prj->add_option("--candidates", in.candidates)->required();
    prj->add_flag("--hull", in.hull, "Optimize over the convex hull");
    prj->add_option("--tol", in.hull_tol);
    prj->add_option("--sequence", in.sequence, "Emit this many minimizing-sequence terms");
    prj->add_option("--trace", in.trace, "Write the optimizer trace as CSV");
    prj->add_flag("--experiment", in.experiment, "Run the dominated projection experiment for P_A(x*)");
    prj->callback([&] { action = [&] { return cmd_project(in, out); }; });

    auto* ver = app.add_subcommand("verify", "Property probes");
    ver->add_option("what", in.what)
        ->required()
        ->check(CLI::IsMember({"core", "kmono", "dukm", "limits", "rotundity", "skm"}));
    ver->add_option("--space", in.space);
    ver->add_option("--seed", in.seed)->envname("RIFS_SEED");
    ver->add_option("--trials", in.trials);
    ver->add_option("--max-pieces", in.max_pieces);
    ver->add_option("--tolerance", in.tolerance);
    ver->add_option("--jobs", in.jobs);
    ver->add_option("--n-max", in.n_max);
    ver->add_option("--dim", in.dim);
    ver->add_option("--format", in.format)->check(formats);
    ver->add_flag("--self-test", in.self_test, "Plant a corrupted rearrangement in the core suite");
    ver->callback([&] { action = [&] { return cmd_verify(in, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        write_error(err, to_string(e.code()), e.what());
    } catch (const io::json::exception& e) {
        write_error(err, to_string(ErrorCode::schema), e.what());
    } catch (const std::exception& e) {
        write_error(err, "internal", e.what());
    }
    return 1;
}

} // namespace rifs
