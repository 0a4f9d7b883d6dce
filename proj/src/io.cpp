#include "rifs/io.hpp"

#include "rifs/error.hpp"
#include "rifs/rearrangement.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rifs::io {

json number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

double to_number(const json& j, const char* field)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf")
            return infinity;
        if (s == "-inf")
            return -infinity;
    }
    fail(ErrorCode::schema, std::string("field '") + field + "' must be a number or \"inf\"");
}

namespace {

const json& field(const json& j, const char* name)
{
    if (!j.is_object())
        fail(ErrorCode::schema, std::string("expected an object holding '") + name + "'");
    const auto it = j.find(name);
    if (it == j.end())
        fail(ErrorCode::schema, std::string("missing field '") + name + "'");
    return *it;
}

double num_field(const json& j, const char* name) { return to_number(field(j, name), name); }

double num_field_or(const json& j, const char* name, double fallback)
{
    return j.contains(name) ? to_number(j.at(name), name) : fallback;
}

const json& array_field(const json& j, const char* name)
{
    const json& a = field(j, name);
    if (!a.is_array())
        fail(ErrorCode::schema, std::string("field '") + name + "' must be an array");
    return a;
}

std::string string_field(const json& j, const char* name)
{
    const json& s = field(j, name);
    if (!s.is_string())
        fail(ErrorCode::schema, std::string("field '") + name + "' must be a string");
    return s.get<std::string>();
}

json witness_json(const Witness& w)
{
    json j{{"what", w.what}, {"location", number(w.location)}, {"value", number(w.value)}};
    if (w.location_end)
        j["location_end"] = number(*w.location_end);
    return j;
}

json steps_json(const std::vector<StepFunction>& fs)
{
    json a = json::array();
    for (const auto& f : fs)
        a.push_back(to_json(f));
    return a;
}

json numbers_json(const std::vector<double>& v)
{
    json a = json::array();
    for (double x : v)
        a.push_back(number(x));
    return a;
}

} // namespace

json load(const std::string& source)
{
    const auto first = source.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        text = source;
    } else {
        std::ifstream in(source);
        if (!in)
            fail(ErrorCode::io, "cannot read '" + source + "'");
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse, e.what());
    }
}

Domain domain_from_json(const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "1")
            return Domain::unit;
        if (s == "inf")
            return Domain::infinite;
    } else if (j.is_number() && j.get<double>() == 1.0) {
        return Domain::unit;
    }
    fail(ErrorCode::schema, "alpha must be \"1\" or \"inf\"");
}

json to_json(Domain alpha) { return alpha == Domain::unit ? "1" : "inf"; }

json to_json(const StepFunction& x)
{
    json pieces = json::array();
    for (const auto& p : x.pieces())
        pieces.push_back({{"t0", number(p.t0)}, {"t1", number(p.t1)}, {"v", number(p.v)}});
    return {{"alpha", to_json(x.alpha())}, {"pieces", pieces}};
}

StepFunction step_function_from_json(const json& j)
{
    const Domain alpha = j.contains("alpha") ? domain_from_json(j.at("alpha")) : Domain::infinite;
    std::vector<Piece> pieces;
    for (const auto& p : array_field(j, "pieces"))
        pieces.push_back({num_field(p, "t0"), num_field(p, "t1"), num_field(p, "v")});
    try {
        return StepFunction(std::move(pieces), alpha);
    } catch (const Error& e) {
        fail(ErrorCode::schema, std::string("step function: ") + e.what());
    }
}

json to_json(const WeightSpec& w)
{
    json pieces = json::array();
    for (const auto& p : w.pieces())
        pieces.push_back({{"t0", number(p.t0)}, {"t1", number(p.t1)}, {"c", number(p.c)},
                          {"a", number(p.a)}, {"b", number(p.b)}});
    return {{"pieces", pieces}};
}

WeightSpec weight_from_json(const json& j)
{
    std::vector<WeightPiece> pieces;
    for (const auto& p : array_field(j, "pieces"))
        pieces.push_back({num_field(p, "t0"), num_field(p, "t1"), num_field(p, "c"),
                          num_field_or(p, "a", 0.0), num_field_or(p, "b", 0.0)});
    try {
        return WeightSpec(std::move(pieces));
    } catch (const Error& e) {
        fail(ErrorCode::schema, std::string("weight: ") + e.what());
    }
}

json to_json(const OrliczSpec& psi)
{
    switch (psi.family()) {
    case OrliczFamily::power:
        return {{"family", "power"}, {"params", {{"p", psi.exponent()}, {"c", psi.scale()}}}};
    case OrliczFamily::shifted_power:
        return {{"family", "shifted_power"},
                {"params", {{"a", psi.shift()}, {"p", psi.exponent()}, {"c", psi.scale()}}}};
    case OrliczFamily::exp_minus_one:
        return {{"family", "exp_minus_one"}, {"params", {{"c", psi.scale()}}}};
    case OrliczFamily::table: {
        json pts = json::array();
        for (const auto& [u, v] : psi.points())
            pts.push_back({number(u), number(v)});
        return {{"family", "table"},
                {"params", {{"points", pts}, {"tail", psi.table_tail() == TableTail::linear ? "linear" : "inf"}}}};
    }
    }
    return {};
}

OrliczSpec orlicz_from_json(const json& j)
{
    const std::string family = string_field(j, "family");
    const json params = j.contains("params") ? j.at("params") : json::object();
    try {
        if (family == "power")
            return OrliczSpec::power(num_field(params, "p"), num_field_or(params, "c", 1.0));
        if (family == "shifted_power")
            return OrliczSpec::shifted_power(num_field(params, "a"), num_field(params, "p"),
                                             num_field_or(params, "c", 1.0));
        if (family == "exp_minus_one")
            return OrliczSpec::exp_minus_one(num_field_or(params, "c", 1.0));
        if (family == "table") {
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : array_field(params, "points")) {
                if (!p.is_array() || p.size() != 2)
                    fail(ErrorCode::schema, "table points are [u, psi(u)] pairs");
                pts.emplace_back(to_number(p[0], "points"), to_number(p[1], "points"));
            }
            TableTail tail = TableTail::linear;
            if (params.contains("tail")) {
                const auto t = string_field(params, "tail");
                if (t == "inf")
                    tail = TableTail::infinite;
                else if (t != "linear")
                    fail(ErrorCode::schema, "table tail must be \"linear\" or \"inf\"");
            }
            return OrliczSpec::table(std::move(pts), tail);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::schema)
            throw;
        fail(ErrorCode::schema, std::string("Orlicz function: ") + e.what());
    }
    fail(ErrorCode::schema, "unknown Orlicz family '" + family + "'");
}

json to_json(const SpaceHandle& space)
{
    json j;
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, LorentzLambda>)
                j = {{"kind", "lambda"}, {"p", k.p}, {"weight", to_json(k.w)}};
            else if constexpr (std::is_same_v<T, LorentzGamma>)
                j = {{"kind", "gamma"}, {"p", k.p}, {"weight", to_json(k.w)}};
            else
                j = {{"kind", "orlicz"},
                     {"psi", to_json(k.psi)},
                     {"flavor", k.flavor == OrliczFlavor::luxemburg ? "luxemburg" : "orlicz"}};
        },
        space.kind());
    j["alpha"] = to_json(space.alpha());
    return j;
}

SpaceHandle space_from_json(const json& j)
{
    const std::string kind = string_field(j, "kind");
    const Domain alpha = j.contains("alpha") ? domain_from_json(j.at("alpha")) : Domain::infinite;
    if (kind == "lambda")
        return SpaceHandle::lambda(num_field(j, "p"), weight_from_json(field(j, "weight")), alpha);
    if (kind == "gamma")
        return SpaceHandle::gamma(num_field(j, "p"), weight_from_json(field(j, "weight")), alpha);
    if (kind == "lp")
        return SpaceHandle::lp(num_field(j, "p"), alpha);
    if (kind == "orlicz") {
        OrliczFlavor flavor = OrliczFlavor::luxemburg;
        if (j.contains("flavor")) {
            const auto f = string_field(j, "flavor");
            if (f == "orlicz")
                flavor = OrliczFlavor::orlicz;
            else if (f != "luxemburg")
                fail(ErrorCode::schema, "flavor must be \"luxemburg\" or \"orlicz\"");
        }
        return SpaceHandle::orlicz(orlicz_from_json(field(j, "psi")), flavor, alpha);
    }
    fail(ErrorCode::schema, "unknown space kind '" + kind + "'");
}

CandidateSet candidates_from_json(const json& j, bool hull_override)
{
    std::vector<StepFunction> members;
    bool hull = hull_override, closed = false;
    const json* list = &j;
    if (j.is_object()) {
        list = &array_field(j, "members");
        if (j.contains("hull"))
            hull = hull || j.at("hull").get<bool>();
        if (j.contains("rearrangement_closed"))
            closed = j.at("rearrangement_closed").get<bool>();
    } else if (!j.is_array()) {
        fail(ErrorCode::schema, "candidates must be an array or an object with 'members'");
    }
    for (const auto& m : *list)
        members.push_back(step_function_from_json(m));
    return CandidateSet(std::move(members), hull, closed);
}

json to_json(const MaximalCurve& curve)
{
    return {{"breaks", numbers_json(curve.breaks())},
            {"levels", numbers_json(curve.levels())},
            {"masses", numbers_json(curve.masses())},
            {"at_zero", number(curve.at_zero())},
            {"total_mass", number(curve.total_mass())}};
}

json to_json(const Verdict& v)
{
    json j{{"status", to_string(v.status)}, {"reason", v.reason}};
    if (v.witness)
        j["witness"] = witness_json(*v.witness);
    if (v.constant)
        j["constant"] = number(*v.constant);
    json log = json::array();
    for (const auto& e : v.probe_log)
        log.push_back({{"quantity", e.quantity}, {"at", number(e.at)}, {"value", number(e.value)}});
    j["probe_log"] = log;
    json parts = json::array();
    for (const auto& [name, sub] : v.parts)
        parts.push_back({{"name", name}, {"verdict", to_json(sub)}});
    j["parts"] = parts;
    return j;
}

json to_json(const ProjectionResult& r)
{
    json mins = json::array();
    for (const auto& m : r.minimizers)
        mins.push_back({{"coefficients", numbers_json(m.coefficients)},
                        {"point", to_json(m.point)},
                        {"gap", number(m.gap)}});
    json coeffs = json::array();
    for (const auto& c : r.trace_coefficients)
        coeffs.push_back(numbers_json(c));
    return {{"distance", number(r.distance)},
            {"cardinality", r.minimizers.size()},
            {"minimizers", mins},
            {"iterations", r.iterations},
            {"certificate", {{"values", numbers_json(r.trace_values)}, {"coefficients", coeffs}}}};
}

json to_json(const ExperimentReport& r)
{
    return {{"rearrangement_closed", to_json(r.rearrangement_closed)},
            {"members_dominated_by_x", to_json(r.members_dominated_by_x)},
            {"x_dominated_by_members", to_json(r.x_dominated_by_members)},
            {"koc", to_json(r.koc)},
            {"hypotheses_hold", r.hypotheses_hold},
            {"projection", to_json(r.projection)},
            {"minimizer_set_nonempty", r.minimizer_set_nonempty}};
}

json to_json(const ProbeReport& r)
{
    json v = json::array();
    for (const auto& w : r.violations)
        v.push_back({{"seed", w.seed},
                     {"trial", w.trial},
                     {"description", w.description},
                     {"magnitude", number(w.magnitude)},
                     {"inputs", steps_json(w.inputs)}});
    return {{"property", r.property},
            {"trials_run", r.trials_run},
            {"violation_count", r.violation_count},
            {"verdict", r.verdict()},
            {"violations", v}};
}

json to_json(const std::vector<DukmRow>& rows)
{
    json a = json::array();
    for (const auto& r : rows)
        a.push_back({{"n", r.n},
                     {"norm_x", number(r.norm_x)},
                     {"norm_y", number(r.norm_y)},
                     {"norm_difference", number(r.norm_difference)},
                     {"phi_ratio", number(r.phi_ratio)},
                     {"chain_holds", r.chain_holds}});
    return {{"rows", a}};
}

json to_json(const FundamentalLimits& r)
{
    json j{{"phi_infinite", to_json(r.phi_infinite)},
           {"embeds_l1", to_json(r.embeds_l1)},
           {"ratio_limit", number(r.ratio_limit)}};
    if (r.koc)
        j["koc"] = to_json(*r.koc);
    if (r.koc_and_phi_infinite)
        j["koc_and_phi_infinite"] = to_json(*r.koc_and_phi_infinite);
    return j;
}

json to_json(const DerivedWeight& d)
{
    json samples = json::array();
    for (const auto& [t, v] : d.samples)
        samples.push_back({number(t), number(v)});
    return {{"weight", to_json(d.v)},
            {"samples", samples},
            {"integral_diverges", d.integral_diverges},
            {"evidence", number(d.evidence)},
            {"hypotheses", to_json(d.hypotheses)}};
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string emit_curve(const StepFunction& x, Curve what, const std::vector<double>& grid)
{
    if (grid.empty())
        fail(ErrorCode::invalid_argument, "curve grid must be nonempty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0))
            fail(ErrorCode::invalid_argument, "curve grid points must be nonnegative");
        if (i > 0 && grid[i] < grid[i - 1])
            fail(ErrorCode::invalid_argument, "curve grid must be nondecreasing");
    }
    std::ostringstream os;
    os << "t,value\n";
    if (what == Curve::star) {
        const StepFunction star = rearrange(x);
        for (double t : grid)
            os << format_number(t) << ',' << format_number(star(t)) << '\n';
    } else {
        const MaximalCurve curve(x);
        for (double t : grid)
            os << format_number(t) << ',' << format_number(curve(t)) << '\n';
    }
    return os.str();
}

std::string dukm_csv(const std::vector<DukmRow>& rows)
{
    std::ostringstream os;
    os << "n,norm_x,norm_y,norm_difference,phi_ratio,chain_holds\n";
    for (const auto& r : rows)
        os << r.n << ',' << format_number(r.norm_x) << ',' << format_number(r.norm_y) << ','
           << format_number(r.norm_difference) << ',' << format_number(r.phi_ratio) << ','
           << (r.chain_holds ? "true" : "false") << '\n';
    return os.str();
}

std::string trace_csv(const ProjectionResult& r)
{
    std::ostringstream os;
    os << "k,norm,gap\n";
    for (std::size_t k = 0; k < r.trace_values.size(); ++k)
        os << k << ',' << format_number(r.trace_values[k]) << ',' << format_number(r.trace_values[k] - r.distance)
           << '\n';
    return os.str();
}

} // namespace rifs::io
