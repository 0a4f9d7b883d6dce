#include "rifs/approximation.hpp"

#include "rifs/deciders.hpp"
#include "rifs/error.hpp"
#include "rifs/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rifs {

std::optional<std::size_t> rearrangement_closure_offender(const std::vector<StepFunction>& members)
{
    for (std::size_t i = 0; i < members.size(); ++i) {
        const StepFunction star = rearrange(members[i]);
        const bool found = std::any_of(members.begin(), members.end(),
                                       [&](const StepFunction& m) { return m.approx_equal(star); });
        if (!found)
            return i;
    }
    return std::nullopt;
}

CandidateSet::CandidateSet(std::vector<StepFunction> members, bool hull, bool rearrangement_closed)
    : members_(std::move(members)), hull_(hull), rearrangement_closed_(rearrangement_closed)
{
    if (members_.empty())
        fail(ErrorCode::invalid_argument, "candidate set must be nonempty");
    if (rearrangement_closed_) {
        if (auto bad = rearrangement_closure_offender(members_))
            fail(ErrorCode::invalid_argument,
                 "candidate set is not closed under rearrangement: member " + std::to_string(*bad));
    }
}

StepFunction combination(const std::vector<StepFunction>& members, const std::vector<double>& theta)
{
    if (members.size() != theta.size())
        fail(ErrorCode::invalid_argument, "coefficient count differs from member count");
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (theta[i] == 0.0)
            continue;
        for (const auto& p : members[i].pieces())
            pieces.push_back({p.t0, p.t1, theta[i] * p.v});
    }
    // Sum overlapping pieces on the common refinement.
    std::vector<double> cuts;
    for (const auto& p : pieces) {
        cuts.push_back(p.t0);
        cuts.push_back(p.t1);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> out;
    const Domain alpha = members.front().alpha();
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        double v = 0.0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (theta[i] != 0.0)
                v += theta[i] * members[i](mid);
        out.push_back({cuts[k], cuts[k + 1], v});
    }
    return StepFunction(std::move(out), alpha);
}

ProjectionResult project_finite(const StepFunction& x, const CandidateSet& A, const SpaceHandle& space)
{
    if (A.hull())
        fail(ErrorCode::invalid_argument, "project_finite needs a finite candidate set");
    const auto& members = A.members();
    std::vector<double> dist(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        dist[i] = space.norm(subtract(x, members[i]));

    ProjectionResult out;
    out.distance = *std::min_element(dist.begin(), dist.end());
    out.iterations = members.size();
    const double cutoff = out.distance + tie_tol * std::max(1.0, out.distance);
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (dist[i] > cutoff)
            continue;
        std::vector<double> e(members.size(), 0.0);
        e[i] = 1.0;
        out.trace_coefficients.push_back(e);
        out.trace_values.push_back(dist[i]);
        out.minimizers.push_back({std::move(e), members[i], dist[i] - out.distance});
    }
    return out;
}

namespace {

// Minimum of a convex function on [lo, hi]; returns (argmin, value).
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, double tol)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    std::pair<double, double> best{c, fc};
    if (fd < best.second)
        best = {d, fd};
    for (double end : {lo, hi}) {
        const double fe = f(end);
        if (fe < best.second)
            best = {end, fe};
    }
    return best;
}

} // namespace

ProjectionResult project_hull(const StepFunction& x, const CandidateSet& A, const SpaceHandle& space, double tol)
{
    if (!A.hull())
        fail(ErrorCode::invalid_argument, "project_hull needs a hull candidate set");
    if (!(tol > 0.0))
        fail(ErrorCode::invalid_argument, "tolerance must be positive");
    const auto& members = A.members();
    if (members.size() > max_hull_members)
        fail(ErrorCode::invalid_argument, "hull projection is limited to 12 members");
    const std::size_t n = members.size();

    auto objective = [&](const std::vector<double>& theta) {
        return space.norm(subtract(x, combination(members, theta)));
    };

    // Start at the best vertex so the hull never does worse than the members.
    std::vector<double> theta(n, 0.0);
    double value = infinity;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        const double v = objective(e);
        if (v < value) {
            value = v;
            theta = e;
        }
    }

    ProjectionResult out;
    out.trace_coefficients.push_back(theta);
    out.trace_values.push_back(value);

    std::size_t line_searches = 0;
    while (n > 1) {
        const double sweep_start = value;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (theta[i] == 0.0 && theta[j] == 0.0)
                    continue;
                if (++line_searches > max_line_searches) {
                    std::ostringstream msg;
                    msg << "hull projection exceeded " << max_line_searches
                        << " line searches; best distance " << value;
                    fail(ErrorCode::non_convergence, msg.str());
                }
                // Move mass s from j to i.
                auto along = [&](double s) {
                    auto t = theta;
                    t[i] += s;
                    t[j] -= s;
                    return objective(t);
                };
                const auto [s, v] = golden_min(along, -theta[i], theta[j], 1e-10);
                if (v < value) {
                    theta[i] += s;
                    theta[j] -= s;
                    theta[i] = std::clamp(theta[i], 0.0, 1.0);
                    theta[j] = std::clamp(theta[j], 0.0, 1.0);
                    value = v;
                    out.trace_coefficients.push_back(theta);
                    out.trace_values.push_back(value);
                }
            }
        }
        if (sweep_start - value < tol)
            break;
    }

    out.iterations = line_searches;
    out.distance = value;
    out.minimizers.push_back({theta, combination(members, theta), 0.0});
    return out;
}

std::vector<SequenceTerm> minimizing_sequence(const StepFunction& x, const CandidateSet& A,
                                              const SpaceHandle& space, std::size_t n, double tol)
{
    std::vector<SequenceTerm> out;
    if (n == 0)
        return out;
    const ProjectionResult r = A.hull() ? project_hull(x, A, space, tol) : project_finite(x, A, space);
    const std::size_t m = r.trace_values.size();
    if (!A.hull()) {
        const auto& best = r.minimizers.front();
        for (std::size_t k = 0; k < n; ++k)
            out.push_back({subtract(best.point, x), best.gap});
        return out;
    }
    // Evenly spaced trajectory samples ending at the final iterate.
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = n == 1 ? m - 1 : (k * (m - 1)) / (n - 1);
        const auto a = combination(A.members(), r.trace_coefficients[idx]);
        out.push_back({subtract(a, x), r.trace_values[idx] - r.distance});
    }
    return out;
}

bool k_upper_bound_check(const StepFunction& a, const CandidateSet& A)
{
    return std::all_of(A.members().begin(), A.members().end(),
                       [&](const StepFunction& m) { return hlp_dominates(m, a); });
}

namespace {

// Checks lhs(i) ≺ rhs(i) for every member; fails with the first offender.
template <class Pair>
Verdict every_member(const std::vector<StepFunction>& members, const std::string& label, Pair&& pair)
{
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto [lhs, rhs] = pair(members[i]);
        if (!hlp_dominates(lhs, rhs)) {
            const auto gap = max_domination_excess(lhs, rhs);
            return Verdict::fails(label + " violated by member " + std::to_string(i),
                                  {"member " + std::to_string(i) + " excess of maximal function", gap.t, gap.excess});
        }
    }
    return Verdict::holds(label + " for every member");
}

} // namespace

ExperimentReport dominated_projection_experiment(const StepFunction& x, const CandidateSet& A,
                                                 const OrliczSpec& psi, Domain alpha)
{
    ExperimentReport rep;
    const auto& members = A.members();

    if (auto bad = rearrangement_closure_offender(members))
        rep.rearrangement_closed = Verdict::fails("a* is not a member", {"member index", static_cast<double>(*bad), 0.0});
    else
        rep.rearrangement_closed = Verdict::holds("a* belongs to A for every member a");

    rep.members_dominated_by_x = every_member(members, "a ≺ x",
                                              [&](const StepFunction& a) { return std::pair{a, x}; });
    rep.x_dominated_by_members = every_member(members, "x ≺ a",
                                              [&](const StepFunction& a) { return std::pair{x, a}; });
    rep.koc = orlicz_koc_decider(psi, alpha);
    rep.hypotheses_hold = rep.rearrangement_closed.is_holds() && rep.members_dominated_by_x.is_holds()
        && rep.koc.is_holds();

    const auto space = SpaceHandle::orlicz(psi, OrliczFlavor::luxemburg, alpha);
    const StepFunction star = rearrange(x);
    rep.projection = A.hull() ? project_hull(star, A, space) : project_finite(star, A, space);
    rep.minimizer_set_nonempty = !rep.projection.minimizers.empty();
    return rep;
}

} // namespace rifs
