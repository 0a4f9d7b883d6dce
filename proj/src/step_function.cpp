#include "rifs/step_function.hpp"

#include "rifs/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rifs {

namespace {

double point_tol(double t) { return canonical_tol * std::max(1.0, std::abs(t)); }

void validate(const std::vector<Piece>& pieces, Domain alpha)
{
    const double end = domain_length(alpha);
    for (const auto& p : pieces) {
        if (!std::isfinite(p.t0) || !std::isfinite(p.t1) || !std::isfinite(p.v))
            fail(ErrorCode::invalid_argument, "step function piece has a non-finite field");
        if (p.t0 < 0.0)
            fail(ErrorCode::invalid_argument, "step function piece starts before 0");
        if (!(p.t1 > p.t0))
            fail(ErrorCode::invalid_argument,
                 "step function piece [" + std::to_string(p.t0) + ", " + std::to_string(p.t1) +
                     ") is empty or reversed");
        if (p.t1 > end + point_tol(end))
            fail(ErrorCode::invalid_argument, "step function piece extends beyond the domain");
    }
}

std::vector<Piece> canonicalize(std::vector<Piece> pieces, Domain alpha)
{
    validate(pieces, alpha);
    std::stable_sort(pieces.begin(), pieces.end(),
                     [](const Piece& a, const Piece& b) { return a.t0 < b.t0; });

    double scale = 0.0;
    for (const auto& p : pieces)
        scale = std::max(scale, std::abs(p.v));
    const double value_tol = canonical_tol * scale;

    std::vector<Piece> out;
    out.reserve(pieces.size());
    for (auto p : pieces) {
        if (!out.empty()) {
            const double prev_end = out.back().t1;
            if (p.t0 < prev_end - point_tol(prev_end))
                fail(ErrorCode::invalid_argument, "step function pieces overlap");
            if (std::abs(p.t0 - prev_end) <= point_tol(prev_end))
                p.t0 = prev_end;
        }
        if (alpha == Domain::unit)
            p.t1 = std::min(p.t1, 1.0);
        if (std::abs(p.v) <= value_tol || p.t1 - p.t0 <= point_tol(p.t1))
            continue;
        if (!out.empty() && out.back().t1 == p.t0 && std::abs(out.back().v - p.v) <= value_tol) {
            out.back().t1 = p.t1;
            continue;
        }
        out.push_back(p);
    }
    return out;
}

template <class Op>
StepFunction binary(const StepFunction& x, const StepFunction& y, Op op)
{
    if (x.alpha() != y.alpha())
        fail(ErrorCode::invalid_argument, "step functions live on different domains");
    const StepFunction both[] = {x, y};
    const auto points = common_breakpoints(both);
    std::vector<Piece> pieces;
    pieces.reserve(points.size());
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double mid = 0.5 * (points[i] + points[i + 1]);
        const double v = op(x(mid), y(mid));
        if (v != 0.0)
            pieces.push_back({points[i], points[i + 1], v});
    }
    return StepFunction(std::move(pieces), x.alpha());
}

} // namespace

StepFunction::StepFunction(std::vector<Piece> pieces, Domain alpha)
    : alpha_(alpha), pieces_(canonicalize(std::move(pieces), alpha))
{
}

StepFunction StepFunction::indicator(double t0, double t1, double value, Domain alpha)
{
    return StepFunction({{t0, t1, value}}, alpha);
}

StepFunction StepFunction::from_cells(std::span<const double> values, double cell_length, Domain alpha)
{
    if (!(cell_length > 0.0))
        fail(ErrorCode::invalid_argument, "cell length must be positive");
    std::vector<Piece> pieces;
    pieces.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        pieces.push_back({static_cast<double>(k) * cell_length,
                          static_cast<double>(k + 1) * cell_length, values[k]});
    return StepFunction(std::move(pieces), alpha);
}

double StepFunction::operator()(double t) const
{
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                               [](double s, const Piece& p) { return s < p.t0; });
    if (it == pieces_.begin())
        return 0.0;
    --it;
    return t < it->t1 ? it->v : 0.0;
}

double StepFunction::support_end() const { return pieces_.empty() ? 0.0 : pieces_.back().t1; }

double StepFunction::support_measure() const
{
    double m = 0.0;
    for (const auto& p : pieces_)
        m += p.length();
    return m;
}

double StepFunction::sup_norm() const
{
    double s = 0.0;
    for (const auto& p : pieces_)
        s = std::max(s, std::abs(p.v));
    return s;
}

std::vector<double> StepFunction::breakpoints() const
{
    const StepFunction self[] = {*this};
    return common_breakpoints(self);
}

bool StepFunction::approx_equal(const StepFunction& other, double tol) const
{
    const StepFunction both[] = {*this, other};
    const auto points = common_breakpoints(both);
    const double scale = std::max(1.0, std::max(sup_norm(), other.sup_norm()));
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (points[i + 1] - points[i] <= point_tol(points[i + 1]))
            continue;
        const double mid = 0.5 * (points[i] + points[i + 1]);
        if (std::abs((*this)(mid) - other(mid)) > tol * scale)
            return false;
    }
    return true;
}

std::vector<double> common_breakpoints(std::span<const StepFunction> fs)
{
    std::vector<double> raw;
    for (const auto& f : fs)
        for (const auto& p : f.pieces()) {
            raw.push_back(p.t0);
            raw.push_back(p.t1);
        }
    std::sort(raw.begin(), raw.end());
    std::vector<double> out;
    out.reserve(raw.size());
    for (double t : raw)
        if (out.empty() || t - out.back() > point_tol(t))
            out.push_back(t);
    return out;
}

StepFunction add(const StepFunction& x, const StepFunction& y)
{
    return binary(x, y, [](double a, double b) { return a + b; });
}

StepFunction subtract(const StepFunction& x, const StepFunction& y)
{
    return binary(x, y, [](double a, double b) { return a - b; });
}

StepFunction scale(const StepFunction& x, double factor)
{
    if (!std::isfinite(factor))
        fail(ErrorCode::invalid_argument, "scale factor must be finite");
    std::vector<Piece> pieces = x.pieces();
    for (auto& p : pieces)
        p.v *= factor;
    return StepFunction(std::move(pieces), x.alpha());
}

StepFunction abs(const StepFunction& x)
{
    std::vector<Piece> pieces = x.pieces();
    for (auto& p : pieces)
        p.v = std::abs(p.v);
    return StepFunction(std::move(pieces), x.alpha());
}

StepFunction pointwise_max(const StepFunction& x, const StepFunction& y)
{
    return binary(x, y, [](double a, double b) { return std::max(a, b); });
}

StepFunction pointwise_min(const StepFunction& x, const StepFunction& y)
{
    return binary(x, y, [](double a, double b) { return std::min(a, b); });
}

StepFunction combine(CombineOp op, std::span<const StepFunction> args, double factor)
{
    if (args.empty())
        fail(ErrorCode::invalid_argument, "combine needs at least one argument");
    switch (op) {
    case CombineOp::scale:
    case CombineOp::abs:
        if (args.size() != 1)
            fail(ErrorCode::invalid_argument, "unary combine takes exactly one argument");
        return op == CombineOp::scale ? scale(args[0], factor) : abs(args[0]);
    case CombineOp::add:
    case CombineOp::max:
    case CombineOp::min: {
        StepFunction acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (op == CombineOp::add)
                acc = add(acc, args[i]);
            else if (op == CombineOp::max)
                acc = pointwise_max(acc, args[i]);
            else
                acc = pointwise_min(acc, args[i]);
        }
        return acc;
    }
    }
    return args[0];
}

} // namespace rifs
