#pragma once

#include <limits>
#include <span>
#include <vector>

namespace rifs {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Tolerance used when canonicalizing breakpoints and values.
inline constexpr double canonical_tol = 1e-12;

// The interval I = [0, alpha) with alpha either 1 or infinity.
enum class Domain { unit, infinite };

constexpr double domain_length(Domain d) { return d == Domain::unit ? 1.0 : infinity; }

struct Piece {
    double t0;
    double t1;
    double v;

    double length() const { return t1 - t0; }
    bool operator==(const Piece&) const = default;
};

// A finitely supported piecewise constant function on [0, alpha).
//
// Pieces are kept in canonical form: sorted, non-overlapping, nonzero,
// with adjacent pieces of equal value merged.  The value outside the
// pieces is zero, so the support always has finite measure.
class StepFunction {
public:
    StepFunction() = default;
    explicit StepFunction(std::vector<Piece> pieces, Domain alpha = Domain::infinite);

    static StepFunction indicator(double t0, double t1, double value = 1.0,
                                  Domain alpha = Domain::infinite);
    // Cells [k*h, (k+1)*h) carrying values[k].
    static StepFunction from_cells(std::span<const double> values, double cell_length,
                                   Domain alpha = Domain::infinite);

    Domain alpha() const { return alpha_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    double operator()(double t) const;
    // Right end of the last piece (0 for the zero function).
    double support_end() const;
    double support_measure() const;
    double sup_norm() const;
    // Sorted breakpoints (piece endpoints) without duplicates.
    std::vector<double> breakpoints() const;

    // Canonical forms equal up to canonical_tol.
    bool approx_equal(const StepFunction& other, double tol = canonical_tol) const;

private:
    Domain alpha_ = Domain::infinite;
    std::vector<Piece> pieces_;
};

enum class CombineOp { add, scale, abs, max, min };

StepFunction add(const StepFunction& x, const StepFunction& y);
StepFunction subtract(const StepFunction& x, const StepFunction& y);
StepFunction scale(const StepFunction& x, double factor);
StepFunction abs(const StepFunction& x);
StepFunction pointwise_max(const StepFunction& x, const StepFunction& y);
StepFunction pointwise_min(const StepFunction& x, const StepFunction& y);

// Folds a binary operation over args (add/max/min), or applies a unary one
// (scale uses factor, abs ignores it) to the single argument.
StepFunction combine(CombineOp op, std::span<const StepFunction> args, double factor = 1.0);

// Union of breakpoints of several functions, sorted and deduplicated.
std::vector<double> common_breakpoints(std::span<const StepFunction> fs);

} // namespace rifs
