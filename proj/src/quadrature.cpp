#include "rifs/quadrature.hpp"

#include "rifs/error.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace rifs {

namespace {

// Kronrod abscissae (positive half) with Kronrod and Gauss weights (QUADPACK qk15).
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double resk = fc * wgk[7];
    double resg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double sum = f(centre - dx) + f(centre + dx);
        resk += wgk[j] * sum;
        if (j % 2 == 1)
            resg += wg[j / 2] * sum;
    }
    const double value = resk * half;
    const double error = std::abs((resk - resg) * half);
    return {a, b, value, error};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts)
{
    if (a == b)
        return {0.0, 0.0, 0};
    if (!(std::isfinite(a) && std::isfinite(b)))
        fail(ErrorCode::invalid_argument, "integrate() needs finite limits");
    if (b < a) {
        auto r = integrate(f, b, a, opts);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int subdivisions = 0;
    while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
        if (!std::isfinite(total))
            fail(ErrorCode::divergent, "integrand produced a non-finite value");
        if (subdivisions >= opts.max_subdivisions)
            fail(ErrorCode::quadrature_cap, "adaptive quadrature exceeded its subdivision cap");
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval exhausted at machine resolution; accept what we have.
            heap.push(worst);
            break;
        }
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    // Recompute the sums to shed accumulated cancellation error.
    total = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {total, error, subdivisions};
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opts)
{
    auto mapped = [&](double s) {
        const double q = 1.0 - s;
        const double t = a + s / q;
        if (!std::isfinite(t))
            return 0.0;
        const double v = f(t) / (q * q);
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

} // namespace rifs
