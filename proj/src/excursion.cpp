#include "evscan/excursion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "evscan/errors.hpp"
#include "evscan/quadrature.hpp"
#include "evscan/spitzer.hpp"

namespace evscan {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

void validate(const RegionRect& r, double u) {
    if (!(r.x_lo < r.x_hi) || !(0.0 < r.y_lo) || !(r.y_lo < r.y_hi))
        throw DomainError("excursion_tail_rect: invalid region");
    if (!(u > 0.0)) throw DomainError("excursion_tail_rect: u must be positive");
}

TailProbability clamp01(double v) {
    if (v > 1.0) return {1.0, true};
    if (v < 0.0) return {0.0, true};
    return {v, false};
}

}  // namespace

TailProbability excursion_tail_rect(const RegionRect& region, double u) {
    validate(region, u);
    const double area = (region.x_hi - region.x_lo) * (1.0 / region.y_lo - 1.0 / region.y_hi);
    const double v = 0.25 * kInvSqrt2Pi * area * u * u * u * std::exp(-0.5 * u * u);
    return clamp01(v);
}

TailProbability excursion_tail_rect_grid(const RegionRect& region, double u, double a,
                                         double tol) {
    validate(region, u);
    if (!(a > 0.0)) throw DomainError("excursion_tail_rect_grid: a must be positive");
    const auto g = [a, tol](double y) { return clump_g(y, a, tol).value; };
    const std::vector<double> edges = {region.y_lo, region.y_hi};
    const QuadratureResult quad =
        integrate_adaptive(g, edges, std::max(tol, 1e-12) * (region.y_hi - region.y_lo));
    const double v = kInvSqrt2Pi * (region.x_hi - region.x_lo) * quad.value * u * u * u *
                     std::exp(-0.5 * u * u);
    return clamp01(v);
}

}  // namespace evscan
