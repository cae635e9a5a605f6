#pragma once

namespace evscan {

/// Axis-aligned rectangle in the upper half-plane, (x, y) = (interval start,
/// interval length) coordinates of the standardized-increment field.
struct RegionRect {
    double x_lo, x_hi;
    double y_lo, y_hi;  // 0 < y_lo < y_hi
};

/// The closed-form evaluators return an asymptotic expression that is not a
/// probability for small u: the value is clamped to [0,1] and flagged.
struct TailProbability {
    double value;
    bool clamped;
};

/// High-excursion asymptotic for the continuous field over the rectangle,
///   (1/(4 sqrt(2 pi))) (x_hi - x_lo)(1/y_lo - 1/y_hi) u^3 e^{-u^2/2}.
TailProbability excursion_tail_rect(const RegionRect& region, double u);

/// Grid version with clump intensity G(y; a), a = lim q u^2: the y-integral
/// of G is evaluated by adaptive quadrature.
TailProbability excursion_tail_rect_grid(const RegionRect& region, double u, double a,
                                         double tol = 1e-8);

}  // namespace evscan
