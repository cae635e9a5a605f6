#pragma once

#include <functional>
#include <span>

namespace evscan {

struct QuadratureResult {
    double value;         // integral estimate
    double err_estimate;  // accumulated |Kronrod - Gauss| over final panels
    int panels;           // number of panels in the final partition
};

/// Absolute-error-driven adaptive Gauss-Kronrod 15(7) over an initial
/// partition given by `edges` (strictly increasing, >= 2 entries). Panels are
/// bisected worst-first until the accumulated error estimate drops below
/// abs_tol. Throws BudgetError if max_panels is reached first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> edges,
                                    double abs_tol,
                                    int max_panels = 4000);

}  // namespace evscan
