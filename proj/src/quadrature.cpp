#include "evscan/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "evscan/errors.hpp"

namespace evscan {
namespace {

// 15-point Kronrod extension of 7-point Gauss, positive half of [-1,1].
// Odd indices (1,3,5,7) are the Gauss-7 nodes.
constexpr double kNode[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWeightK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWeightG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double lo, hi;
    double integral;
    double err;
    bool operator<(const Panel& other) const { return err < other.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double gauss = 0.0, kronrod = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(mid);
        } else {
            fsum = f(mid - half * kNode[i]) + f(mid + half * kNode[i]);
        }
        kronrod += kWeightK[i] * fsum;
        if (i % 2 == 1) gauss += kWeightG[i / 2] * fsum;
    }
    gauss *= half;
    kronrod *= half;
    return Panel{lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> edges,
                                    double abs_tol,
                                    int max_panels) {
    if (edges.size() < 2) throw ArgumentError("integrate_adaptive: need at least two edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1]))
            throw ArgumentError("integrate_adaptive: edges must be strictly increasing");
    }
    if (!(abs_tol > 0.0)) throw DomainError("integrate_adaptive: abs_tol must be positive");

    std::priority_queue<Panel> queue;
    double total = 0.0, total_err = 0.0;
    int panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = evaluate_panel(f, edges[i], edges[i + 1]);
        total += p.integral;
        total_err += p.err;
        queue.push(p);
        ++panels;
    }

    while (total_err > abs_tol) {
        if (panels >= max_panels)
            throw BudgetError("integrate_adaptive: panel budget exhausted before reaching tolerance");
        Panel worst = queue.top();
        // Width floor: below ~1e-12 of the span, bisection only churns rounding.
        if (worst.hi - worst.lo < 1e-12 * (edges.back() - edges.front())) break;
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = evaluate_panel(f, worst.lo, mid);
        Panel right = evaluate_panel(f, mid, worst.hi);
        total += left.integral + right.integral - worst.integral;
        total_err += left.err + right.err - worst.err;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    return QuadratureResult{total, total_err, panels};
}

}  // namespace evscan
