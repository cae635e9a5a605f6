#include "evscan/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "evscan/errors.hpp"
#include "evscan/quadrature.hpp"

namespace evscan {
namespace {

double p_inf_quick(double a, double tol) {
    return spitzer_p_inf(SpitzerParams{a, tol}).value;
}

HEstimate constant_h_a_form(double tol) {
    // Tail cut: grow A until replacing the tail of 2*int F^2 by 2/A is
    // accurate to tol/8. p_inf(A) -> 1 Gaussian-fast, so this terminates
    // almost immediately.
    double A = 50.0;
    double tail_err;
    for (;;) {
        const double p = p_inf_quick(A, 1e-12);
        tail_err = 2.0 * (1.0 - std::pow(p, 4.0)) / A;
        if (tail_err <= tol / 8.0) break;
        A *= 2.0;
        if (A > 6400.0) throw BudgetError("constant_h: tail cut search exceeded budget");
    }

    // Per-evaluation series tolerance: a relative error delta in p_inf gives
    // |d(F^2)| <= F^2 (e^{4 delta} - 1), so the integral error is bounded by
    // H * (e^{4 delta} - 1).
    const double delta = tol / 32.0;

    const auto integrand = [delta](double s) {
        if (s <= 0.0) return 0.0;
        const double a = s * s;
        const PickandsEvaluation f = pickands_f(a, delta);
        return 4.0 * s * f.f_value * f.f_value;
    };
    const double S = std::sqrt(A);
    const std::vector<double> edges = {0.0, 0.25 * S / 3.5, S / 3.5, 0.5 * S, S};
    const QuadratureResult quad = integrate_adaptive(integrand, edges, tol / 2.0);

    const double value = quad.value + 2.0 / A;
    const double series_err = std::expm1(4.0 * delta) * (quad.value + 2.0 / A);
    return HEstimate{value, quad.err_estimate + series_err + tail_err, HMethod::a_form};
}

HEstimate constant_h_y_form(double tol) {
    // Tail cut in y: the integrand is 4 F(2/y)^2 / y^2 <= 1/y^2, so the 1/Y
    // correction over-counts by at most (1 - 4 F(2/Y)^2)/Y.
    double Y = 400.0;
    double tail_err;
    for (;;) {
        const double f = pickands_f(2.0 / Y, 1e-10).f_value;
        tail_err = (1.0 - 4.0 * f * f) / Y;
        if (tail_err <= tol / 8.0) break;
        Y *= 2.0;
        if (Y > 204800.0) throw BudgetError("constant_h: tail cut search exceeded budget");
    }

    const double delta = tol / 32.0;
    const auto integrand = [delta](double y) {
        if (y <= 0.0) return 1.0;  // limit as a = 2/y -> inf
        const double p = spitzer_p_inf(SpitzerParams{2.0 / y, delta}).value;
        return std::pow(p, 4.0);
    };
    std::vector<double> edges = {0.0, 0.5, 1.0};
    while (edges.back() < Y) edges.push_back(std::min(2.0 * edges.back(), Y));
    const QuadratureResult quad = integrate_adaptive(integrand, edges, tol / 2.0);

    const double value = quad.value + 1.0 / Y;
    const double series_err = std::expm1(4.0 * delta) * quad.value;
    return HEstimate{value, quad.err_estimate + series_err + tail_err, HMethod::y_form};
}

}  // namespace

HEstimate constant_h(double tol, HMethod method) {
    if (!(tol > 0.0 && tol <= 0.01)) throw DomainError("constant_h: tol must lie in (0, 0.01]");
    return method == HMethod::a_form ? constant_h_a_form(tol) : constant_h_y_form(tol);
}

double cached_constant_h() {
    static const double h = constant_h(1e-4, HMethod::a_form).value;
    return h;
}

double cached_pickands_f(double a) {
    static std::mutex mutex;
    static std::map<double, double> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, pickands_f(a, 1e-4).f_value).first;
    return it->second;
}

}  // namespace evscan
