#pragma once

#include "evscan/spitzer.hpp"

namespace evscan {

enum class HMethod { y_form, a_form };

struct HEstimate {
    double value;
    double err_bound;
    HMethod method;
};

/// The extreme-value-rate constant of the standardized-increment statistic,
///     H = 4 * int_0^inf G(y) dy  =  2 * int_0^inf F(a)^2 da
///       = int_0^inf exp{-4 sum_k Phi(-sqrt(k/(2y)))/k} dy.
///
/// a_form integrates 2 F(a)^2 on [0, A] (substituted a = s^2 so the integrand
/// stays smooth at 0, where F -> 1/2) and replaces the tail by its exact
/// bound 1/A; the tail error is at most 2 (1 - p_inf(A)^4) / A.
/// y_form integrates the y-space integrand p_inf(2/y)^4 on [0, Y] and adds
/// the 1/Y tail, an independent cross-check route.
///
/// tol must lie in (0, 0.01]. err_bound combines quadrature, series
/// truncation and tail correction. Throws BudgetError if the quadrature or
/// cutoff search cannot meet tol.
HEstimate constant_h(double tol, HMethod method);

/// H (a_form) at tol 1e-4, computed once per process and cached.
double cached_constant_h();

/// F(a) at tol 1e-4, cached per grid step; used by the normalization and
/// rate-table formulas.
double cached_pickands_f(double a);

}  // namespace evscan
