#pragma once

namespace evscan {

inline constexpr long kSeriesTermCap = 100'000'000;

/// Parameters of the Spitzer series for the grid constant machinery.
/// a is the grid step of [0,T] ∩ aZ; tol the absolute truncation tolerance.
struct SpitzerParams {
    double a;
    double tol;
};

struct SeriesValue {
    double value;
    double err_bound;  // rigorous bound on |value - exact|
};

/// p_inf(a): probability that the Gaussian walk with step law N(-a/2, a)
/// never enters the upper half-line,
///     p_inf(a) = exp(-sum_{k>=1} Phi(-sqrt(a k)/2) / k).
/// The truncation index K is fixed a priori from the Chernoff bound
/// Phi(-x) <= e^{-x^2/2}/2, which makes the neglected tail at most
/// e^{-a(K+1)/8} / (2 (K+1) (1 - e^{-a/8})). err_bound accounts for the
/// truncated tail and summation rounding.
/// Throws DomainError for a <= 0 or tol outside (0,1); BudgetError when no
/// K <= max_terms meets the tolerance.
SeriesValue spitzer_p_inf(const SpitzerParams& params, long max_terms = kSeriesTermCap);

/// Pickands-type grid constant F(a) = p_inf(a)^2 / a with the error of
/// spitzer_p_inf propagated through the square and the division.
struct PickandsEvaluation {
    double a;
    double p_inf;
    double f_value;
    double err_bound;
};

PickandsEvaluation pickands_f(double a, double tol, long max_terms = kSeriesTermCap);

/// Clump intensity G(y; a) = F(a/y)^2 / y^2. Defaults to the a = 2 case that
/// drives the discrete-increment statistic.
SeriesValue clump_g(double y, double a = 2.0, double tol = 1e-8);

}  // namespace evscan
