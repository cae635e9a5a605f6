#pragma once

namespace evscan {

/// Standard normal distribution function Phi(x), evaluated through the
/// complementary error function so that deep-tail values keep full relative
/// accuracy. Absolute error <= 1e-15 over the real line.
/// Throws DomainError on non-finite input.
double std_normal_cdf(double x);

/// Standard normal density.
double std_normal_pdf(double x);

/// Quantile function Phi^{-1}(p) for p in (0,1), Wichura's PPND16 rational
/// approximations (~1e-15 relative). Throws DomainError outside (0,1).
double inverse_std_normal_cdf(double p);

/// Gumbel distribution function exp(-e^{-tau}).
/// Throws DomainError on non-finite input.
double gumbel_cdf(double tau);

/// Gumbel quantile -log(-log p) for p in (0,1).
double gumbel_quantile(double p);

}  // namespace evscan
