#pragma once

#include <cstdint>

namespace evscan {

/// Monte Carlo estimate with a binomial or replication-variance standard
/// error. median_of_means (16 contiguous groups) is reported alongside; for
/// heavy-tailed estimands the mean-based std_error understates the risk and
/// median_of_means shows the typical scale instead.
struct OracleEstimate {
    double mean;
    double std_error;
    long replications;
    double median_of_means;
};

/// Fraction of simulated walks (increments N(-a/2, a)) with Z_1..Z_horizon
/// all below zero: a direct estimate of p_inf(a) up to the finite-horizon
/// bias P(first crossing after horizon), which decays exponentially.
OracleEstimate mc_p_inf(double a, long horizon, long reps, std::uint64_t master_seed,
                        int threads = 0);

/// mean(e^M)/T over replications, M = max(0, prefix maxima) of the
/// floor(T/a)-step walk: the defining functional of F(a) on [0,T] ∩ aZ.
/// e^M has a boundary exponential moment, so this is a loose oracle only.
OracleEstimate mc_pickands_f(double a, double T, long reps, std::uint64_t master_seed,
                             int threads = 0);

}  // namespace evscan
