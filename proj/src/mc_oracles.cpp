#include "evscan/mc_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "evscan/errors.hpp"
#include "evscan/parallel.hpp"
#include "evscan/rng.hpp"

namespace evscan {
namespace {

double median_of_group_means(const Eigen::ArrayXd& values, int groups) {
    const long R = values.size();
    groups = static_cast<int>(std::min<long>(groups, R));
    std::vector<double> means(groups);
    const long base = R / groups, extra = R % groups;
    long pos = 0;
    for (int g = 0; g < groups; ++g) {
        const long len = base + (g < extra ? 1 : 0);
        means[g] = values.segment(pos, len).mean();
        pos += len;
    }
    std::sort(means.begin(), means.end());
    const int mid = groups / 2;
    return (groups % 2) ? means[mid] : 0.5 * (means[mid - 1] + means[mid]);
}

}  // namespace

OracleEstimate mc_p_inf(double a, long horizon, long reps, std::uint64_t master_seed,
                        int threads) {
    if (!(a > 0.0)) throw DomainError("mc_p_inf: a must be positive");
    if (horizon < 1) throw DomainError("mc_p_inf: horizon must be at least 1");
    if (reps < 2) throw DomainError("mc_p_inf: need at least two replications");

    const double sigma = std::sqrt(a), drift = -0.5 * a;
    Eigen::ArrayXd stayed(reps);
    parallel_for_index(reps, threads, [&](long r) {
        NormalStream stream(SeedSpec{master_seed, static_cast<std::uint64_t>(r)});
        double z = 0.0;
        bool below = true;
        for (long k = 0; k < horizon; ++k) {
            z += sigma * stream.normal() + drift;
            if (z >= 0.0) {
                below = false;
                break;
            }
        }
        stayed[r] = below ? 1.0 : 0.0;
    });
    const double mean = stayed.mean();
    const double se = std::sqrt(mean * (1.0 - mean) / reps);
    return OracleEstimate{mean, se, reps, median_of_group_means(stayed, 16)};
}

OracleEstimate mc_pickands_f(double a, double T, long reps, std::uint64_t master_seed,
                             int threads) {
    if (!(a > 0.0)) throw DomainError("mc_pickands_f: a must be positive");
    if (!(T >= a)) throw DomainError("mc_pickands_f: T must be at least a");
    if (reps < 2) throw DomainError("mc_pickands_f: need at least two replications");

    const long steps = static_cast<long>(std::floor(T / a));
    const double sigma = std::sqrt(a), drift = -0.5 * a;
    Eigen::ArrayXd boosted(reps);
    parallel_for_index(reps, threads, [&](long r) {
        NormalStream stream(SeedSpec{master_seed, static_cast<std::uint64_t>(r)});
        double z = 0.0, peak = 0.0;
        for (long k = 0; k < steps; ++k) {
            z += sigma * stream.normal() + drift;
            if (z > peak) peak = z;
        }
        boosted[r] = std::exp(peak) / T;
    });
    const double mean = boosted.mean();
    const double var = (boosted - mean).square().sum() / (reps - 1);
    return OracleEstimate{mean, std::sqrt(var / reps), reps,
                          median_of_group_means(boosted, 16)};
}

}  // namespace evscan
