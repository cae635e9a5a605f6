#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "evscan/path.hpp"
#include "evscan/rng.hpp"

namespace evscan {

enum class Statistic { main_discrete, erdos_renyi, darling_erdos, brownian };

struct EnsembleConfig {
    Statistic statistic;
    long n;
    long replications;  // >= 1
    std::uint64_t master_seed;
    double c = 1.0;       // erdos_renyi window constant
    long oversample = 16; // brownian mesh refinement
    int threads = 0;      // 0 = hardware concurrency
};

/// Standardized ensemble output. samples holds (L - a_n)/b_n sorted
/// ascending; raw keeps the unstandardized statistic indexed by replication.
struct EmpiricalDistribution {
    Eigen::ArrayXd samples;
    Eigen::ArrayXd raw;
    long n;
    long replications;
    Statistic statistic;
};

/// Draws the next n standard normals off the stream and forms the prefix
/// sums in one pass.
SamplePath sample_path(NormalStream& stream, long n);

/// Runs the configured ensemble: replication r uses stream
/// (master_seed, r), so the result is independent of the thread count.
/// Statistic errors are rethrown with the replication index attached.
EmpiricalDistribution run_ensemble(const EnsembleConfig& config);

/// Exact Kolmogorov-Smirnov distance of sorted samples against cdf,
/// evaluated at the jump points.
double ks_distance(std::span<const double> sorted_samples,
                   const std::function<double(double)>& cdf);
double ks_distance(const EmpiricalDistribution& emp,
                   const std::function<double(double)>& cdf);

/// Mean of L_n / sqrt(2 log n) over `reps` replications for each n in `ns`
/// (strictly increasing). Replication r reuses stream (master_seed, r) across
/// the whole n-grid, which couples the grid points and sharpens the trend.
std::vector<std::pair<long, double>> shao_ratio_trend(std::span<const long> ns, long reps,
                                                      std::uint64_t master_seed, int threads = 0);

}  // namespace evscan
