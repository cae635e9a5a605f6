#pragma once

#include <Eigen/Core>

namespace evscan {

/// A Gaussian-walk realization: n increments plus the n+1 prefix sums
/// S_0 = 0, S_k = S_{k-1} + X_k.
struct SamplePath {
    Eigen::ArrayXd increments;   // length n >= 1, all finite
    Eigen::ArrayXd prefix_sums;  // length n + 1

    long n() const { return static_cast<long>(increments.size()); }

    /// Builds the prefix sums and validates finiteness.
    static SamplePath from_increments(Eigen::ArrayXd x);
};

}  // namespace evscan
