#pragma once

#include <cstdint>

#include "evscan/path.hpp"

namespace evscan {

/// Maximum of (S_j - S_i)/sqrt(j-i) with its maximizer. Ties resolved toward
/// the smallest j-i, then the smallest i. pairs_examined counts the (i,j)
/// pairs actually evaluated.
struct ScanResult {
    double value;
    long i;
    long j;
    std::uint64_t pairs_examined;
};

/// Maximum of a window/running statistic with its location.
struct WindowStat {
    double value;
    long k;
    long window;
};

/// Exhaustive scan over all pairs 0 <= i < j <= n with j - i >= min_sep.
ScanResult scan_max_naive(const SamplePath& path, long min_sep = 1);

/// Branch-and-bound scan: identical (value, i, j) to scan_max_naive on every
/// input, including tie-breaks. Seeds a lower bound from all pairs with
/// j - i <= 8 min_sep, then walks (length-band, block-pair) cells over
/// 64-entry prefix-sum blocks, descending only where the block bound
/// (blockmax_j - blockmin_i)/sqrt(band floor) can still beat the incumbent.
ScanResult scan_max_pruned(const SamplePath& path, long min_sep = 1);

/// Erdos-Renyi sliding window: max_k (S_{k+l} - S_k)/sqrt(l), l = floor(c log n).
WindowStat erdos_renyi_window(const SamplePath& path, double c);

/// Darling-Erdos running maximum max_{1<=k<=n} S_k/sqrt(k).
WindowStat darling_erdos_max(const SamplePath& path);

/// Supremum of (B(x2)-B(x1))/sqrt(x2-x1) over the mesh-q grid of [0,1] with
/// x2 - x1 >= 1/n, where the path holds n*oversample Brownian increments of
/// variance q = 1/(n*oversample). Scales increments back to unit variance and
/// runs the pruned scan with min_sep = oversample; indices are in grid units.
ScanResult brownian_grid_sup(const SamplePath& path, long n, long oversample);

}  // namespace evscan
