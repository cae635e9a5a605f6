#include "evscan/scan.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "evscan/errors.hpp"

namespace evscan {
namespace {

// Both scan routes must produce bit-identical values, so they share this
// exact expression.
inline double standardized(const double* S, long i, long j) {
    return (S[j] - S[i]) * (1.0 / std::sqrt(static_cast<double>(j - i)));
}

struct Best {
    double value = -std::numeric_limits<double>::infinity();
    long i = -1;
    long j = -1;

    // Matches the naive scan order (length ascending, then i ascending,
    // strict improvement): the winner is the lexicographically smallest
    // (j - i, i) among the value maximizers.
    void offer(double v, long i_, long j_) {
        const long d = j_ - i_, bd = j - i;
        if (v > value || (v == value && (d < bd || (d == bd && i_ < i)))) {
            value = v;
            i = i_;
            j = j_;
        }
    }
};

void validate_scan_input(const SamplePath& path, long min_sep) {
    const long n = path.n();
    if (n < 1) throw DomainError("scan: empty path");
    if (path.prefix_sums.size() != n + 1) throw DomainError("scan: prefix sums out of step");
    if (min_sep < 1 || min_sep > n) throw DomainError("scan: min_sep must lie in [1, n]");
}

}  // namespace

SamplePath SamplePath::from_increments(Eigen::ArrayXd x) {
    if (x.size() < 1) throw DomainError("SamplePath: need at least one increment");
    if (!x.isFinite().all()) throw DomainError("SamplePath: increments must be finite");
    Eigen::ArrayXd prefix(x.size() + 1);
    prefix[0] = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) prefix[k + 1] = prefix[k] + x[k];
    return SamplePath{std::move(x), std::move(prefix)};
}

ScanResult scan_max_naive(const SamplePath& path, long min_sep) {
    validate_scan_input(path, min_sep);
    const long n = path.n();
    const double* S = path.prefix_sums.data();
    Best best;
    std::uint64_t pairs = 0;
    for (long d = min_sep; d <= n; ++d) {
        const double rs = 1.0 / std::sqrt(static_cast<double>(d));
        for (long i = 0; i + d <= n; ++i) {
            const double v = (S[i + d] - S[i]) * rs;
            ++pairs;
            if (v > best.value) {
                best.value = v;
                best.i = i;
                best.j = i + d;
            }
        }
    }
    return ScanResult{best.value, best.i, best.j, pairs};
}

ScanResult scan_max_pruned(const SamplePath& path, long min_sep) {
    validate_scan_input(path, min_sep);
    const long n = path.n();
    const double* S = path.prefix_sums.data();
    Best best;
    std::uint64_t pairs = 0;

    // Seed pass: all pairs with j - i <= 8 min_sep. Short spans dominate the
    // maximum under the sqrt(2 log) scaling, so this yields a strong initial
    // lower bound.
    const long seed_hi = std::min(n, 8 * min_sep);
    for (long d = min_sep; d <= seed_hi; ++d) {
        const double rs = 1.0 / std::sqrt(static_cast<double>(d));
        for (long i = 0; i + d <= n; ++i) {
            const double v = (S[i + d] - S[i]) * rs;
            ++pairs;
            best.offer(v, i, i + d);
        }
    }
    if (seed_hi == n) return ScanResult{best.value, best.i, best.j, pairs};

    // Per-block extrema of the n+1 prefix sums, 64 entries per block.
    constexpr long B = 64;
    const long nb = (n + B) / B;  // blocks covering indices 0..n
    std::vector<double> bmax(nb), bmin(nb);
    for (long b = 0; b < nb; ++b) {
        const long lo = b * B, hi = std::min(n, lo + B - 1);
        double mx = S[lo], mn = S[lo];
        for (long k = lo + 1; k <= hi; ++k) {
            mx = std::max(mx, S[k]);
            mn = std::min(mn, S[k]);
        }
        bmax[b] = mx;
        bmin[b] = mn;
    }

    // Dyadic length bands over the remaining separations, ascending so the
    // incumbent sharpens before the wide bands are reached.
    for (long dlo = seed_hi + 1; dlo <= n;) {
        const long dhi = std::min(n, 2 * dlo - 1);
        for (long jb = 0; jb < nb; ++jb) {
            const long j_lo = jb * B, j_hi = std::min(n, j_lo + B - 1);
            if (j_hi < dlo) continue;
            const long ib_lo = std::max<long>(0, (j_lo - dhi) / B);
            const long ib_hi = std::min(nb - 1, (j_hi - dlo) / B);
            for (long ib = ib_lo; ib <= ib_hi; ++ib) {
                const long i_lo = ib * B, i_hi = std::min(n, i_lo + B - 1);
                const long d_min = std::max(dlo, j_lo - i_hi);
                const long d_max = std::min(dhi, j_hi - i_lo);
                if (d_min > d_max) continue;
                const double diff = bmax[jb] - bmin[ib];
                const double bound =
                    diff * (1.0 / std::sqrt(static_cast<double>(diff >= 0.0 ? d_min : d_max)));
                // Strict comparison: a cell whose bound ties the incumbent may
                // still hold an equal-value pair that wins the tie-break.
                if (bound < best.value) continue;
                for (long j = std::max(j_lo, i_lo + dlo); j <= j_hi; ++j) {
                    const long lo = std::max(i_lo, j - dhi);
                    const long hi = std::min(i_hi, j - dlo);
                    for (long i = lo; i <= hi; ++i) {
                        const double v = standardized(S, i, j);
                        ++pairs;
                        best.offer(v, i, j);
                    }
                }
            }
        }
        dlo = dhi + 1;
    }
    return ScanResult{best.value, best.i, best.j, pairs};
}

WindowStat erdos_renyi_window(const SamplePath& path, double c) {
    const long n = path.n();
    if (n < 1) throw DomainError("erdos_renyi_window: empty path");
    if (!(c > 0.0)) throw DomainError("erdos_renyi_window: c must be positive");
    const long l = static_cast<long>(std::floor(c * std::log(static_cast<double>(n))));
    if (l < 1 || l > n) throw DomainError("erdos_renyi_window: window length outside [1, n]");
    const double* S = path.prefix_sums.data();
    const double rs = 1.0 / std::sqrt(static_cast<double>(l));
    double value = -std::numeric_limits<double>::infinity();
    long arg = 0;
    for (long k = 0; k + l <= n; ++k) {
        const double v = (S[k + l] - S[k]) * rs;
        if (v > value) {
            value = v;
            arg = k;
        }
    }
    return WindowStat{value, arg, l};
}

WindowStat darling_erdos_max(const SamplePath& path) {
    const long n = path.n();
    if (n < 1) throw DomainError("darling_erdos_max: empty path");
    const double* S = path.prefix_sums.data();
    double value = -std::numeric_limits<double>::infinity();
    long arg = 1;
    for (long k = 1; k <= n; ++k) {
        const double v = standardized(S, 0, k);
        if (v > value) {
            value = v;
            arg = k;
        }
    }
    return WindowStat{value, arg, arg};
}

ScanResult brownian_grid_sup(const SamplePath& path, long n, long oversample) {
    if (n < 1 || oversample < 1)
        throw DomainError("brownian_grid_sup: n and oversample must be positive");
    if (path.n() != n * oversample)
        throw ArgumentError("brownian_grid_sup: path length must equal n * oversample");
    // Increments carry variance q = 1/(n*oversample); rescaling by 1/sqrt(q)
    // makes the grid-unit scan equal the time-unit statistic.
    const double scale = std::sqrt(static_cast<double>(n) * static_cast<double>(oversample));
    SamplePath unit = SamplePath::from_increments(path.increments * scale);
    return scan_max_pruned(unit, oversample);
}

}  // namespace evscan
