#pragma once

#include <optional>
#include <span>

namespace evscan {

/// Which limit theorem's normalizing constants to produce.
enum class Theorem {
    iid_max,              // classical i.i.d. normal maximum
    darling_erdos,        // max_k S_k / sqrt(k)
    main_discrete,        // max_{i<j} (S_j - S_i)/sqrt(j-i)
    erdos_renyi,          // sliding window of length [c log n]
    brownian_continuous,  // sup over x2 - x1 >= 1/n on [0,1]
};

struct NormalizationPair {
    double a_n;
    double b_n;  // > 0
    Theorem theorem;
    long n;
};

/// (a_n, b_n) such that (L_n - a_n)/b_n converges to the Gumbel law for the
/// selected statistic. aux carries c for erdos_renyi and is ignored
/// otherwise. Minimal n: 16 for darling_erdos (triple logarithm), 3 for the
/// rest. H and F(4/c) are taken from the process-wide tol-1e-4 cache.
NormalizationPair normalization(Theorem theorem, long n, std::optional<double> aux = {});

/// One row of the asymptotic extreme-value-rate table
/// f(n) = coef * n^n_power * (log n)^log_power * (log log n)^{has_loglog}.
struct RateTableEntry {
    int row_id;  // 1..7
    double coef;
    int n_power;
    int log_power;
    bool has_loglog;
};

/// Rows: 1: n | 2,3: log n loglog n | 4: H n log n | 5: n log^2 n
/// | 6: (4/c) F(4/c) n (requires c) | 7: n log n.
RateTableEntry rate_table_row(int row_id, std::optional<double> c = {});

double evr_value(const RateTableEntry& entry, long n);

struct ExpansionCheck {
    double exact;     // a_{f(n)} evaluated at f(n) = c n (log n)^b
    double expanded;  // sqrt(2 log n) + ((b - 1/2) loglog n + log c - log 2*sqrt(pi)) / sqrt(2 log n)
};

/// The two routes to the normalizing location for f(n) = c n (log n)^b.
/// |exact - expanded| * sqrt(2 log n) -> 0 as n grows.
ExpansionCheck expansion_check(double c, double b, long n);

/// Convergence-of-types check on a common n-grid: true iff b1/b2 -> 1 and
/// (a1 - a2)/b1 -> 0 numerically (final gap below tol and no growth from the
/// first grid point).
bool types_equivalence_check(std::span<const double> a1, std::span<const double> b1,
                             std::span<const double> a2, std::span<const double> b2,
                             double tol = 0.05);

}  // namespace evscan
