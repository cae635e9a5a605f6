#include "evscan/normalization.hpp"

#include <cmath>

#include "evscan/constants.hpp"
#include "evscan/errors.hpp"

namespace evscan {
namespace {

const double kLog2SqrtPi = std::log(2.0 * std::sqrt(M_PI));

// a_m of the classical i.i.d. normal maximum, for real m >= 3.
double a_of(double m) {
    const double r = std::sqrt(2.0 * std::log(m));
    return r + (-0.5 * std::log(std::log(m)) - kLog2SqrtPi) / r;
}

void require_n(long n, long minimum, const char* what) {
    if (n < minimum) throw DomainError(std::string(what) + ": n too small for the nested logarithms");
}

}  // namespace

NormalizationPair normalization(Theorem theorem, long n, std::optional<double> aux) {
    const double nd = static_cast<double>(n);
    switch (theorem) {
        case Theorem::iid_max: {
            require_n(n, 3, "normalization(iid_max)");
            const double r = std::sqrt(2.0 * std::log(nd));
            return {a_of(nd), 1.0 / r, theorem, n};
        }
        case Theorem::main_discrete: {
            require_n(n, 3, "normalization(main_discrete)");
            const double r = std::sqrt(2.0 * std::log(nd));
            const double a =
                r + (0.5 * std::log(std::log(nd)) + std::log(cached_constant_h()) - kLog2SqrtPi) / r;
            return {a, 1.0 / r, theorem, n};
        }
        case Theorem::erdos_renyi: {
            require_n(n, 3, "normalization(erdos_renyi)");
            if (!aux) throw ArgumentError("normalization(erdos_renyi): window constant c is required");
            const double c = *aux;
            if (!(c > 0.0)) throw DomainError("normalization(erdos_renyi): c must be positive");
            const double r = std::sqrt(2.0 * std::log(nd));
            const double coef = (4.0 / c) * cached_pickands_f(4.0 / c);
            const double a = r + (-0.5 * std::log(std::log(nd)) + std::log(coef) - kLog2SqrtPi) / r;
            return {a, 1.0 / r, theorem, n};
        }
        case Theorem::brownian_continuous: {
            require_n(n, 3, "normalization(brownian_continuous)");
            const double r = std::sqrt(2.0 * std::log(nd));
            const double a = r + (1.5 * std::log(std::log(nd)) - kLog2SqrtPi) / r;
            return {a, 1.0 / r, theorem, n};
        }
        case Theorem::darling_erdos: {
            require_n(n, 16, "normalization(darling_erdos)");
            const double llog = std::log(std::log(nd));
            const double r = std::sqrt(2.0 * llog);
            const double a = r + (0.5 * std::log(llog) - kLog2SqrtPi) / r;
            return {a, 1.0 / r, theorem, n};
        }
    }
    throw ArgumentError("normalization: unknown theorem tag");
}

RateTableEntry rate_table_row(int row_id, std::optional<double> c) {
    switch (row_id) {
        case 1: return {1, 1.0, 1, 0, false};
        case 2: return {2, 1.0, 0, 1, true};
        case 3: return {3, 1.0, 0, 1, true};
        case 4: return {4, cached_constant_h(), 1, 1, false};
        case 5: return {5, 1.0, 1, 2, false};
        case 6: {
            if (!c) throw ArgumentError("rate_table_row: row 6 requires the window constant c");
            if (!(*c > 0.0)) throw DomainError("rate_table_row: c must be positive");
            return {6, (4.0 / *c) * cached_pickands_f(4.0 / *c), 1, 0, false};
        }
        case 7: return {7, 1.0, 1, 1, false};
        default: throw ArgumentError("rate_table_row: row_id must lie in 1..7");
    }
}

double evr_value(const RateTableEntry& entry, long n) {
    if (n < 16) throw DomainError("evr_value: n must be at least 16");
    if (!(entry.coef > 0.0)) throw DomainError("evr_value: coefficient must be positive");
    const double nd = static_cast<double>(n);
    const double log_n = std::log(nd);
    double v = entry.coef;
    if (entry.n_power) v *= std::pow(nd, entry.n_power);
    if (entry.log_power) v *= std::pow(log_n, entry.log_power);
    if (entry.has_loglog) v *= std::log(log_n);
    return v;
}

ExpansionCheck expansion_check(double c, double b, long n) {
    if (!(c > 0.0)) throw DomainError("expansion_check: c must be positive");
    if (n < 16) throw DomainError("expansion_check: n must be at least 16");
    const double nd = static_cast<double>(n);
    const double f = c * nd * std::pow(std::log(nd), b);
    if (!(f >= 3.0)) throw DomainError("expansion_check: f(n) too small");
    const double r = std::sqrt(2.0 * std::log(nd));
    const double expanded = r + ((b - 0.5) * std::log(std::log(nd)) + std::log(c) - kLog2SqrtPi) / r;
    return {a_of(f), expanded};
}

bool types_equivalence_check(std::span<const double> a1, std::span<const double> b1,
                             std::span<const double> a2, std::span<const double> b2,
                             double tol) {
    const std::size_t len = a1.size();
    if (b1.size() != len || a2.size() != len || b2.size() != len)
        throw ArgumentError("types_equivalence_check: sequence lengths differ");
    if (len < 2) throw ArgumentError("types_equivalence_check: need at least two grid points");
    for (std::size_t i = 0; i < len; ++i) {
        if (!(b1[i] > 0.0) || !(b2[i] > 0.0))
            throw DomainError("types_equivalence_check: scale entries must be positive");
    }
    const auto scale_gap = [&](std::size_t i) { return std::abs(b1[i] / b2[i] - 1.0); };
    const auto loc_gap = [&](std::size_t i) { return std::abs((a1[i] - a2[i]) / b1[i]); };
    const std::size_t last = len - 1;
    return scale_gap(last) <= tol && loc_gap(last) <= tol &&
           scale_gap(last) <= scale_gap(0) + tol && loc_gap(last) <= loc_gap(0) + tol;
}

}  // namespace evscan
