#include "evscan/spitzer.hpp"

#include <cmath>
#include <limits>

#include "evscan/errors.hpp"
#include "evscan/normal.hpp"

namespace evscan {
namespace {

// log of the Chernoff tail bound sum_{k>K} Phi(-sqrt(ak)/2)/k
//   <= e^{-a(K+1)/8} / (2 (K+1) (1 - e^{-a/8})).
double log_tail_bound(double a, long K) {
    const double log_geom = std::log(-std::expm1(-a / 8.0));
    return -a * (K + 1) / 8.0 - std::log(2.0 * (K + 1.0)) - log_geom;
}

// Smallest K with tail bound <= tol; bound is strictly decreasing in K.
long choose_truncation(double a, double tol, long max_terms) {
    const double log_tol = std::log(tol);
    if (log_tail_bound(a, 1) <= log_tol) return 1;
    if (log_tail_bound(a, max_terms) > log_tol)
        throw BudgetError("spitzer_p_inf: series cap too small for requested tolerance");
    long lo = 1, hi = max_terms;  // bound(lo) > tol >= bound(hi)
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (log_tail_bound(a, mid) <= log_tol)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

SeriesValue spitzer_p_inf(const SpitzerParams& params, long max_terms) {
    const double a = params.a, tol = params.tol;
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("spitzer_p_inf: a must be positive");
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("spitzer_p_inf: tol must lie in (0,1)");
    if (max_terms < 1) throw DomainError("spitzer_p_inf: max_terms must be positive");

    const long K = choose_truncation(a, tol, max_terms);

    // Neumaier-compensated sum, ascending k; terms decrease monotonically,
    // so a term that underflows to zero ends the loop.
    double sum = 0.0, comp = 0.0;
    for (long k = 1; k <= K; ++k) {
        const double term = 0.5 * std::erfc(std::sqrt(a * static_cast<double>(k) / 8.0)) / k;
        if (term == 0.0) break;
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    sum += comp;

    const double p = std::exp(-sum);
    const double tail = std::exp(log_tail_bound(a, K));
    // exp(-(S - tail)) - exp(-S) <= p (e^{tail} - 1); add a few ulps for the
    // compensated sum and the exp evaluation.
    const double err = p * std::expm1(tail) + 4.0 * std::numeric_limits<double>::epsilon() * p;
    return SeriesValue{p, err};
}

PickandsEvaluation pickands_f(double a, double tol, long max_terms) {
    const SeriesValue p = spitzer_p_inf(SpitzerParams{a, tol}, max_terms);
    const double f = p.value * p.value / a;
    const double err = (2.0 * p.value * p.err_bound + p.err_bound * p.err_bound) / a;
    return PickandsEvaluation{a, p.value, f, err};
}

SeriesValue clump_g(double y, double a, double tol) {
    if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("clump_g: y must be positive");
    const PickandsEvaluation f = pickands_f(a / y, tol);
    const double g = f.f_value * f.f_value / (y * y);
    const double err = (2.0 * f.f_value * f.err_bound + f.err_bound * f.err_bound) / (y * y);
    return SeriesValue{g, err};
}

}  // namespace evscan
