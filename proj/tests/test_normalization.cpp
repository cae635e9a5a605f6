#include <cmath>
#include <vector>

#include "doctest.h"
#include "evscan/constants.hpp"
#include "evscan/errors.hpp"
#include "evscan/normalization.hpp"

using namespace evscan;

namespace {
const double kLog2SqrtPi = std::log(2.0 * std::sqrt(M_PI));
}

TEST_CASE("iid_max plug-in at n=16") {
    const NormalizationPair p = normalization(Theorem::iid_max, 16);
    const double r = std::sqrt(2.0 * std::log(16.0));
    CHECK(p.a_n == doctest::Approx(r + (-0.5 * std::log(std::log(16.0)) - kLog2SqrtPi) / r)
                       .epsilon(1e-15));
    CHECK(p.b_n == doctest::Approx(1.0 / r).epsilon(1e-15));
    CHECK(p.n == 16);
}

TEST_CASE("main_discrete differs from iid_max by (loglog n + log H)/sqrt(2 log n)") {
    for (long n : {1000L, 1000000L}) {
        const NormalizationPair main = normalization(Theorem::main_discrete, n);
        const NormalizationPair iid = normalization(Theorem::iid_max, n);
        const double r = std::sqrt(2.0 * std::log((double)n));
        const double gap = (std::log(std::log((double)n)) + std::log(cached_constant_h())) / r;
        CHECK(main.a_n - iid.a_n == doctest::Approx(gap).epsilon(1e-13));
        CHECK(main.b_n == iid.b_n);
    }
}

TEST_CASE("erdos_renyi normalization consumes F(4/c)") {
    const NormalizationPair p = normalization(Theorem::erdos_renyi, 10000, 4.0);
    const double r = std::sqrt(2.0 * std::log(10000.0));
    const double coef = 1.0 * cached_pickands_f(1.0);
    const double expected =
        r + (-0.5 * std::log(std::log(10000.0)) + std::log(coef) - kLog2SqrtPi) / r;
    CHECK(p.a_n == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("brownian_continuous carries the 3/2 loglog coefficient") {
    const NormalizationPair p = normalization(Theorem::brownian_continuous, 4096);
    const double r = std::sqrt(2.0 * std::log(4096.0));
    CHECK(p.a_n ==
          doctest::Approx(r + (1.5 * std::log(std::log(4096.0)) - kLog2SqrtPi) / r).epsilon(1e-15));
}

TEST_CASE("darling_erdos normalization and its domain guard") {
    const NormalizationPair p = normalization(Theorem::darling_erdos, 100000);
    const double llog = std::log(std::log(100000.0));
    const double r = std::sqrt(2.0 * llog);
    CHECK(p.a_n == doctest::Approx(r + (0.5 * std::log(llog) - kLog2SqrtPi) / r).epsilon(1e-14));
    CHECK(p.b_n == doctest::Approx(1.0 / r).epsilon(1e-15));
    CHECK_THROWS_AS(normalization(Theorem::darling_erdos, 15), DomainError);
}

TEST_CASE("normalization domain and argument errors") {
    CHECK_THROWS_AS(normalization(Theorem::iid_max, 2), DomainError);
    CHECK_THROWS_AS(normalization(Theorem::main_discrete, 2), DomainError);
    CHECK_THROWS_AS(normalization(Theorem::erdos_renyi, 1000), ArgumentError);
    CHECK_THROWS_AS(normalization(Theorem::erdos_renyi, 1000, -2.0), DomainError);
}

TEST_CASE("rate table rows evaluate the advertised growth laws") {
    CHECK(evr_value(rate_table_row(1), 1000) == 1000.0);

    const long n = 22026;  // nearest integer to e^10
    const double log_n = std::log((double)n);
    CHECK(evr_value(rate_table_row(5), n) == (double)n * log_n * log_n);
    CHECK(evr_value(rate_table_row(5), n) ==
          doctest::Approx(std::exp(10.0) * 100.0).epsilon(2e-3));

    CHECK(evr_value(rate_table_row(4), n) ==
          doctest::Approx(cached_constant_h() * n * log_n).epsilon(1e-15));
    CHECK(evr_value(rate_table_row(7), n) == (double)n * log_n);

    const RateTableEntry slow = rate_table_row(2);
    CHECK(slow.has_loglog);
    CHECK(evr_value(slow, n) == doctest::Approx(log_n * std::log(log_n)).epsilon(1e-15));
    CHECK(evr_value(rate_table_row(3), n) == evr_value(slow, n));

    const RateTableEntry er = rate_table_row(6, 4.0);
    CHECK(evr_value(er, n) == doctest::Approx(cached_pickands_f(1.0) * n).epsilon(1e-15));
}

TEST_CASE("rate table argument handling") {
    CHECK_THROWS_AS(rate_table_row(6), ArgumentError);
    CHECK_THROWS_AS(rate_table_row(0), ArgumentError);
    CHECK_THROWS_AS(rate_table_row(8), ArgumentError);
    CHECK_THROWS_AS(evr_value(rate_table_row(1), 15), DomainError);
}

TEST_CASE("expansion_check is exact for c=1, b=0") {
    const ExpansionCheck e = expansion_check(1.0, 0.0, 1000000);
    CHECK(e.exact == e.expanded);
}

TEST_CASE("expansion_check remainder, frozen values") {
    // Direct long-double evaluation gives these tau-scale remainders; the
    // limit is 0 but the approach is slow (order loglog^2 n / log n).
    const auto scaled = [](double c, double b, long n) {
        const ExpansionCheck e = expansion_check(c, b, n);
        return std::abs(e.exact - e.expanded) * std::sqrt(2.0 * std::log((double)n));
    };
    CHECK(scaled(1.0, 1.0, 100000000) == doctest::Approx(0.01757796).epsilon(1e-4));
    CHECK(scaled(1.0, 1.0, 10000) > scaled(1.0, 1.0, 1000000));
    CHECK(scaled(1.0, 1.0, 1000000) > scaled(1.0, 1.0, 100000000));
}

TEST_CASE("expansion_check remainder shrinks for c=H, b=1") {
    const double H = cached_constant_h();
    const auto gap = [&](long n) {
        const ExpansionCheck e = expansion_check(H, 1.0, n);
        return std::abs(e.exact - e.expanded);
    };
    CHECK(gap(100000000) < gap(10000));
    CHECK_THROWS_AS(expansion_check(-1.0, 1.0, 10000), DomainError);
    CHECK_THROWS_AS(expansion_check(1.0, 1.0, 8), DomainError);
}

TEST_CASE("types_equivalence_check") {
    std::vector<double> n_grid = {1e4, 1e5, 1e6, 1e7, 1e8};
    std::vector<double> a1, b1;
    for (double n : n_grid) {
        const double r = std::sqrt(2.0 * std::log(n));
        a1.push_back(r + (-0.5 * std::log(std::log(n)) - kLog2SqrtPi) / r);
        b1.push_back(1.0 / r);
    }

    SUBCASE("identical sequences") {
        CHECK(types_equivalence_check(a1, b1, a1, b1));
    }
    SUBCASE("offset of one scale unit fails") {
        std::vector<double> a2 = a1;
        for (std::size_t k = 0; k < a2.size(); ++k) a2[k] += b1[k];
        CHECK_FALSE(types_equivalence_check(a1, b1, a2, b1));
    }
    SUBCASE("lemma 2.1 exact vs expanded passes") {
        std::vector<double> exact, expanded;
        for (double n : n_grid) {
            const ExpansionCheck e = expansion_check(1.0, 1.0, (long)n);
            exact.push_back(e.exact);
            expanded.push_back(e.expanded);
        }
        CHECK(types_equivalence_check(exact, b1, expanded, b1));
    }
    SUBCASE("length mismatch") {
        std::vector<double> short_a(a1.begin(), a1.end() - 1);
        CHECK_THROWS_AS(types_equivalence_check(short_a, b1, a1, b1), ArgumentError);
    }
    SUBCASE("nonpositive scales rejected") {
        std::vector<double> bad_b = b1;
        bad_b[2] = 0.0;
        CHECK_THROWS_AS(types_equivalence_check(a1, bad_b, a1, b1), DomainError);
    }
}
