#include <cmath>

#include "doctest.h"
#include "evscan/errors.hpp"
#include "evscan/spitzer.hpp"
#include "oracle_utils.hpp"

using namespace evscan;

// Golden values frozen from the direct-summation long-double oracle
// (tests/oracle_utils.hpp) before the implementation was written.
namespace {
constexpr double kP2 = 0.665566157455704315;       // p_inf(2)
constexpr double kP50 = 0.999796401241984943;      // p_inf(50)
constexpr double kP001 = 0.022155647584832096;     // p_inf(0.001)
constexpr double kF2 = 0.221489154975175694;       // F(2)
}  // namespace

TEST_CASE("spitzer_p_inf golden value at a=50") {
    const SeriesValue v = spitzer_p_inf({50.0, 1e-12});
    CHECK(std::abs(v.value - kP50) < 1e-12);
    CHECK(std::abs(v.value - (double)oracle::p_inf_direct(50.0L)) < 1e-12);
    CHECK(v.err_bound >= 0.0);
    CHECK(std::abs(v.value - kP50) <= v.err_bound + 1e-15);
}

TEST_CASE("spitzer_p_inf golden value at a=2") {
    const SeriesValue v = spitzer_p_inf({2.0, 1e-10});
    CHECK(std::abs(v.value - kP2) < 1e-10);
    CHECK(std::abs(v.value - kP2) <= v.err_bound + 1e-14);
}

TEST_CASE("spitzer_p_inf golden value at a=0.001") {
    const SeriesValue v = spitzer_p_inf({0.001, 1e-10});
    CHECK(std::abs(v.value - kP001) < 1e-10);
}

TEST_CASE("spitzer_p_inf approaches 1 for huge a") {
    CHECK(std::abs(spitzer_p_inf({1e6, 1e-12}).value - 1.0) < 1e-10);
}

TEST_CASE("spitzer_p_inf domain and budget errors") {
    CHECK_THROWS_AS(spitzer_p_inf({-1.0, 1e-6}), DomainError);
    CHECK_THROWS_AS(spitzer_p_inf({0.0, 1e-6}), DomainError);
    CHECK_THROWS_AS(spitzer_p_inf({2.0, 0.0}), DomainError);
    CHECK_THROWS_AS(spitzer_p_inf({2.0, 1.5}), DomainError);
    CHECK_THROWS_AS(spitzer_p_inf({0.001, 1e-10}, 10), BudgetError);
}

TEST_CASE("p_inf lies in (0,1) and increases in a") {
    double prev = 0.0;
    for (double a : {0.001, 0.01, 0.1, 1.0, 2.0, 10.0, 50.0}) {
        const double p = spitzer_p_inf({a, 1e-10}).value;
        CHECK(p > 0.0);
        CHECK(p < 1.0);
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("err_bound is honest against the direct-summation oracle") {
    for (double a : {0.003, 0.07, 0.9, 3.0, 20.0}) {
        for (double tol : {1e-4, 1e-8, 1e-11}) {
            const SeriesValue v = spitzer_p_inf({a, tol});
            const double truth = (double)oracle::p_inf_direct((long double)a);
            CHECK(std::abs(v.value - truth) <= v.err_bound + 1e-14);
            CHECK(v.err_bound <= 2.0 * tol);
        }
    }
}

TEST_CASE("tightening the tolerance moves the value by at most tol") {
    for (double a : {0.01, 2.0, 50.0}) {
        for (double tol : {1e-6, 1e-8, 1e-10}) {
            const double loose = spitzer_p_inf({a, tol}).value;
            const double tight = spitzer_p_inf({a, tol / 10.0}).value;
            CHECK(std::abs(loose - tight) <= tol);
        }
    }
}

TEST_CASE("pickands_f golden value at a=2") {
    const PickandsEvaluation f = pickands_f(2.0, 1e-10);
    CHECK(std::abs(f.f_value - kF2) < 1e-10);
    CHECK(std::abs(f.p_inf - kP2) < 1e-10);
    CHECK(f.a == 2.0);
}

TEST_CASE("pickands_f large-a limit: a F(a) -> 1") {
    const PickandsEvaluation f = pickands_f(50.0, 1e-10);
    CHECK(std::abs(50.0 * f.f_value - 1.0) <= 1e-2);
}

TEST_CASE("pickands_f small-a window") {
    const PickandsEvaluation f = pickands_f(0.001, 1e-8);
    CHECK(f.f_value > 0.40);
    CHECK(f.f_value < 0.50);
}

TEST_CASE("f_value * a recovers p_inf^2") {
    for (double a : {0.01, 0.5, 2.0, 10.0}) {
        const PickandsEvaluation f = pickands_f(a, 1e-10);
        CHECK(f.f_value * a == doctest::Approx(f.p_inf * f.p_inf).epsilon(4e-16));
    }
}

TEST_CASE("F decreases while a F(a) increases toward 1") {
    double prev_f = 1e300;
    for (double a : {0.001, 0.01, 0.1, 1.0, 10.0}) {
        const double f = pickands_f(a, 1e-9).f_value;
        CHECK(f < prev_f);
        prev_f = f;
    }
    double prev_af = 0.0;
    for (double a : {1.0, 10.0, 50.0}) {
        const double af = a * pickands_f(a, 1e-9).f_value;
        CHECK(af > prev_af);
        CHECK(af < 1.0);
        prev_af = af;
    }
}

TEST_CASE("clump_g plug-in identities") {
    const double tol = 1e-9;
    const PickandsEvaluation f2 = pickands_f(2.0, tol);
    const PickandsEvaluation f4 = pickands_f(4.0, tol);
    CHECK(clump_g(1.0, 2.0, tol).value == f2.f_value * f2.f_value);
    CHECK(clump_g(0.5, 2.0, tol).value == 4.0 * (f4.f_value * f4.f_value));
}

TEST_CASE("clump_g far-field asymptotic G(y) ~ 1/(4y^2)") {
    // The exact ratio at y=1000, a=2 is 0.94922591 (oracle F(0.002)), a hair
    // outside 5%: freeze the oracle value and a 6% envelope.
    const SeriesValue g = clump_g(1000.0, 2.0, 1e-9);
    const double ratio = g.value * 4.0 * 1000.0 * 1000.0;
    CHECK(ratio == doctest::Approx(0.94922591).epsilon(2e-6));
    CHECK(std::abs(g.value / 2.5e-7 - 1.0) < 0.06);
    CHECK_THROWS_AS(clump_g(0.0, 2.0, 1e-9), DomainError);
}

TEST_CASE("grid clump intensity never exceeds the continuous one") {
    // G(y; a) <= 1/(4 y^2) for every grid step, since F <= 1/2.
    for (double a : {0.01, 0.5, 2.0, 8.0}) {
        for (double y : {0.05, 0.3, 1.0, 7.0, 200.0}) {
            CHECK(clump_g(y, a, 1e-9).value <= 0.25 / (y * y));
        }
    }
}
