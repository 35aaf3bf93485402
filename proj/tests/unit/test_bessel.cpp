#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tridiag_hira/bessel.hpp"
#include "tridiag_hira/hira.hpp"
#include "tridiag_hira/profile.hpp"

using namespace tridiag_hira;

namespace {

double rel(double y, const DDReal& ref) { return std::abs(to_double(DDReal(y) - ref)) / std::abs(to_double(ref)); }

// J_k(x) = sum_m (-1)^m (x/2)^(2m+k) / (m! (m+k)!), summed in double-double.
DDReal series_j(double x, int k) {
    const DDReal h = DDReal(x) / 2.0;
    DDReal term(1.0);
    for (int i = 1; i <= k; ++i) term = term * h / DDReal(i);
    const DDReal h2 = h * h;
    DDReal sum = term;
    for (int m = 1; m < 200; ++m) {
        term = -term * h2 / DDReal(m) / DDReal(m + k);
        sum += term;
        if (std::abs(term.hi()) < 1e-40 * std::abs(sum.hi())) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("classical backward recurrence at x = 100") {
    const auto run = bessel_backward<double>(100.0, 200, 215);
    const auto ref = bessel_backward<DDReal>(100.0, 200, 215);
    CHECK(run.values.size() == 201);
    CHECK(run.values[0] == doctest::Approx(0.19986e-01).epsilon(1e-4));
    CHECK(run.values[1] == doctest::Approx(-0.77145e-01).epsilon(1e-4));
    CHECK(run.values[2] == doctest::Approx(-0.21529e-01).epsilon(1e-4));
    CHECK(run.values[200] == doctest::Approx(0.20594e-40).epsilon(1e-4));
    for (std::size_t k : {0, 1, 2, 200}) CHECK(rel(run.values[k], ref.values[k]) <= 1e-11);
}

TEST_CASE("classical backward recurrence at x = 1000") {
    const auto run = bessel_backward<double>(1000.0, 1200, 1250);
    CHECK(run.values[0] == doctest::Approx(0.24787e-01).epsilon(1e-4));
    CHECK(run.values[1200] == doctest::Approx(0.83509e-38).epsilon(1e-4));
}

TEST_CASE("square sum over the full line") {
    for (double x : {3.0, 100.0, 1000.0}) {
        const std::size_t N = choose_N(x, 0);
        const auto run = bessel_backward<double>(x, N - 1, N);
        double s = run.values[0] * run.values[0];
        for (std::size_t k = 1; k < N; ++k) s += 2.0 * run.values[k] * run.values[k];
        CHECK(std::abs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("small arguments against the power series") {
    for (double x : {0.5, 1.0, 2.5, 5.0}) {
        const std::size_t n = 12;
        const auto run = bessel_backward<DDReal>(x, n, choose_N(x, n));
        for (int k = 0; k <= static_cast<int>(n); ++k) {
            const DDReal want = series_j(x, k);
            const double err = std::abs(to_double(run.values[k] - want)) / std::abs(to_double(want));
            CHECK_MESSAGE(err <= 1e-25, "x=" << x << " k=" << k);
        }
    }
}

TEST_CASE("eigenvector route agrees with the classical algorithm") {
    const auto back = bessel_backward<double>(100.0, 200, 215);
    const auto viah = bessel_via_hira(100.0, 200, 215);
    CHECK_FALSE(viah.fallback);
    const auto ref = bessel_backward<DDReal>(100.0, 200, 215);
    for (std::size_t k : {0, 1, 2, 200}) {
        CHECK(agreement_digits(viah.values[k], back.values[k]) >= 11.0);
        CHECK(rel(viah.values[k], ref.values[k]) <= 1e-11);
    }

    // The matrix lambda sits above 4, so the growth region is not empty.
    const TridiagMatrix M(bessel_profile(100.0, 215));
    const double lambda = 2.0 + 2.0 * 216.0 / 100.0;
    CHECK(lambda > 4.0);
    CHECK(classify_regions(M, lambda).k > 0);
    CHECK(M.diag(216) == lambda);
}

TEST_CASE("simplified algorithm on the Bessel matrix matches the classical algorithm") {
    const double x = 100.0;
    const std::size_t N = 215;
    const TridiagMatrix M(bessel_profile(x, N));
    const auto s = simplified_eigenvector(M, M.diag(N + 1));
    const auto back = bessel_backward<double>(x, 200, N);
    // Both run the stable recurrence down from order N, but the simplified
    // algorithm glues at the turning point and reaches orders below x from
    // order 0 upward. Orders below x therefore agree in absolute terms
    // (|J_k| <= 1), orders above x in relative terms.
    for (std::size_t k = 0; k <= 200; ++k) {
        const double v = s.X[N - k];
        if (static_cast<double>(k) < x)
            CHECK_MESSAGE(std::abs(v - back.values[k]) <= 1e-14, "k=" << k);
        else
            CHECK_MESSAGE(std::abs(v - back.values[k]) <= 1e-13 * std::abs(back.values[k]), "k=" << k);
    }
}

TEST_CASE("deep order at x = 1e4") {
    const auto viah = bessel_via_hira(1e4, 10490, 10550);
    const auto ref = bessel_backward<DDReal>(1e4, 10490, 10550);
    CHECK(viah.values[10490] == doctest::Approx(0.35152e-46).epsilon(1e-4));
    CHECK(rel(viah.values[10490], ref.values[10490]) <= 1e-10);
}

TEST_CASE("choose_N") {
    const std::size_t n100 = choose_N(100.0, 200);
    CHECK(n100 >= 215);
    const auto a = bessel_backward<double>(100.0, 200, n100);
    const auto b = bessel_backward<double>(100.0, 200, n100 + 20);
    for (std::size_t k : {0, 1, 2, 200}) CHECK(agreement_digits(a.values[k], b.values[k]) >= 13.0);

    const std::size_t n1000 = choose_N(1000.0, 1200);
    CHECK(n1000 >= 1250);
    CHECK(n1000 <= 1270);

    const std::size_t small = choose_N(1.0, 0);
    CHECK(small < 100);
    const auto j0 = bessel_backward<double>(1.0, 0, small);
    const auto j0b = bessel_backward<double>(1.0, 0, small + 20);
    CHECK(agreement_digits(j0.values[0], j0b.values[0]) >= 15.0);
    CHECK(rel(j0.values[0], series_j(1.0, 0)) <= 1e-15);
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(bessel_backward<double>(100.0, 200, 200), std::invalid_argument);
    CHECK_THROWS_AS(bessel_backward<double>(100.0, 20, 90), std::invalid_argument);
    CHECK_THROWS_AS(choose_N(-1.0, 3), std::invalid_argument);
    CHECK(agreement_digits(1.0, 1.0) == 17.0);
    CHECK(agreement_digits(1.0 + 1e-5, 1.0) == doctest::Approx(5.0).epsilon(1e-6));
}
