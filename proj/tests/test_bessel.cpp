#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "quintic/bessel.hpp"

using namespace quintic;

namespace {

// Lanczos log-gamma for the contour-integral oracle
std::complex<double> clgamma(std::complex<double> z) {
    static const double g[] = {0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
                               771.32342877765313,     -176.61502916214059,   12.507343278686905,
                               -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    std::complex<double> x = g[0];
    for (int i = 1; i < 9; ++i) x += g[i] / (z + std::complex<double>(i - 1, 0));
    std::complex<double> t = z + 6.5;
    return 0.5 * std::log(2 * M_PI) + (z - 0.5) * std::log(t) - t + std::log(x);
}

// (1/2 pi i) int Gamma(s+2) Gamma(s) x^{-s} s^{-m} ds along Re s = 1
double contour_fm(int m, double x) {
    double h = 0.002, T = 80;
    double acc = 0;
    for (double t = -T; t <= T; t += h) {
        std::complex<double> s(1.0, t);
        std::complex<double> v =
            std::exp(clgamma(s + 2.0) + clgamma(s) - s * std::log(x) - double(m) * std::log(s));
        acc += v.real() * h;
    }
    return acc / (2 * M_PI);
}

}  // namespace

TEST_CASE("F0 matches the inverse-Mellin contour integral") {
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
        double ref = contour_fm(0, x);
        double got = (double)fm_eval(0, HP(x));
        CHECK(std::abs(got - ref) < 1e-10);
    }
}

TEST_CASE("F1 matches the contour integral") {
    for (double x : {1.0, 3.0}) {
        double ref = contour_fm(1, x);
        double got = (double)fm_eval(1, HP(x));
        CHECK(std::abs(got - ref) < 1e-10);
    }
}

TEST_CASE("F0 decays: F0(400) < 1e-15, monotone on large x") {
    CHECK((double)fm_eval(0, HP(400)) < 1e-15);
    double prev = (double)fm_eval(0, HP(50));
    for (double x : {60.0, 80.0, 120.0, 200.0, 400.0}) {
        double cur = (double)fm_eval(0, HP(x));
        CHECK(cur < prev);
        CHECK(cur > 0);
        prev = cur;
    }
}

TEST_CASE("defining ODE F_m' = -F_{m-1}/x via central differences") {
    for (int m : {1, 2}) {
        HP x(2), h(HP(1) / 4096);
        HP lhs = (fm_eval(m, x + h) - fm_eval(m, x - h)) / (2 * h);
        HP rhs = -fm_eval(m - 1, x) / x;
        double rel = (double)((lhs - rhs) / rhs);
        CHECK(std::abs(rel) < 1e-6);  // central difference error ~ h^2
    }
    HP x(2), h(HP(1) / (1 << 16));
    HP lhs = (fm_eval(1, x + h) - fm_eval(1, x - h)) / (2 * h);
    HP rhs = -fm_eval(0, x) / x;
    CHECK(std::abs((double)((lhs - rhs) / rhs)) < 1e-8);
}

TEST_CASE("series and asymptotic regimes agree at the crossover") {
    for (int n : {0, 1, 2}) {
        HP2 lo = besselk_series(n, HP2(40));
        HP2 hi = besselk_asymptotic(n, HP2(40));
        HP2 rel = (lo - hi) / hi;
        CHECK((double)abs(rel) < 1e-30);
    }
}
