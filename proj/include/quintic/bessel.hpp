#pragma once

// Modified Bessel functions K0, K1, K2 at high precision and the inverse-Mellin
// special functions F_m used by the functional-equation test:
//   F_0(x) = 2 x K_2(2 sqrt x),  F_m' = -F_{m-1}/x,  F_m -> 0 at infinity.
// Closed forms: F_1(x) = 2 sqrt(x) K_1(2 sqrt x) + 2 K_0(2 sqrt x);
// F_2 by quadrature of F_1(t)/t.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>
#include <vector>

namespace quintic {

using HP = boost::multiprecision::cpp_bin_float_50;
using HP2 = boost::multiprecision::cpp_bin_float_100;

inline const HP2& hp_euler_gamma() {
    static const HP2 g("0.577215664901532860606512090082402431042159335939923598805767234884867726777664670936947063291746749516");
    return g;
}
inline const HP2& hp_pi() {
    static const HP2 p("3.141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117068");
    return p;
}

// K_n(z) for n = 0, 1, 2 via the ascending series; accurate for moderate z (use z <= 40)
inline HP2 besselk_series(int n, const HP2& z) {
    HP2 u = z * z / 4;
    HP2 halfz = z / 2;
    HP2 lz = log(halfz);
    // I_n(z)
    auto bessel_i = [&](int nn) {
        HP2 term = 1;
        for (int j = 1; j <= nn; ++j) term *= halfz / j;
        HP2 sum = term;
        for (int k = 1; k < 500; ++k) {
            term *= u / (HP2(k) * (k + nn));
            sum += term;
            if (term < sum * HP2(1e-80) && k > 4) break;
        }
        return sum;
    };
    // finite part: (1/2)(z/2)^{-n} sum_{k=0}^{n-1} ((n-k-1)!/k!) (-u)^k
    HP2 finite = 0;
    if (n > 0) {
        HP2 pw = 1;  // (z/2)^{-n} later
        HP2 muk = 1; // (-u)^k
        for (int k = 0; k <= n - 1; ++k) {
            long f = 1;
            for (long j = 2; j <= n - k - 1; ++j) f *= j;
            long kf = 1;
            for (long j = 2; j <= k; ++j) kf *= j;
            finite += HP2(f) / kf * muk;
            muk *= -u;
        }
        pw = pow(halfz, -n) / 2;
        finite *= pw;
    }
    // psi values
    auto psi = [&](int m) {
        HP2 v = -hp_euler_gamma();
        for (int j = 1; j < m; ++j) v += HP2(1) / j;
        return v;
    };
    HP2 tail = 0;
    {
        HP2 uk = 1;  // u^k
        HP2 kfact = 1, nkfact = 1;
        for (long j = 2; j <= n; ++j) nkfact *= j;
        for (int k = 0; k < 500; ++k) {
            if (k > 0) {
                kfact *= k;
                nkfact *= (n + k);
                uk *= u;
            }
            HP2 term = (psi(k + 1) + psi(n + k + 1)) / (kfact * nkfact) * uk;
            tail += term;
            HP2 mag = term < 0 ? HP2(-term) : term;
            HP2 smag = tail < 0 ? HP2(-tail) : tail;
            if (k > 6 && mag < (smag + HP2(1)) * HP2(1e-80)) break;
        }
        tail *= pow(halfz, n) / 2;
        if (n % 2) tail = -tail;
    }
    HP2 mid = lz * bessel_i(n);
    if (n % 2 == 0) mid = -mid;
    return finite + mid + tail;
}

// asymptotic expansion, good for z >= 40 (relative error < 1e-34 there)
inline HP2 besselk_asymptotic(int n, const HP2& z) {
    HP2 mu = HP2(4) * n * n;
    HP2 term = 1, sum = 1;
    HP2 best = 1;
    for (int k = 1; k < 200; ++k) {
        term *= (mu - HP2((2 * k - 1) * (2 * k - 1))) / (HP2(8) * z * k);
        HP2 mag = term < 0 ? HP2(-term) : term;
        if (mag > best) break;  // divergent tail reached
        best = mag;
        sum += term;
        if (mag < HP2(1e-80)) break;
    }
    return sqrt(hp_pi() / (2 * z)) * exp(-z) * sum;
}

inline HP2 besselk(int n, const HP2& z) {
    if (n < 0) n = -n;
    if (n > 2) throw std::domain_error("besselk: only n <= 2 implemented");
    if (z <= 0) throw std::domain_error("besselk: z > 0 required");
    return z < 40 ? besselk_series(n, z) : besselk_asymptotic(n, z);
}

// F_0(x) = 2 x K_2(2 sqrt x)
inline HP fm_f0(const HP& x) {
    if (x <= 0) throw std::domain_error("fm_eval: x > 0 required");
    HP2 xx(x);
    HP2 z = 2 * sqrt(xx);
    return HP(2 * xx * besselk(2, z));
}

// F_1(x) = 2 sqrt(x) K_1(2 sqrt x) + 2 K_0(2 sqrt x)
inline HP fm_f1(const HP& x) {
    if (x <= 0) throw std::domain_error("fm_eval: x > 0 required");
    HP2 xx(x);
    HP2 z = 2 * sqrt(xx);
    return HP(z * besselk(1, z) + 2 * besselk(0, z));
}

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
inline const std::pair<std::vector<HP2>, std::vector<HP2>>& gauss_legendre_20() {
    static const auto nw = [] {
        const int N = 20;
        std::vector<HP2> x(N), w(N);
        for (int i = 0; i < N; ++i) {
            // Chebyshev initial guess
            HP2 t = cos(hp_pi() * (HP2(i) + HP2(0.75)) / (HP2(N) + HP2(0.5)));
            for (int it = 0; it < 200; ++it) {
                // Legendre P_N(t) and derivative by recurrence
                HP2 p0 = 1, p1 = t;
                for (int k = 2; k <= N; ++k) {
                    HP2 p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                HP2 dp = N * (t * p1 - p0) / (t * t - 1);
                HP2 dt = p1 / dp;
                t -= dt;
                if (abs(dt) < HP2(1e-90)) break;
            }
            HP2 p0 = 1, p1 = t;
            for (int k = 2; k <= N; ++k) {
                HP2 p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            HP2 dp = N * (t * p1 - p0) / (t * t - 1);
            x[i] = t;
            w[i] = 2 / ((1 - t * t) * dp * dp);
        }
        return std::pair<std::vector<HP2>, std::vector<HP2>>(x, w);
    }();
    return nw;
}

// F_2(x) = int_x^infty F_1(t)/t dt, panelwise Gauss-Legendre
inline HP fm_f2(const HP& x) {
    if (x <= 0) throw std::domain_error("fm_eval: x > 0 required");
    auto& [nodes, weights] = gauss_legendre_20();
    HP2 lo(x);
    HP2 acc = 0;
    // integrate out to where 2 sqrt(t) ~ 120 (integrand < 1e-50)
    HP2 hi_target = 3600;
    if (lo >= hi_target) return HP(0);
    while (lo < hi_target) {
        HP2 width = lo < 4 ? HP2(1) / 2 : sqrt(lo);
        HP2 hi = lo + width;
        if (hi > hi_target) hi = hi_target;
        HP2 mid = (lo + hi) / 2, half = (hi - lo) / 2;
        for (size_t i = 0; i < nodes.size(); ++i) {
            HP2 t = mid + half * nodes[i];
            HP2 z = 2 * sqrt(t);
            HP2 f1 = z * besselk(1, z) + 2 * besselk(0, z);
            acc += weights[i] * half * f1 / t;
        }
        lo = hi;
    }
    return HP(acc);
}

// [OP] fm_eval
inline HP fm_eval(int m, const HP& x) {
    switch (m) {
        case 0: return fm_f0(x);
        case 1: return fm_f1(x);
        case 2: return fm_f2(x);
        default: throw std::domain_error("fm_eval: m in {0,1,2}");
    }
}

}  // namespace quintic
