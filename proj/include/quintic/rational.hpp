#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quintic {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline Rat inv_of(const Rat& x) {
    if (x == 0) throw std::domain_error("inverse of zero rational");
    return Rat(1) / x;
}

inline Int igcd(Int a, Int b) {
    using boost::multiprecision::gcd;
    return gcd(a, b);
}

inline Int ipow(Int b, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

inline std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

// deterministic Miller-Rabin for 64-bit inputs
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// trial-division factorization, adequate for the sizes used here (q-1 < 2^25 etc.)
inline std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.push_back({p, e});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

// prime powers q = p^n with n>=1, q <= bound, as (q, p, n)
struct PrimePower {
    std::uint64_t q;
    std::uint64_t p;
    int n;
};

inline std::vector<PrimePower> prime_powers_upto(std::uint64_t bound) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (!is_prime_u64(p)) continue;
        std::uint64_t q = p;
        int n = 1;
        while (q <= bound) {
            out.push_back({q, p, n});
            if (q > bound / p) break;
            q *= p;
            ++n;
        }
    }
    return out;
}

}  // namespace quintic
