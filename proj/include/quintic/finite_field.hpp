#pragma once

// F_{p^n} (n <= 4) with Zech-logarithm tables for the hot counting loops.
// Elements are exponent indices: 0..q-2 encode g^i, and q-1 encodes 0.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

class FieldTable {
public:
    using idx = std::uint32_t;

    std::uint64_t p{0};
    int n{0};
    std::uint64_t q{0};
    std::vector<std::uint32_t> modulus;  // monic irreducible f = x^n + c_{n-1}x^{n-1}+...+c0 (stores c0..c_{n-1})
    idx zero_idx{0};                     // == q-1
    idx one_idx{0};                      // == 0 (g^0)

    static constexpr std::uint64_t kDefaultBudget = 1ull << 24;

    FieldTable(std::uint64_t p_, int n_, std::uint64_t budget = kDefaultBudget) : p(p_), n(n_) {
        if (!is_prime_u64(p)) throw std::domain_error("FieldTable: p not prime");
        if (n < 1 || n > 4) throw std::domain_error("FieldTable: 1 <= n <= 4 required");
        q = 1;
        for (int i = 0; i < n; ++i) {
            if (q > budget / p) throw std::domain_error("FieldTable: q exceeds table budget");
            q *= p;
        }
        find_modulus();
        build_tables();
    }

    idx zero() const { return zero_idx; }
    idx one() const { return one_idx; }
    bool is_zero(idx x) const { return x == zero_idx; }

    idx mul(idx x, idx y) const {
        if (x == zero_idx || y == zero_idx) return zero_idx;
        std::uint64_t s = (std::uint64_t)x + y;
        if (s >= q - 1) s -= q - 1;
        return (idx)s;
    }
    idx add(idx x, idx y) const {
        if (x == zero_idx) return y;
        if (y == zero_idx) return x;
        std::uint64_t d = (std::uint64_t)y + (q - 1) - x;
        if (d >= q - 1) d -= q - 1;
        idx z = zech_[d];
        if (z == zero_idx) return zero_idx;
        std::uint64_t s = (std::uint64_t)x + z;
        if (s >= q - 1) s -= q - 1;
        return (idx)s;
    }
    idx neg(idx x) const {
        if (x == zero_idx || p == 2) return x;
        std::uint64_t s = (std::uint64_t)x + (q - 1) / 2;
        if (s >= q - 1) s -= q - 1;
        return (idx)s;
    }
    idx sub(idx x, idx y) const { return add(x, neg(y)); }
    idx inv(idx x) const {
        if (x == zero_idx) throw std::domain_error("inverse of zero");
        return x == 0 ? 0 : (idx)(q - 1 - x);
    }
    idx pow(idx x, std::uint64_t e) const {
        if (x == zero_idx) return e == 0 ? one_idx : zero_idx;
        return (idx)(((__uint128_t)x * (e % (q - 1))) % (q - 1));
    }
    idx frobenius(idx x) const { return pow(x, p); }

    idx from_int(std::int64_t v) const {
        std::int64_t r = v % (std::int64_t)p;
        if (r < 0) r += p;
        return log_of_packed_[(std::size_t)r];
    }

    // element as coefficients c0..c{n-1} over F_p
    std::vector<std::uint64_t> coords(idx x) const {
        std::vector<std::uint64_t> c(n, 0);
        if (x == zero_idx) return c;
        std::uint64_t packed = pow_table_[x];
        for (int i = 0; i < n; ++i) { c[i] = packed % p; packed /= p; }
        return c;
    }

    std::uint64_t packed(idx x) const { return x == zero_idx ? 0 : pow_table_[x]; }
    idx from_packed(std::uint64_t v) const { return log_of_packed_[v]; }
    idx from_coords(const std::vector<std::uint64_t>& c) const {
        std::uint64_t v = 0, m = 1;
        for (int i = 0; i < n; ++i) { v += (c[i] % p) * m; m *= p; }
        return log_of_packed_[v];
    }

    const std::vector<idx>& zech_table() const { return zech_; }

    idx generator() const { return 1; }
    idx element_of_order(std::uint64_t d) const {
        if (d == 0 || (q - 1) % d != 0) throw std::domain_error("order does not divide q-1");
        return d == 1 ? one_idx : (idx)((q - 1) / d);
    }

    bool has_sqrt5() const {
        idx five = from_int(5);
        if (five == zero_idx) return true;
        if (p == 2) return pow(five, q - 1) == one_idx;  // unused here
        return pow(five, (q - 1) / 2) == one_idx;
    }

    // value_slot: exponent for nonzero elements, q-1 for zero (bijective with F_q)
    std::size_t value_slot(idx x) const { return x; }

    // histogram of x -> x^5 over all of F_q, indexed by value_slot
    std::vector<std::uint32_t> fifth_power_counts() const {
        std::vector<std::uint32_t> c(q, 0);
        c[value_slot(zero_idx)] += 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i) c[(5 * i) % (q - 1)] += 1;
        return c;
    }

private:
    std::vector<std::uint64_t> pow_table_;  // exponent -> packed
    std::vector<idx> log_of_packed_;        // packed -> exponent (0 -> zero_idx)
    std::vector<idx> zech_;                 // zech[d] = log(1 + g^d)
    std::vector<std::uint32_t> mod_;        // modulus in use by packed ops

    static std::uint64_t upow(std::uint64_t b, int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    }

    std::uint64_t padd(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t r = 0, m = 1;
        for (int i = 0; i < n; ++i) {
            r += ((x % p + y % p) % p) * m;
            m *= p;
            x /= p;
            y /= p;
        }
        return r;
    }

    std::uint64_t pmul_by_x(std::uint64_t v) const {
        std::uint64_t top = v / upow(p, n - 1);
        std::uint64_t shifted = (v - top * upow(p, n - 1)) * p;
        if (top == 0) return shifted;
        std::uint64_t m = 1, res = 0;
        for (int i = 0; i < n; ++i) {
            std::uint64_t digit = (shifted / m) % p;
            std::uint64_t sub = (top * mod_[i]) % p;
            res += ((digit + p - sub) % p) * m;
            m *= p;
        }
        return res;
    }

    std::uint64_t pmul(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t acc = 0, xs = x;
        for (int i = 0; i < n; ++i) {
            std::uint64_t digit = y % p;
            y /= p;
            if (digit) {
                std::uint64_t t = xs, m = 1, term = 0;
                for (int j = 0; j < n; ++j) {
                    term += ((t % p) * digit % p) * m;
                    t /= p;
                    m *= p;
                }
                acc = padd(acc, term);
            }
            if (i + 1 < n) xs = pmul_by_x(xs);
        }
        return acc;
    }

    std::uint64_t ppow(std::uint64_t b, std::uint64_t e) const {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = pmul(acc, b);
            b = pmul(b, b);
            e >>= 1;
        }
        return acc;
    }

    bool is_irreducible(const std::vector<std::uint32_t>& cand) {
        mod_ = cand;
        // f (degree n, nonzero constant term) is irreducible over F_p iff
        // x^{p^n} == x mod f and x^{p^d} != x for proper divisors d of n
        std::uint64_t xx = p;  // the element "x"
        if (ppow(xx, upow(p, n)) != xx) return false;
        for (int d = 1; d <= n / 2; ++d)
            if (n % d == 0 && ppow(xx, upow(p, d)) == xx) return false;
        return true;
    }

    void find_modulus() {
        modulus.assign(n, 0);
        if (n == 1) { mod_ = modulus; return; }
        std::vector<std::uint32_t> c(n, 0);
        c[0] = 1;
        for (;;) {
            if (c[0] != 0 && is_irreducible(c)) { modulus = c; mod_ = c; return; }
            int i = 0;
            for (;;) {
                if (i == n) throw std::logic_error("no irreducible polynomial found");
                c[i] += 1;
                if (c[i] == p) { c[i] = 0; ++i; }
                else break;
            }
        }
    }

    void build_tables() {
        mod_ = modulus;
        auto fac = factor_u64(q - 1);
        std::uint64_t g = 0;
        for (std::uint64_t cand = 2; cand < q; ++cand) {
            bool ok = true;
            for (auto& [r, e] : fac) {
                (void)e;
                if (ppow(cand, (q - 1) / r) == 1) { ok = false; break; }
            }
            if (ok) { g = cand; break; }
        }
        if (g == 0) throw std::logic_error("no generator found");

        pow_table_.assign(q - 1, 0);
        log_of_packed_.assign(q, 0);
        log_of_packed_[0] = (idx)(q - 1);
        std::uint64_t cur = 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            pow_table_[i] = cur;
            log_of_packed_[cur] = (idx)i;
            cur = pmul(cur, g);
        }
        if (cur != 1) throw std::logic_error("generator order mismatch");

        zech_.assign(q - 1, 0);
        for (std::uint64_t i = 0; i + 1 < q; ++i) zech_[i] = log_of_packed_[padd(pow_table_[i], 1)];
        zero_idx = (idx)(q - 1);
        one_idx = 0;
    }
};

// [OP] fq_build
inline FieldTable fq_build(std::uint64_t p, int n, std::uint64_t budget = FieldTable::kDefaultBudget) {
    return FieldTable(p, n, budget);
}

// [OP] dickson_permutes: the gcd criterion for the two-variable Dickson vector
inline bool dickson_permutes(std::uint64_t nn, std::uint64_t q) {
    std::uint64_t g1 = std::gcd(nn, q - 1);
    std::uint64_t g2 = std::gcd(nn, q * q - 1);
    return g1 == 1 && g2 == 1;
}

}  // namespace quintic
