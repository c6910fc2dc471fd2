#pragma once

// Exact arithmetic in Q(zeta_15): polynomials in z mod Phi_15, degree 8.

#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "quintic/quad.hpp"

namespace quintic {

// Phi_15(x) = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1, stored low-to-high
inline const std::array<int, 9>& phi15_coeffs() {
    static const std::array<int, 9> c = {1, -1, 0, 1, -1, 1, 0, -1, 1};
    return c;
}

struct CycloElem {
    std::array<Rat, 8> c{};  // c[0] + c[1] z + ... + c[7] z^7

    CycloElem() = default;
    explicit CycloElem(const Rat& r) { c[0] = r; }
    static CycloElem zeta(int k) {  // z^k, any integer k (z^15 = 1)
        k %= 15;
        if (k < 0) k += 15;
        CycloElem e;
        if (k < 8) { e.c[k] = 1; return e; }
        // reduce z^k via table
        return zeta_power_table()[k];
    }

    bool operator==(const CycloElem& o) const { return c == o.c; }
    bool operator!=(const CycloElem& o) const { return !(*this == o); }
    bool operator<(const CycloElem& o) const { return c < o.c; }
    bool is_zero() const {
        for (auto& x : c) if (x != 0) return false;
        return true;
    }

    CycloElem operator+(const CycloElem& o) const {
        CycloElem r;
        for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    CycloElem operator-(const CycloElem& o) const {
        CycloElem r;
        for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    CycloElem operator-() const {
        CycloElem r;
        for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
        return r;
    }
    CycloElem operator*(const CycloElem& o) const {
        std::array<Rat, 15> prod{};
        for (int i = 0; i < 8; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < 8; ++j) {
                if (o.c[j] == 0) continue;
                prod[i + j] += c[i] * o.c[j];
            }
        }
        CycloElem r;
        for (int k = 0; k < 8; ++k) r.c[k] = prod[k];
        for (int k = 8; k < 15; ++k) {
            if (prod[k] == 0) continue;
            const CycloElem& red = xpow_reduction(k);
            for (int i = 0; i < 8; ++i) r.c[i] += prod[k] * red.c[i];
        }
        return r;
    }
    CycloElem& operator+=(const CycloElem& o) { *this = *this + o; return *this; }
    CycloElem& operator-=(const CycloElem& o) { *this = *this - o; return *this; }
    CycloElem& operator*=(const CycloElem& o) { *this = *this * o; return *this; }

    // Galois automorphism z -> z^k, gcd(k,15)=1
    CycloElem galois(int k) const {
        k %= 15;
        if (k < 0) k += 15;
        if (std::gcd(k, 15) != 1) throw std::domain_error("galois: k not coprime to 15");
        CycloElem r;
        for (int i = 0; i < 8; ++i) {
            if (c[i] == 0) continue;
            CycloElem zi = zeta((i * k) % 15);
            for (int j = 0; j < 8; ++j) r.c[j] += c[i] * zi.c[j];
        }
        return r;
    }

    bool is_rational() const {
        for (int i = 1; i < 8; ++i) if (c[i] != 0) return false;
        return true;
    }
    Rat rational_part() const {
        if (!is_rational()) throw std::domain_error("not a rational element");
        return c[0];
    }

    CycloElem inv() const;

private:
    // x^k mod Phi15 for k in [8, 15)
    static const CycloElem& xpow_reduction(int k) {
        static const std::vector<CycloElem> table = [] {
            std::vector<CycloElem> t(15);
            // x^8 = x^7 - x^5 + x^4 - x^3 + x - 1
            CycloElem x8;
            x8.c[7] = 1; x8.c[5] = -1; x8.c[4] = 1; x8.c[3] = -1; x8.c[1] = 1; x8.c[0] = -1;
            t[8] = x8;
            for (int k2 = 9; k2 < 15; ++k2) {
                // t[k2] = x * t[k2-1]
                const CycloElem& prev = t[k2 - 1];
                std::array<Rat, 9> shifted{};
                for (int i = 0; i < 8; ++i) shifted[i + 1] = prev.c[i];
                CycloElem r;
                for (int i = 0; i < 8; ++i) r.c[i] = shifted[i];
                if (shifted[8] != 0)
                    for (int i = 0; i < 8; ++i) r.c[i] += shifted[8] * x8.c[i];
                t[k2] = r;
            }
            return t;
        }();
        return table[k];
    }

    static const std::vector<CycloElem>& zeta_power_table() {
        static const std::vector<CycloElem> table = [] {
            std::vector<CycloElem> t(15);
            for (int k = 0; k < 8; ++k) {
                CycloElem e;
                e.c[k] = 1;
                t[k] = e;
            }
            for (int k = 8; k < 15; ++k) t[k] = xpow_reduction(k);
            return t;
        }();
        return table;
    }
};

// polynomial gcd machinery for inversion: work in Q[x] mod Phi15
inline CycloElem CycloElem::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta15)");
    // extended Euclid on (Phi15, this-as-poly)
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (int i = (int)p.size() - 1; i >= 0; --i) if (p[i] != 0) return i;
        return -1;
    };
    auto trim = [&](Poly& p) { p.resize(deg(p) + 1); };
    Poly a = {1, -1, 0, 1, -1, 1, 0, -1, 1};  // Phi15 low-to-high
    Poly b(c.begin(), c.end());
    trim(b);
    Poly s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients tracking b-side only
    while (deg(b) > 0) {
        // divide a by b
        Poly q(deg(a) - deg(b) + 1, Rat(0)), r = a;
        while (deg(r) >= deg(b)) {
            int k = deg(r) - deg(b);
            Rat f = r[deg(r)] / b[deg(b)];
            q[k] = f;
            for (int i = 0; i <= deg(b); ++i) r[i + k] -= f * b[i];
            trim(r);
            if (r.empty()) break;
        }
        // (a, b) <- (b, r); (s0, s1) <- (s1, s0 - q s1)
        Poly qs1(q.size() + s1.size(), Rat(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
        Poly ns(std::max(s0.size(), qs1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) ns[i] += s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) ns[i] -= qs1[i];
        trim(ns);
        a = b;
        b = r;
        s0 = s1;
        s1 = ns;
    }
    if (deg(b) != 0) throw std::logic_error("cyclotomic inversion failed");
    Rat lead = b[0];
    // inverse = s1 / lead reduced mod Phi15
    CycloElem out;
    std::array<Rat, 15> red{};
    for (size_t i = 0; i < s1.size() && i < 15; ++i) red[i] = s1[i] / lead;
    for (int k = 0; k < 8; ++k) out.c[k] = red[k];
    for (int k = 8; k < 15; ++k) {
        if (red[k] == 0) continue;
        CycloElem zk = CycloElem::zeta(k);
        for (int i = 0; i < 8; ++i) out.c[i] += red[k] * zk.c[i];
    }
    return out;
}

inline CycloElem inv_of(const CycloElem& x) { return x.inv(); }

// embeddings of the subfields
inline CycloElem cyclo_zeta5(int k = 1) { return CycloElem::zeta(3 * k); }
inline CycloElem cyclo_zeta3(int k = 1) { return CycloElem::zeta(5 * k); }
inline CycloElem cyclo_w() { return -CycloElem::zeta(6) - CycloElem::zeta(9); }  // w = -z5^2 - z5^3

inline CycloElem cyclo_from_quad(const QuadElem& x) {
    CycloElem w = cyclo_w();
    CycloElem r(x.ra());
    CycloElem bw = w * CycloElem(x.rb());
    return r + bw;
}

}  // namespace quintic
