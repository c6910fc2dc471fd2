#pragma once

// Dense univariate polynomials over an exact ring, plus resultant/discriminant
// over Z via fraction-free (Bareiss) determinants of Sylvester matrices.

#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

template <typename R>
struct UPoly {
    std::vector<R> c;  // low to high; trimmed

    UPoly() = default;
    UPoly(std::initializer_list<R> v) : c(v) { trim(); }
    explicit UPoly(std::vector<R> v) : c(std::move(v)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == R()) c.pop_back();
    }
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    R coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : R(); }
    R lead() const { return c.empty() ? R() : c.back(); }

    bool operator==(const UPoly& o) const { return c == o.c; }

    UPoly operator+(const UPoly& o) const {
        std::vector<R> r(std::max(c.size(), o.c.size()), R());
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return UPoly(std::move(r));
    }
    UPoly operator-(const UPoly& o) const {
        std::vector<R> r(std::max(c.size(), o.c.size()), R());
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
        return UPoly(std::move(r));
    }
    UPoly operator-() const {
        std::vector<R> r(c.size());
        for (size_t i = 0; i < c.size(); ++i) r[i] = R() - c[i];
        return UPoly(std::move(r));
    }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<R> r(c.size() + o.c.size() - 1, R());
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == R()) continue;
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        }
        return UPoly(std::move(r));
    }
    UPoly scaled(const R& s) const {
        std::vector<R> r(c.size());
        for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * s;
        return UPoly(std::move(r));
    }

    R eval(const R& x) const {
        R acc{};
        for (int i = deg(); i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }

    UPoly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<R> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) {
            R m{};
            for (size_t t = 0; t < i; ++t) m += R(1);
            r[i - 1] = c[i] * m;
        }
        return UPoly(std::move(r));
    }
};

// division with remainder over a field-like R (requires exact division by lead)
template <typename R>
std::pair<UPoly<R>, UPoly<R>> upoly_divmod(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("upoly division by zero");
    UPoly<R> q, r = a;
    q.c.assign(std::max(0, a.deg() - b.deg() + 1), R());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        R f = r.lead() * inv_of(b.lead());
        int k = r.deg() - b.deg();
        q.c[k] += f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <typename R>
UPoly<R> upoly_gcd(UPoly<R> a, UPoly<R> b) {
    while (!b.is_zero()) {
        auto [q, r] = upoly_divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        R li = inv_of(a.lead());
        a = a.scaled(li);  // monic
    }
    return a;
}

// Yun square-free decomposition over a char-0 field: returns factors g_i with
// p = prod g_i^i (g_i square-free, possibly constant 1)
template <typename R>
std::vector<UPoly<R>> squarefree_decomposition(const UPoly<R>& p) {
    std::vector<UPoly<R>> out;
    if (p.deg() <= 0) return out;
    UPoly<R> a = p.scaled(inv_of(p.lead()));
    UPoly<R> da = a.derivative();
    UPoly<R> g = upoly_gcd(a, da);
    UPoly<R> w = upoly_divmod(a, g).first;
    UPoly<R> y = upoly_divmod(da, g).first;
    // z = y - w'
    while (true) {
        UPoly<R> z = y - w.derivative();
        if (z.is_zero()) {
            out.push_back(w);
            break;
        }
        UPoly<R> gi = upoly_gcd(w, z);
        out.push_back(gi);
        w = upoly_divmod(w, gi).first;
        y = upoly_divmod(z, gi).first;
    }
    return out;
}

// ---- Z[x] specific helpers (for resultants via Bareiss) ----

using ZPoly = UPoly<Int>;

inline ZPoly zpoly_exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("zpoly division by zero");
    if (a.is_zero()) return {};
    std::vector<Int> r = a.c, q(a.deg() - b.deg() + 1, Int(0));
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        Int num = r[k + b.deg()];
        if (num == 0) continue;
        if (num % b.lead() != 0) throw std::domain_error("non-exact zpoly division");
        Int f = num / b.lead();
        q[k] = f;
        for (int i = 0; i <= b.deg(); ++i) r[i + k] -= f * b.c[i];
    }
    for (auto& x : r)
        if (x != 0) throw std::domain_error("non-exact zpoly division (remainder)");
    return ZPoly(std::move(q));
}

// Bareiss determinant of a square matrix over an integral domain with exact division
template <typename R, typename DivF>
R bareiss_det(std::vector<std::vector<R>> m, DivF exact_div_fn, const R& one) {
    int n = (int)m.size();
    if (n == 0) return one;
    R denom = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == R()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m[i][k] == R())) { piv = i; break; }
            if (piv < 0) return R();  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = exact_div_fn(t, denom);
            }
            m[i][k] = R();
        }
        denom = m[k][k];
    }
    R d = m[n - 1][n - 1];
    if (sign < 0) d = R() - d;
    return d;
}

// resultant of a, b in variable x, entries in a commutative domain R
template <typename R, typename DivF>
R resultant(const UPoly<R>& a, const UPoly<R>& b, DivF exact_div_fn, const R& one) {
    if (a.is_zero() || b.is_zero()) return R();
    int da = a.deg(), db = b.deg();
    int n = da + db;
    std::vector<std::vector<R>> syl(n, std::vector<R>(n, R()));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) syl[i][i + j] = a.c[da - j];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) syl[db + i][i + j] = b.c[db - j];
    return bareiss_det(std::move(syl), exact_div_fn, one);
}

inline Int z_resultant(const ZPoly& a, const ZPoly& b) {
    return resultant(
        a, b, [](const Int& x, const Int& d) { return Int(x / d); }, Int(1));
}

}  // namespace quintic
