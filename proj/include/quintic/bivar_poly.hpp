#pragma once

// Sparse bivariate polynomials over an exact coefficient ring R.
// R needs: default ctor (zero), +, -, *, ==, is_zero-like via == R().

#include <map>
#include <utility>

namespace quintic {

template <typename R>
struct BivarPoly {
    // (i, j) -> coefficient of x1^i x2^j; canonical: no zero coefficients stored
    std::map<std::pair<int, int>, R> terms;

    static BivarPoly mono(int i, int j, R c) {
        BivarPoly p;
        if (!(c == R())) p.terms[{i, j}] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const BivarPoly& o) const { return terms == o.terms; }

    void add_term(int i, int j, const R& c) {
        auto key = std::make_pair(i, j);
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!(c == R())) terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == R()) terms.erase(it);
        }
    }

    BivarPoly operator+(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (auto& [k, v] : o.terms) r.add_term(k.first, k.second, v);
        return r;
    }
    BivarPoly operator-(const BivarPoly& o) const {
        BivarPoly r = *this;
        for (auto& [k, v] : o.terms) r.add_term(k.first, k.second, R() - v);
        return r;
    }
    BivarPoly operator*(const BivarPoly& o) const {
        BivarPoly r;
        for (auto& [k1, v1] : terms)
            for (auto& [k2, v2] : o.terms) r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
        return r;
    }
    BivarPoly operator-() const {
        BivarPoly r;
        for (auto& [k, v] : terms) r.terms[k] = R() - v;
        return r;
    }

    BivarPoly scaled(const R& c) const {
        BivarPoly r;
        for (auto& [k, v] : terms) r.add_term(k.first, k.second, v * c);
        return r;
    }

    BivarPoly d_x1() const {
        BivarPoly r;
        for (auto& [k, v] : terms) {
            if (k.first == 0) continue;
            R c = v;
            R m{};
            for (int t = 0; t < k.first; ++t) m += R(1);
            r.add_term(k.first - 1, k.second, v * m);
        }
        return r;
    }
    BivarPoly d_x2() const {
        BivarPoly r;
        for (auto& [k, v] : terms) {
            if (k.second == 0) continue;
            R m{};
            for (int t = 0; t < k.second; ++t) m += R(1);
            r.add_term(k.first, k.second - 1, v * m);
        }
        return r;
    }

    R eval(const R& x1, const R& x2) const {
        R acc{};
        for (auto& [k, v] : terms) {
            R t = v;
            for (int i = 0; i < k.first; ++i) t *= x1;
            for (int j = 0; j < k.second; ++j) t *= x2;
            acc += t;
        }
        return acc;
    }

    BivarPoly swap_vars() const {
        BivarPoly r;
        for (auto& [k, v] : terms) r.terms[{k.second, k.first}] = v;
        return r;
    }

    // substitute x1 -> s1, x2 -> s2 (polynomial composition)
    BivarPoly subst(const BivarPoly& s1, const BivarPoly& s2) const {
        BivarPoly acc;
        for (auto& [k, v] : terms) {
            BivarPoly t = mono(0, 0, v);
            for (int i = 0; i < k.first; ++i) t = t * s1;
            for (int j = 0; j < k.second; ++j) t = t * s2;
            acc = acc + t;
        }
        return acc;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [k, v] : terms) { (void)v; d = std::max(d, k.first + k.second); }
        return d;
    }

    R coeff(int i, int j) const {
        auto it = terms.find({i, j});
        return it == terms.end() ? R() : it->second;
    }

    template <typename S, typename F>
    BivarPoly<S> map_coeffs(F f) const {
        BivarPoly<S> r;
        for (auto& [k, v] : terms) r.add_term(k.first, k.second, f(v));
        return r;
    }
};

}  // namespace quintic
