#pragma once

// Q(i) with rational coordinates.

#include "quintic/rational.hpp"

namespace quintic {

struct GaussRat {
    Rat re{0}, im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(long v) : re(v) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

    GaussRat inv() const {
        Rat n = re * re + im * im;
        if (n == 0) throw std::domain_error("inverse of zero in Q(i)");
        return {re / n, -im / n};
    }
};

inline GaussRat inv_of(const GaussRat& x) { return x.inv(); }

}  // namespace quintic
