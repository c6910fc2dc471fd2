#pragma once

// The definite quaternion algebra B = (-6, w-3) over F = Q(sqrt 5):
// X^2 = -6, Y^2 = w - 3, XY = -YX.

#include <array>

#include "quintic/quad.hpp"

namespace quintic {

struct Quat {
    std::array<QuadElem, 4> c{};  // coordinates on 1, X, Y, XY

    Quat() = default;
    Quat(QuadElem c0, QuadElem c1, QuadElem c2, QuadElem c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    static Quat one() { return {QuadElem(1), QuadElem(0), QuadElem(0), QuadElem(0)}; }
    static Quat X() { return {QuadElem(0), QuadElem(1), QuadElem(0), QuadElem(0)}; }
    static Quat Y() { return {QuadElem(0), QuadElem(0), QuadElem(1), QuadElem(0)}; }
    static Quat XY() { return {QuadElem(0), QuadElem(0), QuadElem(0), QuadElem(1)}; }

    bool operator==(const Quat& o) const { return c == o.c; }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }

    Quat operator+(const Quat& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}; }
    Quat operator-(const Quat& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}; }
    Quat operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    Quat scaled(const QuadElem& s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }

    Quat conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
    QuadElem norm() const {
        // Nr(a + bX + cY + dXY) = a^2 + 6 b^2 - (w-3)(c^2 + 6 d^2)
        QuadElem wm3 = QuadElem(QuadInt{-3, 1});
        return c[0] * c[0] + QuadElem(6) * c[1] * c[1] - wm3 * (c[2] * c[2] + QuadElem(6) * c[3] * c[3]);
    }
    QuadElem trace() const { return c[0] + c[0]; }

    Quat inv() const {
        QuadElem n = norm();
        if (n.is_zero()) throw std::domain_error("inverse of zero quaternion");
        return conj().scaled(n.inv());
    }
};

// [OP] quat_mul: bilinear product from X^2 = -6, Y^2 = w-3, YX = -XY
inline Quat quat_mul(const Quat& x, const Quat& y) {
    const QuadElem wm3 = QuadElem(QuadInt{-3, 1});     // Y^2
    const QuadElem m6 = QuadElem(-6);                  // X^2
    const QuadElem xy2 = QuadElem(6) * (QuadElem(QuadInt{-3, 1}));  // (XY)^2 = 6(w-3)... sign below
    // basis products, written on (1, X, Y, XY):
    //   X Y = XY,      Y X = -XY
    //   X XY = -6 Y,   XY X = 6 Y
    //   Y XY = -(w-3) X,  XY Y = (w-3) X
    //   XY XY = -X^2 Y^2 = 6(w-3)
    const QuadElem a0 = x.c[0], a1 = x.c[1], a2 = x.c[2], a3 = x.c[3];
    const QuadElem b0 = y.c[0], b1 = y.c[1], b2 = y.c[2], b3 = y.c[3];
    (void)xy2;
    QuadElem sixwm3 = QuadElem(6) * wm3;
    Quat r;
    r.c[0] = a0 * b0 + m6 * a1 * b1 + wm3 * a2 * b2 + sixwm3 * a3 * b3;
    r.c[1] = a0 * b1 + a1 * b0 - wm3 * a2 * b3 + wm3 * a3 * b2;
    r.c[2] = a0 * b2 + a2 * b0 + m6 * a1 * b3 - m6 * a3 * b1;
    r.c[3] = a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1;
    return r;
}

inline Quat operator*(const Quat& x, const Quat& y) { return quat_mul(x, y); }

// parse from coordinate strings for table data
inline Quat quat_of(const std::string& c0, const std::string& c1, const std::string& c2,
                    const std::string& c3) {
    return Quat(parse_quad(c0), parse_quad(c1), parse_quad(c2), parse_quad(c3));
}

}  // namespace quintic
