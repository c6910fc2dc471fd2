#pragma once

// Arithmetic in Z[w] and Q(sqrt 5), w = (1+sqrt 5)/2, w^2 = w + 1.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include "quintic/rational.hpp"

namespace quintic {

// sign of alpha + beta*sqrt(5), exact
inline int sqrt5_sign(const Int& alpha, const Int& beta) {
    if (alpha >= 0 && beta >= 0) return (alpha == 0 && beta == 0) ? 0 : 1;
    if (alpha <= 0 && beta <= 0) return (alpha == 0 && beta == 0) ? 0 : -1;
    // opposite signs: compare alpha^2 with 5 beta^2
    Int a2 = alpha * alpha, b2 = 5 * beta * beta;
    if (a2 == b2) return 0;  // cannot happen for integers (5 not a square) unless both 0
    if (alpha > 0) return a2 > b2 ? 1 : -1;
    return a2 > b2 ? -1 : 1;
}

struct QuadInt {
    Int a{0}, b{0};  // a + b w

    QuadInt() = default;
    QuadInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    QuadInt(long v) : a(v), b(0) {}

    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
    bool is_zero() const { return a == 0 && b == 0; }

    QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
    QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
    QuadInt operator-() const { return {-a, -b}; }
    QuadInt operator*(const QuadInt& o) const {
        // (a+bw)(c+dw) = ac + bd + (ad+bc+bd) w
        Int bd = b * o.b;
        return {a * o.a + bd, a * o.b + b * o.a + bd};
    }
    QuadInt& operator+=(const QuadInt& o) { a += o.a; b += o.b; return *this; }
    QuadInt& operator-=(const QuadInt& o) { a -= o.a; b -= o.b; return *this; }
    QuadInt& operator*=(const QuadInt& o) { *this = *this * o; return *this; }

    QuadInt conj() const { return {a + b, -b}; }          // sigma(a+bw) = (a+b) - b w
    Int norm() const { return a * a + a * b - b * b; }    // x sigma(x)
    Int trace() const { return 2 * a + b; }               // x + sigma(x)

    // sign of iota_1 (w -> (1+sqrt5)/2) resp. iota_2 (w -> (1-sqrt5)/2)
    int sign_emb1() const { return sqrt5_sign(2 * a + b, b); }
    int sign_emb2() const { return sqrt5_sign(2 * a + b, -b); }
    bool totally_positive() const { return sign_emb1() > 0 && sign_emb2() > 0; }
};

inline QuadInt W() { return {0, 1}; }
inline QuadInt quad_w_pow(long k) {
    // w^k for any integer k (w^{-1} = w - 1)
    QuadInt r{1, 0}, w{0, 1}, wi{-1, 1};
    if (k >= 0) for (long i = 0; i < k; ++i) r *= w;
    else for (long i = 0; i < -k; ++i) r *= wi;
    return r;
}

// compare |iota_1(x)| + |iota_2(x)| as exact quantities: returns -1/0/1 for x vs y
inline int cmp_embedding_size(const QuadInt& x, const QuadInt& y) {
    // |a + b sqrt5|: work with (alpha,beta) pairs alpha+beta sqrt5 = 2*iota(x)
    auto abs_pair = [](Int alpha, Int beta) {
        if (sqrt5_sign(alpha, beta) < 0) { alpha = -alpha; beta = -beta; }
        return std::pair<Int, Int>(alpha, beta);
    };
    auto [a1, b1] = abs_pair(2 * x.a + x.b, x.b);
    auto [a2, b2] = abs_pair(2 * x.a + x.b, -x.b);
    auto [c1, d1] = abs_pair(2 * y.a + y.b, y.b);
    auto [c2, d2] = abs_pair(2 * y.a + y.b, -y.b);
    // compare (a1+a2) + (b1+b2) sqrt5 with (c1+c2) + (d1+d2) sqrt5
    return sqrt5_sign((a1 + a2) - (c1 + c2), (b1 + b2) - (d1 + d2));
}

// deterministic canonical associate: among +-w^k x minimize embedding size,
// tie-broken lexicographically by (a, b) descending preference for positives
inline QuadInt canonical_associate(const QuadInt& x) {
    if (x.is_zero()) return x;
    QuadInt best = x;
    bool first = true;
    QuadInt cur = x;
    // walk k downward until size grows, then upward; window is generous
    for (int k = -64; k <= 64; ++k) {
        QuadInt cand = x * quad_w_pow(k);
        for (int s = 0; s < 2; ++s) {
            QuadInt c = s ? -cand : cand;
            if (first) { best = c; first = false; continue; }
            int cmp = cmp_embedding_size(c, best);
            if (cmp < 0 || (cmp == 0 && (c.a > best.a || (c.a == best.a && c.b > best.b))))
                best = c;
        }
    }
    (void)cur;
    return best;
}

// totally positive associate with minimal (a, |b|); exists for any x != 0
inline QuadInt normalize_tp(const QuadInt& x) {
    if (x.is_zero()) return x;
    QuadInt y = x;
    // force totally positive using units {+-1, +-w}
    if (!y.totally_positive()) {
        for (QuadInt u : {QuadInt{-1, 0}, W(), -W(), QuadInt{-1, 1}, QuadInt{1, -1}}) {
            QuadInt c = y * u;
            if (c.totally_positive()) { y = c; break; }
        }
    }
    if (!y.totally_positive()) throw std::logic_error("normalize_tp: no tp associate found");
    // minimize over w^{2k} (tp unit squares)
    QuadInt w2 = W() * W(), w2i = quad_w_pow(-2);
    auto better = [](const QuadInt& u, const QuadInt& v) {
        if (u.a != v.a) return u.a < v.a;
        Int ub = u.b < 0 ? Int(-u.b) : u.b, vb = v.b < 0 ? Int(-v.b) : v.b;
        return ub < vb;
    };
    for (;;) {
        QuadInt c = y * w2;
        if (better(c, y)) { y = c; continue; }
        break;
    }
    for (;;) {
        QuadInt c = y * w2i;
        if (better(c, y)) { y = c; continue; }
        break;
    }
    return y;
}

// nearest-integer rounding of a rational, ties toward +infinity
inline Int round_nearest(const Rat& q) {
    Int n = num(q), d = den(q);  // d > 0
    // floor((2n + d) / (2d))
    Int t = 2 * n + d;
    Int dd = 2 * d;
    Int fl = t / dd;
    if (t < 0 && t % dd != 0) fl -= 1;
    return fl;
}

struct QuadElem;  // fwd

// Euclidean division in Z[w]: q = round(x/y) componentwise, r = x - q y, |Nr r| < |Nr y|
inline std::pair<QuadInt, QuadInt> divmod_nearest(const QuadInt& x, const QuadInt& y) {
    if (y.is_zero()) throw std::domain_error("division by zero in Z[w]");
    Int n = y.norm();
    // x * conj(y) / Nr(y)
    QuadInt xc = x * y.conj();
    Rat qa = Rat(xc.a) / Rat(n), qb = Rat(xc.b) / Rat(n);
    QuadInt q{round_nearest(qa), round_nearest(qb)};
    QuadInt r = x - q * y;
    return {q, r};
}

inline bool divides(const QuadInt& d, const QuadInt& x) {
    if (d.is_zero()) return x.is_zero();
    auto [q, r] = divmod_nearest(x, d);
    (void)q;
    return r.is_zero();
}

inline QuadInt exact_div(const QuadInt& x, const QuadInt& d) {
    auto [q, r] = divmod_nearest(x, d);
    if (!r.is_zero()) throw std::domain_error("non-exact division in Z[w]");
    return q;
}

inline QuadInt quad_gcd(QuadInt x, QuadInt y) {
    while (!y.is_zero()) {
        auto [q, r] = divmod_nearest(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

// element of Q(sqrt 5) as QuadInt / positive integer denominator, reduced
struct QuadElem {
    QuadInt n;
    Int d{1};

    QuadElem() = default;
    QuadElem(QuadInt n_, Int d_ = 1) : n(std::move(n_)), d(std::move(d_)) { reduce(); }
    QuadElem(long v) : n(v), d(1) {}
    QuadElem(const Rat& r) : n(QuadInt{num(r), 0}), d(den(r)) {}

    void reduce() {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { d = -d; n = -n; }
        Int g = igcd(igcd(n.a < 0 ? Int(-n.a) : n.a, n.b < 0 ? Int(-n.b) : n.b), d);
        if (g > 1) { n.a /= g; n.b /= g; d /= g; }
    }

    bool operator==(const QuadElem& o) const { return n == o.n && d == o.d; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }
    bool is_zero() const { return n.is_zero(); }
    bool is_integral() const { return d == 1; }

    QuadElem operator+(const QuadElem& o) const {
        return QuadElem(QuadInt{n.a * o.d + o.n.a * d, n.b * o.d + o.n.b * d}, d * o.d);
    }
    QuadElem operator-(const QuadElem& o) const {
        return QuadElem(QuadInt{n.a * o.d - o.n.a * d, n.b * o.d - o.n.b * d}, d * o.d);
    }
    QuadElem operator-() const { return QuadElem(-n, d); }
    QuadElem operator*(const QuadElem& o) const { return QuadElem(n * o.n, d * o.d); }
    QuadElem& operator+=(const QuadElem& o) { *this = *this + o; return *this; }
    QuadElem& operator-=(const QuadElem& o) { *this = *this - o; return *this; }
    QuadElem& operator*=(const QuadElem& o) { *this = *this * o; return *this; }

    QuadElem inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Int nr = n.norm();  // may be negative
        QuadInt c = n.conj();
        // 1/x = conj(x)/Nr(x); result = d*conj(n) / Nr(n)
        return QuadElem(QuadInt{c.a * d, c.b * d}, 1) * QuadElem(QuadInt{1, 0}, nr < 0 ? Int(-nr) : nr) *
               QuadElem(QuadInt{nr < 0 ? -1 : 1, 0}, 1);
    }
    QuadElem operator/(const QuadElem& o) const { return *this * o.inv(); }

    QuadElem conj() const { return QuadElem(n.conj(), d); }
    Rat norm() const { return Rat(n.norm()) / Rat(d * d); }
    Rat trace() const { return Rat(n.trace()) / Rat(d); }
    int sign_emb1() const { return n.sign_emb1(); }
    int sign_emb2() const { return n.sign_emb2(); }
    bool totally_positive() const { return sign_emb1() > 0 && sign_emb2() > 0; }

    // rational part decomposition x = ra + rb * w
    Rat ra() const { return Rat(n.a) / Rat(d); }
    Rat rb() const { return Rat(n.b) / Rat(d); }

    double emb(int which) const {
        double sq5 = 2.2360679774997896964;
        double wv = which == 1 ? (1 + sq5) / 2 : (1 - sq5) / 2;
        return static_cast<double>(ra()) + static_cast<double>(rb()) * wv;
    }
};

inline QuadElem inv_of(const QuadElem& x) { return x.inv(); }

inline QuadElem quad_from_parts(const Rat& x, const Rat& y) {
    // x + y w
    Int dd = den(x) * den(y) / igcd(den(x), den(y));
    return QuadElem(QuadInt{num(x) * (dd / den(x)), num(y) * (dd / den(y))}, dd);
}

inline QuadElem qw(long a_num, long a_den, long b_num, long b_den) {
    return quad_from_parts(Rat(a_num) / a_den, Rat(b_num) / b_den);
}

// serialization "a/d+b/d*w" with signs; omits zero parts except plain "0"
inline std::string to_string(const QuadElem& x) {
    auto rat_str = [](const Rat& r) {
        std::ostringstream os;
        os << num(r);
        if (den(r) != 1) os << "/" << den(r);
        return os.str();
    };
    Rat A = x.ra(), B = x.rb();
    if (B == 0) return rat_str(A);
    std::string s;
    if (A != 0) s = rat_str(A);
    if (B > 0 && !s.empty()) s += "+";
    if (B == -1) s += "-";
    else if (B != 1) s += rat_str(B), s += "*";
    s += "w";
    return s;
}

inline std::string to_string(const QuadInt& x) { return to_string(QuadElem(x)); }

inline std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << to_string(x); }

// parse "a", "a+b*w", "b*w", "a/d-b/d*w", "w", "-w"
inline QuadElem parse_quad(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("cannot parse Q(sqrt5) element: " + s); };
    std::string t;
    for (char c : s) if (!isspace((unsigned char)c)) t += c;
    if (t.empty()) fail();
    // split into terms at +/- not at start
    std::vector<std::string> terms;
    size_t start = 0;
    for (size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '*' && t[i - 1] != '+' && t[i - 1] != '-') {
            terms.push_back(t.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(t.substr(start));
    Rat A = 0, B = 0;
    for (auto& term : terms) {
        bool has_w = term.find('w') != std::string::npos;
        std::string body = term;
        if (has_w) {
            size_t wp = body.find('w');
            body.erase(wp, 1);
            if (!body.empty() && body.back() == '*') body.pop_back();
            if (body.empty() || body == "+") body = "1";
            else if (body == "-") body = "-1";
        }
        if (!body.empty() && body.front() == '+') body.erase(0, 1);
        Rat v;
        try {
            v = Rat(body);
        } catch (...) {
            fail();
        }
        if (has_w) B += v;
        else A += v;
    }
    return quad_from_parts(A, B);
}

// canonical totally positive generator of the ideal (x)
inline QuadInt canonical_tp_generator(const QuadInt& x) { return normalize_tp(x); }

// [OP] quad_norm_trace_conj
struct NormTraceConj {
    Rat norm;
    Rat trace;
    QuadElem conj;
};
inline NormTraceConj quad_norm_trace_conj(const QuadElem& x) {
    return {x.norm(), x.trace(), x.conj()};
}

// [OP] tp_enumerate: all totally positive a+bw with 1 <= a <= a_max, lex by (a,b)
inline std::vector<QuadInt> tp_enumerate(long a_max) {
    if (a_max < 1) throw std::domain_error("tp_enumerate: a_max >= 1 required");
    std::vector<QuadInt> out;
    for (long a = 1; a <= a_max; ++a) {
        // -a/w < b < a w, i.e. roughly -0.62 a < b < 1.62 a; pad and test exactly
        long lo = -(2 * a) / 3 - 2, hi = (2 * a) + 2;
        for (long b = lo; b <= hi; ++b) {
            QuadInt x{a, b};
            if (x.totally_positive()) out.push_back(x);
        }
    }
    return out;
}

}  // namespace quintic
