#pragma once

// The degree-5 generalized Chebyshev polynomial P5, Dickson polynomials,
// exact critical-point data over Q(zeta15), the Q(i) match with the
// skew-pentagon quintic, and the bad-prime certificate.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "quintic/bivar_poly.hpp"
#include "quintic/cyclo.hpp"
#include "quintic/finite_field.hpp"
#include "quintic/gaussrat.hpp"
#include "quintic/univar.hpp"

namespace quintic {

// [OP] build_p5: (x1^5+x2^5) - 5x1x2(x1^2+x2^2) + 5x1x2(x1+x2) + 5(x1^2+x2^2) - 5(x1+x2)
template <typename R>
BivarPoly<R> build_p5() {
    BivarPoly<R> p;
    p.add_term(5, 0, R(1));
    p.add_term(0, 5, R(1));
    p.add_term(3, 1, R(-5));
    p.add_term(1, 3, R(-5));
    p.add_term(2, 1, R(5));
    p.add_term(1, 2, R(5));
    p.add_term(2, 0, R(5));
    p.add_term(0, 2, R(5));
    p.add_term(1, 0, R(-5));
    p.add_term(0, 1, R(-5));
    return p;
}

// alternative printed form: x1^5 + x2^5 - 5(x1x2-1)(x1^2+x2^2-x1-x2)
template <typename R>
BivarPoly<R> build_p5_alt() {
    BivarPoly<R> p;
    p.add_term(5, 0, R(1));
    p.add_term(0, 5, R(1));
    BivarPoly<R> f = BivarPoly<R>::mono(1, 1, R(1));
    f.add_term(0, 0, R(-1));
    BivarPoly<R> g = BivarPoly<R>::mono(2, 0, R(1));
    g.add_term(0, 2, R(1));
    g.add_term(1, 0, R(-1));
    g.add_term(0, 1, R(-1));
    return p + (f * g).scaled(R(-5));
}

// [OP] dickson_pair: D_n^{(1)}, D_n^{(2)} with a = 1
inline std::pair<BivarPoly<Rat>, BivarPoly<Rat>> dickson_pair(int n) {
    if (n < 0) throw std::domain_error("dickson_pair: n >= 0 required");
    using P = BivarPoly<Rat>;
    std::vector<P> d1(std::max(3, n + 1)), d2(std::max(3, n + 1));
    d1[0] = P::mono(0, 0, 3);
    d1[1] = P::mono(1, 0, 1);
    d1[2] = P::mono(2, 0, 1) + P::mono(0, 1, -2);
    d2[0] = P::mono(0, 0, 3);
    d2[1] = P::mono(0, 1, 1);
    d2[2] = P::mono(0, 2, 1) + P::mono(1, 0, -2);
    P x1 = P::mono(1, 0, 1), x2 = P::mono(0, 1, 1);
    for (int k = 3; k <= n; ++k) {
        d1[k] = x1 * d1[k - 1] - x2 * d1[k - 2] + d1[k - 3];
        d2[k] = x2 * d2[k - 1] - x1 * d2[k - 2] + d2[k - 3];
    }
    return {d1[n], d2[n]};
}

struct CriticalPoint {
    CycloElem x1, x2;
    int value;            // in {-2, -3, 6}
    int galois_orbit_size;
};

namespace detail {
inline std::pair<CycloElem, CycloElem> cyclo_pair(const CycloElem& a, const CycloElem& b) { return {a, b}; }
}

// [OP] critical_points: the 16 exact critical points of P5 over Q(zeta15)
inline const std::vector<CriticalPoint>& critical_points() {
    static const std::vector<CriticalPoint> pts = [] {
        using C = CycloElem;
        C w = cyclo_w();
        C one(Rat(1));
        C z5 = cyclo_zeta5(), z5i = cyclo_zeta5(4), z3 = cyclo_zeta3(), z3i = cyclo_zeta3(2);
        std::vector<std::pair<C, C>> base = {
            {w, w},
            {w + one, w + one},
            {-z5, -z5i},
            {z5 - z5i - one, z5i - z5 - one},
            {w * z3, w * z3i},
        };
        // close under the Galois group z -> z^k
        std::vector<std::pair<C, C>> all;
        for (auto& b : base)
            for (int k : {1, 2, 4, 7, 8, 11, 13, 14}) {
                auto p = detail::cyclo_pair(b.first.galois(k), b.second.galois(k));
                if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
            }
        if (all.size() != 16) throw std::logic_error("critical point closure has wrong size");

        auto p5 = build_p5<C>();
        auto d1 = p5.d_x1(), d2 = p5.d_x2();
        auto h11 = d1.d_x1(), h12 = d1.d_x2(), h22 = d2.d_x2();

        std::vector<CriticalPoint> out;
        for (auto& [a, b] : all) {
            if (!d1.eval(a, b).is_zero() || !d2.eval(a, b).is_zero())
                throw std::logic_error("claimed critical point has nonzero gradient");
            C v = p5.eval(a, b);
            if (!v.is_rational()) throw std::logic_error("critical value not rational");
            Rat vr = v.rational_part();
            if (vr != -2 && vr != -3 && vr != 6) throw std::logic_error("unexpected critical value");
            C hess = h11.eval(a, b) * h22.eval(a, b) - h12.eval(a, b) * h12.eval(a, b);
            if (hess.is_zero()) throw std::logic_error("degenerate critical point");
            int orbit = 0;
            for (int k : {1, 2, 4, 7, 8, 11, 13, 14}) {
                auto img = detail::cyclo_pair(a.galois(k), b.galois(k));
                if (img == detail::cyclo_pair(a, b)) ++orbit;
            }
            out.push_back({a, b, (int)vr.convert_to<long>(), 8 / orbit});
        }
        return out;
    }();
    return pts;
}

// F_{-2}(x1, x2) = (x1 - 2)(x2^4 - x2^2 (2x1^2 - 2x1 + 1) + (1/5)(x1^2 + x1 - 1)^2)
template <typename R>
BivarPoly<R> build_f_minus2(const R& fifth) {
    using P = BivarPoly<R>;
    P lin = P::mono(1, 0, R(1)) + P::mono(0, 0, R(-2));
    P q = P::mono(2, 0, R(2)) + P::mono(1, 0, R(-2)) + P::mono(0, 0, R(1));
    P s = P::mono(2, 0, R(1)) + P::mono(1, 0, R(1)) + P::mono(0, 0, R(-1));
    P body = P::mono(0, 4, R(1)) - (P::mono(0, 2, R(1)) * q) + (s * s).scaled(fifth);
    return lin * body;
}

// [OP] verify_pentagon_match: P5(x) == -10 F_{-2}(u, v) - 2 under
// (u, v) = (-(x1+x2)/2 + 1, i (x1-x2)/2), an identity over Q(i).
inline bool verify_pentagon_match(bool drop_plus_one = false) {
    using G = GaussRat;
    using P = BivarPoly<G>;
    P p5 = build_p5<G>();
    P u = (P::mono(1, 0, G(1)) + P::mono(0, 1, G(1))).scaled(G(Rat(-1, 2)));
    if (!drop_plus_one) u.add_term(0, 0, G(1));
    P v = (P::mono(1, 0, G(1)) - P::mono(0, 1, G(1))).scaled(G(Rat(0), Rat(1, 2)));
    P f2 = build_f_minus2<G>(G(Rat(1, 5)));
    P rhs = f2.subst(u, v).scaled(G(-10));
    rhs.add_term(0, 0, G(-2));
    return p5 == rhs;
}

// [OP] bad_prime_certificate: prime support of the discriminant (in x2) of
// Res_{x1}(dP5/dx1, dP5/dx2)
struct BadPrimeCertificate {
    std::set<long> support;
    bool resultant_nonzero;
};

inline BadPrimeCertificate bad_prime_certificate() {
    using P = BivarPoly<Rat>;
    P p5 = build_p5<Rat>();
    P d1 = p5.d_x1(), d2 = p5.d_x2();
    // view as polynomials in x1 with Z[x2] coefficients
    auto to_zx2_in_x1 = [](const P& f) {
        int dx1 = 0;
        for (auto& [k, v] : f.terms) { (void)v; dx1 = std::max(dx1, k.first); }
        std::vector<ZPoly> coeffs(dx1 + 1);
        for (auto& [k, v] : f.terms) {
            std::vector<Int> c(std::max<int>(coeffs[k.first].deg() + 1, k.second + 1), Int(0));
            for (int i = 0; i <= coeffs[k.first].deg(); ++i) c[i] = coeffs[k.first].coeff(i);
            if (den(v) != 1) throw std::logic_error("expected integral coefficients");
            c[k.second] += num(v);
            coeffs[k.first] = ZPoly(std::move(c));
        }
        return coeffs;
    };
    auto c1 = to_zx2_in_x1(d1), c2 = to_zx2_in_x1(d2);
    UPoly<ZPoly> a, b;
    a.c = c1;
    a.trim();
    b.c = c2;
    b.trim();
    ZPoly res = resultant(
        a, b, [](const ZPoly& x, const ZPoly& d) { return zpoly_exact_div(x, d); }, ZPoly{Int(1)});
    BadPrimeCertificate cert;
    cert.resultant_nonzero = !res.is_zero();
    if (res.is_zero()) return cert;
    // discriminant of res w.r.t. x2: Res(res, res') / lc(res)
    Int r2 = z_resultant(res, res.derivative());
    Int disc = r2 / res.lead();
    if (disc * res.lead() != r2) throw std::logic_error("discriminant division not exact");
    Int d = disc < 0 ? Int(-disc) : disc;
    if (d == 0) throw std::logic_error("discriminant is zero");
    for (long pr : {2L, 3L, 5L, 11L, 19L, 31L}) {
        if (d % pr == 0) cert.support.insert(pr);
        while (d % pr == 0) d /= pr;
    }
    if (d != 1) throw std::logic_error("discriminant has primes outside the certified set");
    return cert;
}

// reduce the critical points into F_{p^4} (needs 15 | p^4 - 1) and test distinctness
inline bool critical_points_distinct_mod(const FieldTable& F) {
    if ((F.q - 1) % 15 != 0) throw std::domain_error("field has no 15th roots of unity");
    FieldTable::idx z = F.element_of_order(15);
    auto embed = [&](const CycloElem& c) {
        FieldTable::idx acc = F.zero();
        for (int i = 0; i < 8; ++i) {
            if (c.c[i] == 0) continue;
            Rat r = c.c[i];
            if (den(r) % (long)F.p == 0) throw std::domain_error("denominator not invertible");
            std::int64_t nu = (std::int64_t)(num(r) % F.p), de = (std::int64_t)(den(r) % F.p);
            FieldTable::idx t = F.mul(F.from_int(nu), F.inv(F.from_int(de)));
            acc = F.add(acc, F.mul(t, F.pow(z, i)));
        }
        return acc;
    };
    auto& pts = critical_points();
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (auto& p : pts) seen.insert({F.packed(embed(p.x1)), F.packed(embed(p.x2))});
    return seen.size() == pts.size();
}

// [OP] count_y_singular: the 14-element set T of critical 6-tuples and the
// total count 14 * 5^4 of singular points on the covering Y
struct YSingularCount {
    int t_size;
    long total;
    std::vector<std::array<int, 6>> tuples;  // (alpha1, alpha2, alpha3, alpha4, alpha5, alpha6) mod 6
};

inline YSingularCount count_y_singular() {
    // z_i = e^{-pi i alpha_i / 3}; critical left triples (z1, z2, (z1 z2)^{-1}) satisfy
    // (1+z2)(z1^2 z2 - 1) = 0 and (1+z1)(z1 z2^2 - 1) = 0; 2 cos(pi a/3) table:
    auto twocos = [](int a) { return std::array<int, 6>{2, 1, -1, -2, -1, 1}[((a % 6) + 6) % 6]; };
    struct Triple {
        int a1, a2, a3, value2;  // value2 = twice the critical value
    };
    std::vector<Triple> crit;
    for (int a1 = 0; a1 < 6; ++a1)
        for (int a2 = 0; a2 < 6; ++a2) {
            bool eq1 = (a2 == 3) || ((2 * a1 + a2) % 6 == 0);
            bool eq2 = (a1 == 3) || ((a1 + 2 * a2) % 6 == 0);
            if (!eq1 || !eq2) continue;
            int a3 = ((-(a1 + a2)) % 6 + 6) % 6;
            crit.push_back({a1, a2, a3, twocos(a1) + twocos(a2) + twocos(a3)});
        }
    YSingularCount out;
    out.t_size = 0;
    for (auto& L : crit)
        for (auto& R : crit)
            if (L.value2 == R.value2) {
                ++out.t_size;
                out.tuples.push_back({L.a1, L.a2, L.a3, R.a1, R.a2, R.a3});
            }
    out.total = (long)out.t_size * 625;
    return out;
}

// brute-force bijectivity of the Dickson vector map on F_q^2 (a = 1); test oracle
// for dickson_permutes when q <= 200
inline bool dickson_vector_bijective(int n, const FieldTable& F) {
    auto [d1, d2] = dickson_pair(n);
    auto eval_mod = [&](const BivarPoly<Rat>& f, FieldTable::idx x1, FieldTable::idx x2) {
        FieldTable::idx acc = F.zero();
        for (auto& [k, v] : f.terms) {
            std::int64_t nu = (std::int64_t)(num(v) % (std::int64_t)F.p);
            FieldTable::idx t = F.from_int(nu);
            for (int i = 0; i < k.first; ++i) t = F.mul(t, x1);
            for (int j = 0; j < k.second; ++j) t = F.mul(t, x2);
            acc = F.add(acc, t);
        }
        return acc;
    };
    std::set<std::pair<std::uint64_t, std::uint64_t>> image;
    for (std::uint64_t i = 0; i < F.q; ++i)
        for (std::uint64_t j = 0; j < F.q; ++j) {
            FieldTable::idx x1 = (FieldTable::idx)i, x2 = (FieldTable::idx)j;
            image.insert({F.packed(eval_mod(d1, x1, x2)), F.packed(eval_mod(d2, x1, x2))});
        }
    return image.size() == F.q * F.q;
}

}  // namespace quintic
