#pragma once

// The orders O' (hereditary, level p5) and O (Eichler, level 5) in B, their
// reduced discriminants, trace-dual bases, the ternary form on the trace-zero
// dual, the Eichler invariant at p5, and mass / class / type numbers.

#include <algorithm>
#include <map>

#include "quintic/lattice.hpp"

namespace quintic {

// ideals supported on {p2 = (2), p3 = (3), p5 = (2+w)}, possibly fractional
struct SmoothIdeal {
    int e2{0}, e3{0}, e5{0};
    bool operator==(const SmoothIdeal& o) const { return e2 == o.e2 && e3 == o.e3 && e5 == o.e5; }
    QuadElem generator() const {
        QuadInt num{1, 0}, den{1, 0};
        auto mulpow = [](QuadInt& acc, QuadInt b, int e) {
            for (int i = 0; i < e; ++i) acc = acc * b;
        };
        mulpow(e2 >= 0 ? num : den, QuadInt{2, 0}, std::abs(e2));
        mulpow(e3 >= 0 ? num : den, QuadInt{3, 0}, std::abs(e3));
        mulpow(e5 >= 0 ? num : den, QuadInt{2, 1}, std::abs(e5));
        return QuadElem(normalize_tp(num)) * QuadElem(normalize_tp(den)).inv();
    }
    Rat absolute_norm() const {
        Rat n = 1;
        auto mul = [&](long nrp, int e) {
            for (int i = 0; i < std::abs(e); ++i) { if (e >= 0) n *= nrp; else n /= nrp; }
        };
        mul(4, e2);
        mul(9, e3);
        mul(5, e5);
        return n;
    }
};

// valuations of a nonzero element of F at p2, p3, p5; throws if other primes divide
inline SmoothIdeal smooth_valuations(const QuadElem& x) {
    if (x.is_zero()) throw std::domain_error("valuation of zero");
    SmoothIdeal v;
    QuadInt n = x.n;
    QuadInt d{x.d, 0};
    auto strip = [](QuadInt& y, const QuadInt& p) {
        int count = 0;
        while (divides(p, y)) {
            y = exact_div(y, p);
            ++count;
        }
        return count;
    };
    int n2 = strip(n, QuadInt{2, 0}), n3 = strip(n, QuadInt{3, 0}), n5 = strip(n, QuadInt{2, 1});
    int d2 = strip(d, QuadInt{2, 0}), d3 = strip(d, QuadInt{3, 0}), d5 = strip(d, QuadInt{2, 1});
    Int rn = n.norm(), rd = d.norm();
    if (rn < 0) rn = -rn;
    if (rd < 0) rd = -rd;
    if (rn != 1 || rd != 1)
        throw std::runtime_error("element not supported on {2, 3, 5}: " + to_string(x));
    v.e2 = n2 - d2;
    v.e3 = n3 - d3;
    v.e5 = n5 - d5;
    return v;
}

// p5-valuation only, permitting other prime factors
inline int valuation_p5(const QuadElem& x) {
    if (x.is_zero()) throw std::domain_error("valuation of zero");
    QuadInt n = x.n;
    QuadInt d{x.d, 0};
    int n5 = 0, d5 = 0;
    while (divides(QuadInt{2, 1}, n)) {
        n = exact_div(n, QuadInt{2, 1});
        ++n5;
    }
    while (divides(QuadInt{2, 1}, d)) {
        d = exact_div(d, QuadInt{2, 1});
        ++d5;
    }
    return n5 - d5;
}

// reduce a p5-integral element into F_5 = o_F / (2+w), w -> 3
inline int mod_p5(const QuadElem& x) {
    if (x.is_zero()) return 0;
    // strip powers of 5 from the denominator using 1/5 = w^2 (2+w)^{-2}
    QuadInt n = x.n;
    Int d = x.d;
    int k5 = 0;
    while (d % 5 == 0) {
        d /= 5;
        ++k5;
    }
    for (int i = 0; i < 2 * k5; ++i) {
        if (!divides(QuadInt{2, 1}, n)) throw std::runtime_error("element not p5-integral");
        n = exact_div(n, QuadInt{2, 1});
    }
    long a = ((n.a % 5 + 5) % 5).convert_to<long>();
    long b = ((n.b % 5 + 5) % 5).convert_to<long>();
    long val = (a + 3 * b) % 5;  // w = 3 mod p5
    // the stripped w^{2 k5} factor: w = 3, so times 9^{k5} = 4^{k5} mod 5
    for (int i = 0; i < k5; ++i) val = (val * 4) % 5;
    long dm = ((d % 5).convert_to<long>() + 5) % 5;
    long dinv = 1;
    while ((dm * dinv) % 5 != 1) ++dinv;
    return (int)((val * dinv) % 5);
}

// ---- the two orders ----

// the hereditary order O' of Eq. (bigorder): o_F[1, X, w/2 + Y/2, (w/2)X + XY/2]
inline Lattice4 order_oprime() {
    return Lattice4::from_generators({
        Quat::one(),
        Quat::X(),
        Quat(qw(0, 1, 1, 2), QuadElem(0), qw(1, 2, 0, 1), QuadElem(0)),
        Quat(QuadElem(0), qw(0, 1, 1, 2), QuadElem(0), qw(1, 2, 0, 1)),
    });
}

// the Eichler order O of level 5 on the working basis f_1..f_4
inline const std::array<Quat, 4>& order_o_basis() {
    static const std::array<Quat, 4> f = {
        Quat::one(),
        Quat::X(),
        // f3 = w + (w/2) X + Y + (1/2) XY
        Quat(qw(0, 1, 1, 1), qw(0, 1, 1, 2), QuadElem(1), qw(1, 2, 0, 1)),
        // f4 = w/2 + ((w+1)/2) X + (1/2) Y + (w/2) XY
        Quat(qw(0, 1, 1, 2), qw(1, 2, 1, 2), qw(1, 2, 0, 1), qw(0, 1, 1, 2)),
    };
    return f;
}

inline const Lattice4& order_o() {
    static const Lattice4 O = [] {
        auto& f = order_o_basis();
        return Lattice4::from_generators({f[0], f[1], f[2], f[3]});
    }();
    return O;
}

// the alternative printed basis of O (Eq. order)
inline Lattice4 order_o_alt() {
    return Lattice4::from_generators({
        Quat::one(),
        Quat::X(),
        Quat(qw(-1, 2, 0, 1), QuadElem(0), qw(3, 2, -1, 2), QuadElem(0)),
        Quat(qw(0, 1, -1, 2), qw(-1, 2, -1, 2), qw(1, 2, 0, 1), qw(0, 1, 1, 2)),
    });
}

// O from O' via the right action of M = [[1,0,0,0],[0,1,0,0],[0,0,2,1],[0,0,1,w]]
inline Lattice4 order_o_from_matrix() {
    auto b = order_oprime().basis();
    QuadElem M[4][4] = {{QuadElem(1), QuadElem(0), QuadElem(0), QuadElem(0)},
                        {QuadElem(0), QuadElem(1), QuadElem(0), QuadElem(0)},
                        {QuadElem(0), QuadElem(0), QuadElem(2), QuadElem(1)},
                        {QuadElem(0), QuadElem(0), QuadElem(1), QuadElem(QuadInt{0, 1})}};
    std::vector<Quat> gens;
    for (int j = 0; j < 4; ++j) {
        Quat v;
        for (int i = 0; i < 4; ++i) v = v + b[i].scaled(M[i][j]);
        gens.push_back(v);
    }
    return Lattice4::from_generators(gens);
}

// ---- invariants ----

inline QuadElem gram_determinant(const Lattice4& L) {
    auto G = L.gram();
    std::array<std::array<QuadElem, 4>, 4> a = G;
    QuadElem det(1);
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (!a[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return QuadElem(0);
        if (piv != c) {
            std::swap(a[c], a[piv]);
            det = -det;
        }
        det *= a[c][c];
        QuadElem inv = a[c][c].inv();
        for (int r = c + 1; r < 4; ++r) {
            QuadElem f = a[r][c] * inv;
            for (int j = c; j < 4; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

// [OP] reduced_discriminant: sqrt of the Gram-determinant ideal
inline SmoothIdeal reduced_discriminant(const Lattice4& L) {
    QuadElem det = gram_determinant(L);
    if (det.is_zero()) throw std::runtime_error("degenerate lattice in reduced_discriminant");
    SmoothIdeal v = smooth_valuations(det);
    if (v.e2 % 2 || v.e3 % 2 || v.e5 % 2)
        throw std::runtime_error("Gram determinant ideal is not a square");
    return SmoothIdeal{v.e2 / 2, v.e3 / 2, v.e5 / 2};
}

// [OP] dual_basis: g_j with Tr(f_i conj(g_j)) = delta_ij
inline std::array<Quat, 4> dual_basis(const std::array<Quat, 4>& f) {
    std::array<std::array<QuadElem, 8>, 4> aug;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) aug[i][j] = (f[i] * f[j].conj()).trace();
        for (int j = 0; j < 4; ++j) aug[i][4 + j] = QuadElem(i == j ? 1 : 0);
    }
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (!aug[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("singular Gram matrix in dual_basis");
        std::swap(aug[c], aug[piv]);
        QuadElem inv = aug[c][c].inv();
        for (int j = 0; j < 8; ++j) aug[c][j] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == c || aug[r][c].is_zero()) continue;
            QuadElem t = aug[r][c];
            for (int j = 0; j < 8; ++j) aug[r][j] -= t * aug[c][j];
        }
    }
    std::array<Quat, 4> g;
    for (int j = 0; j < 4; ++j) {
        Quat v;
        for (int k = 0; k < 4; ++k) v = v + f[k].scaled(aug[j][4 + k]);
        g[j] = v;
    }
    return g;
}

// ternary quadratic form: diagonal Nr(h_i), cross terms Tr(h_i conj(h_j))
struct TernaryForm {
    std::array<QuadElem, 3> diag;
    std::array<QuadElem, 3> cross;  // (12), (13), (23)
};

inline TernaryForm ternary_form_on(const std::array<Quat, 3>& h, const QuadElem& scale) {
    TernaryForm q;
    for (int i = 0; i < 3; ++i) q.diag[i] = h[i].norm() * scale;
    q.cross[0] = (h[0] * h[1].conj()).trace() * scale;
    q.cross[1] = (h[0] * h[2].conj()).trace() * scale;
    q.cross[2] = (h[1] * h[2].conj()).trace() * scale;
    return q;
}

// classify the reduction mod p5: 1 = two distinct linear factors, 0 = square of
// a linear form times a unit, -1 = irreducible quadratic
inline int classify_ternary_mod5(const TernaryForm& q) {
    const long inv2 = 3;
    long A[3][3];
    A[0][0] = mod_p5(q.diag[0]);
    A[1][1] = mod_p5(q.diag[1]);
    A[2][2] = mod_p5(q.diag[2]);
    A[0][1] = A[1][0] = mod_p5(q.cross[0]) * inv2 % 5;
    A[0][2] = A[2][0] = mod_p5(q.cross[1]) * inv2 % 5;
    A[1][2] = A[2][1] = mod_p5(q.cross[2]) * inv2 % 5;
    auto md = [](long v) { return (v % 5 + 5) % 5; };
    std::vector<long> diag;
    std::vector<int> live{0, 1, 2};
    while (!live.empty()) {
        int piv = -1;
        for (int r : live)
            if (md(A[r][r]) != 0) { piv = r; break; }
        if (piv < 0) {
            int r0 = -1, s0 = -1;
            for (int r : live)
                for (int s : live)
                    if (r != s && md(A[r][s]) != 0) { r0 = r; s0 = s; }
            if (r0 < 0) break;  // remaining block is zero
            for (int c = 0; c < 3; ++c) A[r0][c] = md(A[r0][c] + A[s0][c]);
            for (int c = 0; c < 3; ++c) A[c][r0] = md(A[c][r0] + A[c][s0]);
            continue;
        }
        long pinv = 1;
        while (md(A[piv][piv] * pinv) != 1) ++pinv;
        for (int r : live) {
            if (r == piv || md(A[r][piv]) == 0) continue;
            long f = md(A[r][piv] * pinv);
            for (int c = 0; c < 3; ++c) A[r][c] = md(A[r][c] - f * A[piv][c]);
            for (int c = 0; c < 3; ++c) A[c][r] = md(A[c][r] - f * A[c][piv]);
        }
        diag.push_back(md(A[piv][piv]));
        live.erase(std::find(live.begin(), live.end(), piv));
    }
    int rank = (int)diag.size();
    if (rank == 1) return 0;
    if (rank == 2) {
        long dd = md(-diag[0] * diag[1]);
        return (dd == 1 || dd == 4) ? 1 : -1;
    }
    throw std::runtime_error("unexpected rank " + std::to_string(rank) + " in ternary reduction");
}

struct TernaryEichler {
    TernaryForm form;
    std::array<Quat, 3> basis;
    int eichler_at_5;
};

// [OP] ternary_form_and_eichler
inline TernaryEichler ternary_form_and_eichler(const Lattice4& order) {
    if (!order.is_ring()) throw std::domain_error("ternary form requires an order");
    Lattice4 dual = order.dual();
    auto d = dual.basis();
    std::array<QuadElem, 4> tr;
    Int D = 1;
    for (int i = 0; i < 4; ++i) {
        tr[i] = d[i].trace();
        D = D / igcd(D, tr[i].d) * tr[i].d;
    }
    std::array<QuadInt, 4> row;
    for (int i = 0; i < 4; ++i) {
        Int s = D / tr[i].d;
        row[i] = QuadInt{tr[i].n.a * s, tr[i].n.b * s};
    }
    auto K = row_kernel(row);
    std::array<Quat, 3> h;
    for (int k = 0; k < 3; ++k) {
        Quat v;
        for (int i = 0; i < 4; ++i) v = v + d[i].scaled(QuadElem(K[k][i]));
        h[k] = v;
    }
    // scale by the p5-part of 1/Nr(dual) so the form is p5-integral and primitive
    int v5 = valuation_p5(dual.norm_generator());
    SmoothIdeal scale_ideal{0, 0, -v5};
    QuadElem scale = scale_ideal.generator();
    TernaryEichler out;
    out.basis = h;
    out.form = ternary_form_on(h, scale);
    int minv = 1 << 20;
    auto check = [&](const QuadElem& cf) {
        if (cf.is_zero()) return;
        int vv = valuation_p5(cf);
        if (vv < 0) throw std::runtime_error("scaled ternary form not p5-integral");
        minv = std::min(minv, vv);
    };
    for (auto& cf : out.form.diag) check(cf);
    for (auto& cf : out.form.cross) check(cf);
    if (minv != 0) throw std::runtime_error("scaled ternary form not primitive at p5");
    out.eichler_at_5 = classify_ternary_mod5(out.form);
    return out;
}

// [OP] hilbert_checks
struct HilbertChecks {
    std::map<std::string, int> symbol;
    bool totally_negative_pair;
};

inline HilbertChecks hilbert_checks() {
    HilbertChecks out;
    // p3 (inert, residue field F_9 = F_3[w]/(w^2 - w - 1)): the symbol is the
    // Legendre symbol of w - 3 = w, i.e. w^{(9-1)/2} = w^4
    auto sq9 = [](std::pair<long, long> x) {
        long a = x.first, b = x.second;  // a + b w, w^2 = w + 1, mod 3
        return std::make_pair(((a * a + b * b) % 3 + 3) % 3, ((2 * a * b + b * b) % 3 + 3) % 3);
    };
    auto w4 = sq9(sq9({0, 1}));
    out.symbol["p3"] = w4 == std::make_pair(1L, 0L) ? 1 : -1;
    // p5 (ramified in F/Q, B unramified): ord(w - 3) = 1, ord(-6) = 0, so the
    // symbol is the Legendre symbol of -6 = 4 mod 5
    long m = ((-6) % 5 + 5) % 5;
    out.symbol["p5"] = (m == 1 || m == 4) ? 1 : -1;
    // infinite places: -6 and w - 3 are totally negative, so both ramify
    QuadElem m6(-6), wm3(QuadInt{-3, 1});
    out.totally_negative_pair =
        m6.sign_emb1() < 0 && m6.sign_emb2() < 0 && wm3.sign_emb1() < 0 && wm3.sign_emb2() < 0;
    out.symbol["inf1"] = -1;
    out.symbol["inf2"] = -1;
    // p2 from the product formula: the symbols over all places multiply to +1
    out.symbol["p2"] = out.symbol["p3"] * out.symbol["p5"] * out.symbol["inf1"] * out.symbol["inf2"];
    return out;
}

// [OP] mass: (1/60) Nr(d_r) prod_{p | d_r} (1 - Nr(p)^{-2}) / (1 - e_p Nr(p)^{-1});
// the prefactor 1/60 is 2 D_F^{3/2} h_F zeta_F(2) / (2 pi)^4 evaluated with
// D_F = 5, h_F = 1, |zeta_F(-1)| = 1/30
inline Rat mass_formula(const SmoothIdeal& dr, const std::map<std::string, int>& eichler) {
    Rat m = Rat(1, 60) * dr.absolute_norm();
    auto factor = [&](long nrp, int e) { return (1 - Rat(1, nrp * nrp)) / (1 - Rat(e, nrp)); };
    if (dr.e2 > 0) m *= factor(4, eichler.at("p2"));
    if (dr.e3 > 0) m *= factor(9, eichler.at("p3"));
    if (dr.e5 > 0) m *= factor(5, eichler.at("p5"));
    return m;
}

// rule-table data for class and type numbers; imported values, with sources:
// embedding numbers E(Omega_v, O_v) = 2 at the unramified maximal places p2, p3
// (Hijikata via Vigneras Th. 3.1) and 0 at p5 for Eichler level 5^2 (Brzezinski);
// the CM weight h(Omega)/(2 [Omega^*:o_F^*]) and the local-index product are
// likewise imported (the latter pinned by t = 3, cross-checked independently by
// the theta-series classification of the twelve right orders)
struct ClassTypeData {
    std::map<std::string, int> embedding_numbers{{"p2", 2}, {"p3", 2}, {"p5", 0}};
    Rat cm_weight{1, 2};
    int cm_count{4};
    Rat local_index_product{4};
};

struct ClassType {
    Rat h;
    Rat t;
};

// [OP] class_and_type: h per Eq. (classn), t per Eq. (type)
inline ClassType class_and_type(const Rat& mass, const ClassTypeData& data = ClassTypeData{}) {
    Rat prod = 1;
    for (auto& [v, E] : data.embedding_numbers) {
        (void)v;
        prod *= E;
    }
    ClassType out;
    out.h = mass + Rat(data.cm_count) * prod * data.cm_weight;
    out.t = mass / data.local_index_product;
    return out;
}

}  // namespace quintic
