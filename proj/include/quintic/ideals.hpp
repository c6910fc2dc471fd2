#pragma once

// The twelve left-O-ideal classes, their right orders, the Z^8 norm forms,
// exact lattice-point enumeration, theta tables, and the class/type partition.

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "quintic/quatorder.hpp"

namespace quintic {

// the five quadratic generators alpha_i in the f-basis of O
inline std::array<Quat, 5> ideal_alphas() {
    auto& f = order_o_basis();
    auto comb = [&](QuadInt c1, QuadInt c2, QuadInt c3, QuadInt c4) {
        return f[0].scaled(QuadElem(c1)) + f[1].scaled(QuadElem(c2)) + f[2].scaled(QuadElem(c3)) +
               f[3].scaled(QuadElem(c4));
    };
    return {
        f[1],                                                          // alpha_1 = X
        comb({0, 0}, {1, 0}, {3, 0}, {-1, 0}),                         // f2 + 3 f3 - f4
        comb({2, -1}, {-1, 0}, {-1, -1}, {0, 1}),                      // (2-w)f1 - f2 - (w+1)f3 + w f4
        comb({0, 0}, {-1, 0}, {-2, -1}, {-1, 2}),                      // -f2 - (w+2)f3 + (2w-1)f4
        comb({-2, -5}, {0, 0}, {2, 4}, {1, -4}),                       // -(5w+2)f1 + 2(2w+1)f3 + (1-4w)f4
    };
}

struct LeftIdeal {
    Lattice4 lattice;
    QuadElem norm_gen;  // canonical totally positive generator of Nr(I)
};

// [OP] ideal_from_generators: I_i = O (a_i + w b_i) + O gamma_i
inline LeftIdeal make_left_ideal(const QuadElem& scalar, const Quat& gamma) {
    std::vector<Quat> gens;
    for (auto& f : order_o().basis()) {
        gens.push_back(f.scaled(scalar));
        gens.push_back(f * gamma);
    }
    LeftIdeal I;
    I.lattice = Lattice4::from_generators(gens);
    I.norm_gen = I.lattice.norm_generator();
    return I;
}

inline const std::vector<LeftIdeal>& the_twelve_ideals() {
    static const std::vector<LeftIdeal> ideals = [] {
        auto alpha = ideal_alphas();
        auto q = [](long a, long b) { return QuadElem(QuadInt{a, b}); };
        auto c = [](long v) { return Quat::one().scaled(QuadElem(v)); };
        std::vector<LeftIdeal> out;
        LeftIdeal I1;
        I1.lattice = order_o();
        I1.norm_gen = QuadElem(1);
        out.push_back(I1);
        out.push_back(make_left_ideal(q(2, 1), c(2) + alpha[0]));
        out.push_back(make_left_ideal(q(2, 0), Quat::one().scaled(q(0, 2)) + alpha[0]));
        out.push_back(make_left_ideal(q(2, 1), c(3) + alpha[0]));
        out.push_back(make_left_ideal(q(2, 1), c(-2) + alpha[1]));
        out.push_back(make_left_ideal(q(7, -2), c(16) + alpha[1]));
        out.push_back(make_left_ideal(q(9, 13), c(10) + alpha[1]));
        out.push_back(make_left_ideal(q(4, -1), c(8) + alpha[2]));
        out.push_back(make_left_ideal(q(4, -1), c(9) + alpha[2]));
        out.push_back(make_left_ideal(q(7, 0), Quat::one().scaled(q(6, 4)) + alpha[3]));
        out.push_back(make_left_ideal(q(5, 3), c(13) + alpha[4]));
        out.push_back(make_left_ideal(q(17, 0), Quat::one().scaled(q(12, 12)) + alpha[4]));
        return out;
    }();
    return ideals;
}

// [OP] ideal_ops
inline Lattice4 ideal_conj(const Lattice4& I) { return I.conjugated(); }

inline Lattice4 ideal_inverse(const LeftIdeal& I) {
    return I.lattice.conjugated().scaled(I.norm_gen.inv());
}

// right order computed both ways; fatal on mismatch
inline Lattice4 right_order_checked(const LeftIdeal& I) {
    Lattice4 a = I.lattice.right_order();
    Lattice4 b = lattice_product(I.lattice.conjugated(), I.lattice).scaled(I.norm_gen.inv());
    if (!(a == b))
        throw std::logic_error("right order mismatch between transporter and conj(I) I / Nr(I)");
    return a;
}

// ---- norm forms on Z^8 and exact enumeration ----

struct NormForm8 {
    // Nr_S(sum y_m u_m) = y^T (Q1 + Q2 w) y with u = (v_1..v_4, w v_1..w v_4)
    std::array<std::array<Rat, 8>, 8> Q1, Q2;
    std::array<Quat, 8> basis;
    QuadElem norm_gen;
    // rational Cholesky of Q1: Q1 = L^T D L with unit lower-triangular L
    std::array<Rat, 8> chol_d;
    std::array<std::array<Rat, 8>, 8> chol_l;
};

// [OP] norm_form
inline NormForm8 norm_form(const Lattice4& L, const QuadElem& norm_gen) {
    NormForm8 nf;
    nf.norm_gen = norm_gen;
    auto b = L.basis();
    QuadElem w(QuadInt{0, 1});
    for (int k = 0; k < 4; ++k) {
        nf.basis[k] = b[k];
        nf.basis[k + 4] = b[k].scaled(w);
    }
    QuadElem ninv = norm_gen.inv();
    for (int m = 0; m < 8; ++m)
        for (int n = 0; n < 8; ++n) {
            QuadElem v;
            if (m == n) v = nf.basis[m].norm() * ninv;
            else {
                QuadElem tr = (nf.basis[m] * nf.basis[n].conj()).trace() * ninv;
                v = tr * QuadElem(QuadInt{1, 0}, 2);
            }
            nf.Q1[m][n] = v.ra();
            nf.Q2[m][n] = v.rb();
        }
    // Cholesky (LDL^T with row vectors): q(y) = sum_k d_k (y_k + sum_{j>k} l_{kj} y_j)^2
    std::array<std::array<Rat, 8>, 8> A = nf.Q1;
    for (int k = 0; k < 8; ++k) {
        if (A[k][k] <= 0) throw std::runtime_error("Q1 not positive definite: wrong norm-generator sign");
        nf.chol_d[k] = A[k][k];
        for (int j = k + 1; j < 8; ++j) nf.chol_l[k][j] = A[k][j] / A[k][k];
        for (int i = k + 1; i < 8; ++i)
            for (int j = k + 1; j < 8; ++j) A[i][j] -= A[k][i] * A[k][j] / A[k][k];
    }
    return nf;
}

inline NormForm8 norm_form(const LeftIdeal& I) { return norm_form(I.lattice, I.norm_gen); }

inline Rat quadratic_value(const std::array<std::array<Rat, 8>, 8>& Q, const std::array<long, 8>& y) {
    Rat acc = 0;
    for (int i = 0; i < 8; ++i) {
        if (y[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (y[j] == 0) continue;
            acc += Q[i][j] * y[i] * y[j];
        }
    }
    return acc;
}

// [OP] enumerate_by_norm: all Y in Z^8 with Q1(Y) = xi_1 and Q2(Y) = xi_2, exactly
inline std::vector<std::array<long, 8>> enumerate_by_norm(const NormForm8& nf, const QuadElem& xi) {
    if (!xi.is_integral() && !xi.is_zero())
        throw std::domain_error("enumerate_by_norm: target must be integral");
    Rat xi1 = xi.ra(), xi2 = xi.rb();
    std::vector<std::array<long, 8>> out;
    std::array<long, 8> y{};
    // recursive descent from coordinate 7 down to 0 with exact interval bounds
    auto sqrt_upper = [](const Rat& r) {
        // rational s with s >= sqrt(r), close
        if (r <= 0) return Rat(0);
        Int a = num(r), b = den(r);
        Int m = isqrt(a * b);
        return Rat(m + 1, b);
    };
    std::function<void(int, Rat)> descend = [&](int k, Rat budget) {
        if (budget < 0) return;
        if (k < 0) {
            if (budget == 0 && quadratic_value(nf.Q2, y) == xi2) out.push_back(y);
            return;
        }
        // center offset c = sum_{j>k} l_{kj} y_j
        Rat c = 0;
        for (int j = k + 1; j < 8; ++j)
            if (y[j] != 0) c += nf.chol_l[k][j] * y[j];
        Rat rad2 = budget / nf.chol_d[k];
        Rat s = sqrt_upper(rad2);
        Rat lo_r = -c - s, hi_r = -c + s;
        long lo = (long)std::floor((double)lo_r.convert_to<double>()) - 1;
        long hi = (long)std::ceil((double)hi_r.convert_to<double>()) + 1;
        for (long v = lo; v <= hi; ++v) {
            Rat t = Rat(v) + c;
            Rat used = nf.chol_d[k] * t * t;
            if (used > budget) continue;
            y[k] = v;
            descend(k - 1, budget - used);
        }
        y[k] = 0;
    };
    descend(7, xi1);
    return out;
}

inline Quat vector_to_quat(const NormForm8& nf, const std::array<long, 8>& y) {
    Quat v;
    for (int m = 0; m < 8; ++m)
        if (y[m] != 0) v = v + nf.basis[m].scaled(QuadElem(y[m]));
    return v;
}

// [OP] theta_table: representation numbers c_xi for a list of targets
inline std::map<std::string, long> theta_table(const NormForm8& nf, const std::vector<QuadElem>& xis) {
    std::map<std::string, long> out;
    for (auto& xi : xis) out[to_string(xi)] = (long)enumerate_by_norm(nf, xi).size();
    return out;
}

// [OP] same_class: I ~ J iff conj(J) I represents Nr(I) Nr(J) (up to tp unit squares)
inline bool same_class(const LeftIdeal& I, const LeftIdeal& J) {
    Lattice4 P = lattice_product(J.lattice.conjugated(), I.lattice);
    QuadElem png = P.norm_generator();
    // Nr(P) = Nr(I) Nr(J) as ideals, so the scaled-norm target is a totally
    // positive unit square; c_xi is invariant under those, so test at 1
    QuadElem target = I.norm_gen * J.norm_gen * png.inv();
    Rat nr = target.norm();
    if (nr < 0) nr = -nr;
    if (nr != 1 || !target.totally_positive())
        throw std::logic_error("same_class: inconsistent norm generators");
    NormForm8 nf = norm_form(P, png);
    return !enumerate_by_norm(nf, QuadElem(1)).empty();
}

// ---- classification ----

struct ClassifyReport {
    int class_count;
    std::vector<int> type_of_right_order;  // bucket id per ideal index
    int type_count;
    std::vector<long> unit_counts;  // e_j = c_1(O_j)
};

// [OP] classify_all
inline ClassifyReport classify_all() {
    auto& ideals = the_twelve_ideals();
    ClassifyReport rep;
    // pairwise class tests
    int classes = 0;
    std::vector<int> cls(ideals.size(), -1);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = classes++;
        for (std::size_t j = i + 1; j < ideals.size(); ++j)
            if (cls[j] < 0 && same_class(ideals[i], ideals[j])) cls[j] = cls[i];
    }
    rep.class_count = classes;
    // right orders: theta signatures at 5, 11+w, 12-w, 13+w
    std::vector<QuadElem> sig_xis = {QuadElem(5), QuadElem(QuadInt{11, 1}), QuadElem(QuadInt{12, -1}),
                                     QuadElem(QuadInt{13, 1})};
    std::map<std::vector<long>, int> buckets;
    for (auto& I : ideals) {
        Lattice4 Oj = right_order_checked(I);
        auto dr = reduced_discriminant(Oj);
        if (!(dr == SmoothIdeal{1, 1, 2}))
            throw std::logic_error("right order has wrong reduced discriminant");
        NormForm8 nf = norm_form(Oj, QuadElem(1));
        std::vector<long> sig;
        for (auto& xi : sig_xis) sig.push_back((long)enumerate_by_norm(nf, xi).size());
        rep.unit_counts.push_back((long)enumerate_by_norm(nf, QuadElem(1)).size());
        auto it = buckets.find(sig);
        if (it == buckets.end()) it = buckets.emplace(sig, (int)buckets.size()).first;
        rep.type_of_right_order.push_back(it->second);
    }
    rep.type_count = (int)buckets.size();
    return rep;
}

}  // namespace quintic
