#pragma once

// Full o_F-lattices in B with Hermite-normal-form bases over Z[w]
// (norm-Euclidean reduction; canonical pivots and reduced off-diagonals).

#include <array>
#include <vector>

#include "quintic/quaternion.hpp"

namespace quintic {

struct DegenerateLattice : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Lattice4 {
public:
    // columns of m/den span the lattice; m[i][j] = 0 for i > j (pivot of column j in row j)
    std::array<std::array<QuadInt, 4>, 4> m{};
    QuadInt den{1};

    static Lattice4 from_generators(const std::vector<Quat>& gens) {
        // clear denominators
        Int D = 1;
        for (auto& g : gens)
            for (auto& c : g.c) D = D / igcd(D, c.d) * c.d;
        std::vector<std::array<QuadInt, 4>> cols;
        for (auto& g : gens) {
            std::array<QuadInt, 4> v;
            for (int i = 0; i < 4; ++i) {
                Int s = D / g.c[i].d;
                v[i] = QuadInt{g.c[i].n.a * s, g.c[i].n.b * s};
            }
            cols.push_back(v);
        }
        Lattice4 L = hnf_of_columns(cols);
        L.den = L.den * QuadInt{D, 0};
        L.normalize();
        return L;
    }

    // [OP] hnf_of on integral column generators
    static Lattice4 hnf_of_columns(std::vector<std::array<QuadInt, 4>> cols) {
        Lattice4 L;
        int next_pivot = 3;
        for (int r = 3; r >= 0; --r) {
            // euclidean gcd sweep in row r over the still-active columns
            for (;;) {
                int best = -1;
                Int bestn = 0;
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    if (cols[j][r].is_zero()) continue;
                    Int n = cols[j][r].norm();
                    if (n < 0) n = -n;
                    if (best < 0 || n < bestn) { best = (int)j; bestn = n; }
                }
                if (best < 0) throw DegenerateLattice("lattice rank < 4");
                bool done = true;
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    if ((int)j == best || cols[j][r].is_zero()) continue;
                    auto [q, rem] = divmod_nearest(cols[j][r], cols[best][r]);
                    for (int i = 0; i < 4; ++i) cols[j][i] = cols[j][i] - q * cols[best][i];
                    if (!rem.is_zero()) done = false;
                }
                if (done) {
                    // move pivot column out
                    for (int i = 0; i < 4; ++i) L.m[i][next_pivot] = cols[best][i];
                    cols.erase(cols.begin() + best);
                    --next_pivot;
                    break;
                }
            }
        }
        // any remaining columns must now be zero
        for (auto& c : cols)
            for (auto& e : c)
                if (!e.is_zero()) throw std::logic_error("hnf: nonzero residual column");
        L.den = QuadInt{1, 0};
        L.canonicalize();
        return L;
    }

    void canonicalize() {
        // pivot associates
        for (int r = 0; r < 4; ++r) {
            QuadInt p = m[r][r];
            if (p.is_zero()) throw DegenerateLattice("lattice rank < 4");
            QuadInt cp = canonical_associate(p);
            if (cp != p) {
                QuadInt u = exact_div(cp, p);
                for (int i = 0; i <= r; ++i) m[i][r] = m[i][r] * u;
            }
        }
        // reduce off-diagonal entries right of each pivot
        for (int r = 3; r >= 0; --r)
            for (int j = r + 1; j < 4; ++j) {
                auto [q, rem] = divmod_nearest(m[r][j], m[r][r]);
                (void)rem;
                if (!q.is_zero())
                    for (int i = 0; i <= r; ++i) m[i][j] = m[i][j] - q * m[i][r];
            }
    }

    void normalize() {
        // pull common content of the matrix into den, canonicalize den, fold unit
        QuadInt g = den;
        for (auto& row : m)
            for (auto& e : row) g = quad_gcd(g, e);
        if (!g.is_zero() && !(g == QuadInt{1, 0})) {
            for (auto& row : m)
                for (auto& e : row) e = exact_div(e, g);
            den = exact_div(den, g);
        }
        QuadInt cd = canonical_associate(den);
        if (cd != den) {
            QuadInt u = exact_div(den, cd);  // unit... den = cd * u
            // lattice = m / den = (m * u^{-1}) / cd; u is a unit so u^{-1} integral
            QuadInt ui = exact_div(QuadInt{1, 0}, u);
            for (auto& row : m)
                for (auto& e : row) e = e * ui;
            den = cd;
        }
        canonicalize();
    }

    bool operator==(const Lattice4& o) const { return m == o.m && den == o.den; }

    std::array<Quat, 4> basis() const {
        std::array<Quat, 4> b;
        QuadElem d = QuadElem(den).inv();
        for (int j = 0; j < 4; ++j) {
            Quat v;
            for (int i = 0; i < 4; ++i) v.c[i] = QuadElem(m[i][j]) * d;
            b[j] = v;
        }
        return b;
    }

    // membership: solve the triangular system over o_F
    bool contains(const Quat& x) const {
        // coordinates of den * x must be integral and solvable
        std::array<QuadElem, 4> v;
        for (int i = 0; i < 4; ++i) v[i] = x.c[i] * QuadElem(den);
        for (int r = 3; r >= 0; --r) {
            QuadElem cr = v[r] / QuadElem(m[r][r]);
            if (!cr.is_integral()) return false;
            for (int i = 0; i <= r; ++i) v[i] = v[i] - cr * QuadElem(m[i][r]);
        }
        return true;
    }

    bool contains(const Lattice4& other) const {
        for (auto& b : other.basis())
            if (!contains(b)) return false;
        return true;
    }

    Lattice4 scaled(const QuadElem& s) const {
        std::vector<Quat> gens;
        for (auto& b : basis()) gens.push_back(b.scaled(s));
        return from_generators(gens);
    }

    Lattice4 conjugated() const {
        std::vector<Quat> gens;
        for (auto& b : basis()) gens.push_back(b.conj());
        return from_generators(gens);
    }

    QuadElem det() const {
        QuadElem d(1);
        for (int r = 0; r < 4; ++r) d *= QuadElem(m[r][r]);
        QuadElem dd = QuadElem(den);
        return d * (dd * dd * dd * dd).inv();
    }

    // Gram matrix of the reduced trace pairing Tr(b_i conj(b_j))
    std::array<std::array<QuadElem, 4>, 4> gram() const {
        auto b = basis();
        std::array<std::array<QuadElem, 4>, 4> G;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) G[i][j] = (b[i] * b[j].conj()).trace();
        return G;
    }

    // trace-dual lattice
    Lattice4 dual() const {
        auto G = gram();
        // invert G over F by Gauss-Jordan
        std::array<std::array<QuadElem, 8>, 4> aug;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) aug[i][j] = G[i][j];
            for (int j = 0; j < 4; ++j) aug[i][4 + j] = QuadElem(i == j ? 1 : 0);
        }
        for (int c = 0; c < 4; ++c) {
            int piv = -1;
            for (int r = c; r < 4; ++r)
                if (!aug[r][c].is_zero()) { piv = r; break; }
            if (piv < 0) throw std::runtime_error("singular Gram matrix");
            std::swap(aug[c], aug[piv]);
            QuadElem inv = aug[c][c].inv();
            for (int j = 0; j < 8; ++j) aug[c][j] *= inv;
            for (int r = 0; r < 4; ++r) {
                if (r == c || aug[r][c].is_zero()) continue;
                QuadElem f = aug[r][c];
                for (int j = 0; j < 8; ++j) aug[r][j] -= f * aug[c][j];
            }
        }
        auto b = basis();
        std::vector<Quat> gens;
        for (int i = 0; i < 4; ++i) {
            Quat d;
            for (int k = 0; k < 4; ++k) d = d + b[k].scaled(aug[i][4 + k]);
            gens.push_back(d);
        }
        return from_generators(gens);
    }

    friend Lattice4 lattice_sum(const Lattice4& A, const Lattice4& B) {
        std::vector<Quat> gens;
        for (auto& b : A.basis()) gens.push_back(b);
        for (auto& b : B.basis()) gens.push_back(b);
        return from_generators(gens);
    }

    friend Lattice4 lattice_product(const Lattice4& A, const Lattice4& B) {
        std::vector<Quat> gens;
        for (auto& a : A.basis())
            for (auto& b : B.basis()) gens.push_back(a * b);
        return from_generators(gens);
    }

    friend Lattice4 lattice_intersect(const Lattice4& A, const Lattice4& B) {
        return lattice_sum(A.dual(), B.dual()).dual();
    }

    // the o_F-ideal generated by the reduced norms of lattice elements,
    // as its canonical totally positive generator
    QuadElem norm_generator() const {
        auto b = basis();
        std::vector<QuadElem> vals;
        for (int i = 0; i < 4; ++i) vals.push_back(b[i].norm());
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) vals.push_back((b[i] * b[j].conj()).trace());
        Int D = 1;
        for (auto& v : vals) D = D / igcd(D, v.d) * v.d;
        QuadInt g{0, 0};
        for (auto& v : vals) {
            Int s = D / v.d;
            g = quad_gcd(g, QuadInt{v.n.a * s, v.n.b * s});
        }
        if (g.is_zero()) throw std::runtime_error("zero norm ideal");
        return QuadElem(normalize_tp(g), D);
    }

    bool is_ring() const {
        if (!contains(Quat::one())) return false;
        auto b = basis();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!contains(b[i] * b[j])) return false;
        return true;
    }

    // right order {x : L x subset L}
    Lattice4 right_order() const {
        auto b = basis();
        Lattice4 acc = one_sided_transporter(b[0]);
        for (int i = 1; i < 4; ++i) acc = lattice_intersect(acc, one_sided_transporter(b[i]));
        return acc;
    }

    Lattice4 left_order() const { return conjugated().right_order().conjugated(); }

private:
    // {x : v x in L} = v^{-1} L
    Lattice4 one_sided_transporter(const Quat& v) const {
        Quat vi = v.inv();
        std::vector<Quat> gens;
        for (auto& b : basis()) gens.push_back(vi * b);
        return from_generators(gens);
    }
};

// kernel over o_F of the single row (g_0, ..., g_3): returns 3 basis vectors
inline std::array<std::array<QuadInt, 4>, 3> row_kernel(std::array<QuadInt, 4> g) {
    // track unimodular column operations on the identity
    std::array<std::array<QuadInt, 4>, 4> U{};  // U[i][j]: column j
    for (int i = 0; i < 4; ++i) U[i][i] = QuadInt{1, 0};
    for (;;) {
        int best = -1;
        Int bestn = 0;
        int nonzero = 0;
        for (int j = 0; j < 4; ++j) {
            if (g[j].is_zero()) continue;
            ++nonzero;
            Int n = g[j].norm();
            if (n < 0) n = -n;
            if (best < 0 || n < bestn) { best = j; bestn = n; }
        }
        if (nonzero <= 1) {
            if (nonzero == 0) throw std::logic_error("row_kernel: zero row");
            // kernel = the other three columns of U
            std::array<std::array<QuadInt, 4>, 3> out{};
            int k = 0;
            for (int j = 0; j < 4; ++j) {
                if (!g[j].is_zero()) continue;
                for (int i = 0; i < 4; ++i) out[k][i] = U[i][j];
                ++k;
            }
            return out;
        }
        for (int j = 0; j < 4; ++j) {
            if (j == best || g[j].is_zero()) continue;
            auto [q, rem] = divmod_nearest(g[j], g[best]);
            g[j] = rem;
            for (int i = 0; i < 4; ++i) U[i][j] = U[i][j] - q * U[i][best];
        }
    }
}

}  // namespace quintic
