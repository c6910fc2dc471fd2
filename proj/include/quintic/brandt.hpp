#pragma once

// Brandt matrices B(xi) with exact coefficients in A = F[u, v] (u^2 = -6,
// v^2 = 3-w or 2+w per the embedding convention), their simultaneous
// eigenvector, eigenvalues, and the match with the Frobenius data.

#include <atomic>
#include <optional>
#include <thread>

#include "quintic/ideals.hpp"
#include "quintic/univar.hpp"

namespace quintic {

// ---- the coefficient algebra ----

// F(sqrt -6): x + y u with u^2 = -6
struct FuElem {
    QuadElem x, y;
    FuElem() = default;
    FuElem(QuadElem x_, QuadElem y_ = QuadElem(0)) : x(std::move(x_)), y(std::move(y_)) {}
    FuElem(long v) : x(v) {}
    bool operator==(const FuElem& o) const { return x == o.x && y == o.y; }
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    FuElem operator+(const FuElem& o) const { return {x + o.x, y + o.y}; }
    FuElem operator-(const FuElem& o) const { return {x - o.x, y - o.y}; }
    FuElem operator-() const { return {-x, -y}; }
    FuElem operator*(const FuElem& o) const {
        return {x * o.x - QuadElem(6) * y * o.y, x * o.y + y * o.x};
    }
    FuElem& operator+=(const FuElem& o) { x += o.x; y += o.y; return *this; }
    FuElem& operator-=(const FuElem& o) { *this = *this - o; return *this; }
    FuElem& operator*=(const FuElem& o) { *this = *this * o; return *this; }
    FuElem inv() const {
        QuadElem n = x * x + QuadElem(6) * y * y;
        if (n.is_zero()) throw std::domain_error("inverse of zero in F(sqrt-6)");
        QuadElem ni = n.inv();
        return {x * ni, -(y * ni)};
    }
    FuElem scaled(const QuadElem& s) const { return {x * s, y * s}; }
};
inline FuElem inv_of(const FuElem& z) { return z.inv(); }

// element of A = F[u, v]: s + t v, with v^2 given by the context
struct AlgA {
    FuElem s, t;
    AlgA() = default;
    AlgA(FuElem s_, FuElem t_ = FuElem()) : s(std::move(s_)), t(std::move(t_)) {}
    bool operator==(const AlgA& o) const { return s == o.s && t == o.t; }
    bool is_zero() const { return s.is_zero() && t.is_zero(); }
    AlgA operator+(const AlgA& o) const { return {s + o.s, t + o.t}; }
    AlgA operator-(const AlgA& o) const { return {s - o.s, t - o.t}; }
    AlgA operator-() const { return {-s, -t}; }
};

// the embedding convention: which real embedding feeds the symmetric-square
// representation; the other feeds the determinant scalar
struct BrandtContext {
    bool conj_for_x2{false};     // apply sigma to coordinates entering X_2
    QuadElem vsq{QuadInt{3, -1}};  // v^2 = 3 - w (or 2 + w when conjugated)

    static BrandtContext choice(bool conj_for_x2) {
        BrandtContext c;
        c.conj_for_x2 = conj_for_x2;
        c.vsq = conj_for_x2 ? QuadElem(QuadInt{2, 1}) : QuadElem(QuadInt{3, -1});
        return c;
    }
    QuadElem x2_coord(const QuadElem& v) const { return conj_for_x2 ? v.conj() : v; }
    QuadElem det_coord(const QuadElem& v) const { return conj_for_x2 ? v : v.conj(); }

    // [OP] alg_a_mul
    AlgA mul(const AlgA& a, const AlgA& b) const {
        FuElem vs(vsq);
        return {a.s * b.s + (a.t * b.t) * vs, a.s * b.t + a.t * b.s};
    }
};

// 3x3 block over A
struct Block3 {
    std::array<std::array<AlgA, 3>, 3> e{};
    Block3 operator+(const Block3& o) const {
        Block3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.e[i][j] = e[i][j] + o.e[i][j];
        return r;
    }
};

// [OP] sym_square_block: transpose of X_2(iota_2 alpha) in A-coordinates
inline Block3 sym_square_block(const Quat& alpha, const BrandtContext& ctx) {
    QuadElem a = ctx.x2_coord(alpha.c[0]);
    QuadElem b = ctx.x2_coord(alpha.c[1]);
    QuadElem c = ctx.x2_coord(alpha.c[2]);
    QuadElem d = ctx.x2_coord(alpha.c[3]);
    QuadElem six(6), two(2);
    // X_2 entries p_{ij}; x1 = a, x2 = b sqrt6, x3 = c v, x4 = d sqrt6 v, i sqrt6 = u
    auto fu = [](QuadElem re, QuadElem im) { return FuElem(std::move(re), std::move(im)); };
    FuElem p11 = fu(a * a - six * b * b, two * a * b);
    FuElem p12 = fu(two * (a * c - six * b * d), two * (a * d + b * c));
    FuElem p13 = fu(ctx.vsq * (c * c - six * d * d), ctx.vsq * two * c * d);
    FuElem p21 = fu(-(a * c) - six * b * d, a * d - b * c);
    FuElem p22 = fu(a * a + six * b * b - ctx.vsq * (c * c + six * d * d), QuadElem(0));
    FuElem p23 = fu(a * c + six * b * d, a * d - b * c);
    FuElem p31 = fu(ctx.vsq * (c * c - six * d * d), -(ctx.vsq * two * c * d));
    FuElem p32 = fu(two * (-(a * c) + six * b * d), two * (a * d + b * c));
    FuElem p33 = fu(a * a - six * b * b, -(two * a * b));
    // v-parity: p12, p21, p23, p32 carry a factor v
    Block3 X;
    X.e[0][0] = AlgA(p11);
    X.e[0][1] = AlgA(FuElem(), p12);
    X.e[0][2] = AlgA(p13);
    X.e[1][0] = AlgA(FuElem(), p21);
    X.e[1][1] = AlgA(p22);
    X.e[1][2] = AlgA(FuElem(), p23);
    X.e[2][0] = AlgA(p31);
    X.e[2][1] = AlgA(FuElem(), p32);
    X.e[2][2] = AlgA(p33);
    // return the transpose
    Block3 T;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T.e[i][j] = X.e[j][i];
    return T;
}

// determinant of the symmetric-square image, for oracle checks:
// det Sym^2(m) = (det m)^3 and det m = Nr under the used embedding
inline AlgA block_determinant(const Block3& B, const BrandtContext& ctx) {
    auto mul = [&](const AlgA& x, const AlgA& y) { return ctx.mul(x, y); };
    AlgA det;
    det = det + mul(B.e[0][0], mul(B.e[1][1], B.e[2][2]) - mul(B.e[1][2], B.e[2][1]));
    det = det - mul(B.e[0][1], mul(B.e[1][0], B.e[2][2]) - mul(B.e[1][2], B.e[2][0]));
    det = det + mul(B.e[0][2], mul(B.e[1][0], B.e[2][1]) - mul(B.e[1][1], B.e[2][0]));
    return det;
}

// ---- the Brandt system ----

using BrandtMat = std::vector<std::vector<AlgA>>;  // 36 x 36

class BrandtSystem {
public:
    explicit BrandtSystem(BrandtContext ctx = BrandtContext::choice(false)) : ctx_(ctx) {
        auto& ideals = the_twelve_ideals();
        n_ = ideals.size();
        // lattices J_{ij} = I_j^{-1} I_i with norm forms, for all pairs
        products_.resize(n_, std::vector<NormForm8>(n_));
        norm_gens_.resize(n_, std::vector<QuadElem>(n_));
        for (std::size_t j = 0; j < n_; ++j) {
            Lattice4 inv = ideal_inverse(ideals[j]);
            for (std::size_t i = 0; i < n_; ++i) {
                Lattice4 J = lattice_product(inv, ideals[i].lattice);
                QuadElem ng = J.norm_generator();
                products_[i][j] = norm_form(J, ng);
                norm_gens_[i][j] = ng;
            }
        }
    }

    const BrandtContext& ctx() const { return ctx_; }

    // one 3x3 block by direct enumeration
    Block3 block(std::size_t i, std::size_t j, const QuadElem& xi) const {
        const NormForm8& nf = products_[i][j];
        Block3 acc;
        for (auto& Y : enumerate_by_norm(nf, xi)) {
            Quat alpha = vector_to_quat(nf, Y);
            acc = acc + sym_square_block(alpha, ctx_);
        }
        // scalar: (1/e_j) X(iota_1 alpha) with Nr(alpha) = xi Nr_+(J) constant
        QuadElem scalar = ctx_.det_coord(xi * norm_gens_[i][j]) * QuadElem(QuadInt{1, 0}, 2);
        Block3 out;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                out.e[a][b] = AlgA(acc.e[a][b].s.scaled(scalar), acc.e[a][b].t.scaled(scalar));
        return out;
    }

    // [OP] brandt_matrix; direct_all bypasses the symmetry fill (used for tests)
    BrandtMat brandt_matrix(const QuadElem& xi, bool direct_all = false, int threads = 2) const {
        BrandtMat M(3 * n_, std::vector<AlgA>(3 * n_));
        std::vector<std::pair<std::size_t, std::size_t>> jobs;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) jobs.push_back({i, j});
        if (direct_all)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < i; ++j) jobs.push_back({i, j});
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= jobs.size()) return;
                auto [i, j] = jobs[idx];
                Block3 b = block(i, j, xi);
                for (int a = 0; a < 3; ++a)
                    for (int c = 0; c < 3; ++c) M[3 * i + a][3 * j + c] = b.e[a][c];
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (!direct_all) {
            // symmetry fill: B_{ji} = N(Nr_+(J_{ij}))^{-2} S (B_{ij})^T S^{-1} blockwise,
            // with S the Sym^2 pairing diag-antidiag matrix (verified against the
            // direct computation in the tests)
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j) {
                    Block3 bij;
                    for (int a = 0; a < 3; ++a)
                        for (int c = 0; c < 3; ++c) bij.e[a][c] = M[3 * i + a][3 * j + c];
                    Block3 bji = mirror_block(bij, norm_gens_[i][j]);
                    for (int a = 0; a < 3; ++a)
                        for (int c = 0; c < 3; ++c) M[3 * j + a][3 * i + c] = bji.e[a][c];
                }
        }
        return M;
    }

    // B_{ji} from B_{ij}: conjugation alpha -> conj(alpha)/Nr_+ plus the Sym^2
    // functional equation X_2(conj m) = det(m)^2 X_2(m)^{-1}
    Block3 mirror_block(const Block3& bij, const QuadElem& norm_gen) const {
        // S = [[0,0,1],[0,-1/2,0],[1,0,0]], S^{-1} = [[0,0,1],[0,-2,0],[1,0,0]]
        auto scale_entry = [&](const AlgA& x, const Rat& r) {
            QuadElem s(QuadInt{num(r), 0}, den(r));
            return AlgA(x.s.scaled(s), x.t.scaled(s));
        };
        Rat nq = (norm_gen * norm_gen.conj()).ra();  // Nr_{F/Q}(norm_gen)
        Rat factor = Rat(1) / (nq * nq);
        // B_ji = Nr(g)^{-2} S^{-1} (B_ij)^T S with S = antidiag(1,1,1) diag(1,-1/2,1):
        // (S^{-1} M S)_{ab} = (d_b / d_a) M_{2-a, 2-b}, so with M = (B_ij)^T the
        // entry is (d_b / d_a) (B_ij)_{2-b, 2-a}
        Block3 t;
        const Rat d[3] = {Rat(1), Rat(-1, 2), Rat(1)};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                AlgA v = bij.e[2 - b][2 - a];
                t.e[a][b] = scale_entry(v, factor * d[b] / d[a]);
            }
        return t;
    }

    // [OP] commute_check
    bool commute_check(const BrandtMat& A, const BrandtMat& B) const {
        std::size_t n = A.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                AlgA ab, ba;
                for (std::size_t k = 0; k < n; ++k) {
                    ab = ab + ctx_.mul(A[i][k], B[k][j]);
                    ba = ba + ctx_.mul(B[i][k], A[k][j]);
                }
                if (!(ab == ba)) return false;
            }
        return true;
    }

    // the entry-pattern invariant of the Theorem proof
    bool entry_pattern_ok(const BrandtMat& M) const {
        for (std::size_t k = 0; k < M.size(); ++k)
            for (std::size_t l = 0; l < M.size(); ++l) {
                bool in_fu = (k % 3) % 2 == (l % 3) % 2;  // positions (1,1),(1,3),(2,2),(3,1),(3,3) mod 3
                if (in_fu && !M[k][l].t.is_zero()) return false;
                if (!in_fu && !M[k][l].s.is_zero()) return false;
            }
        return true;
    }

    // conjugate by diag(t_k), t_k = 1 at k = 2 mod 3 (1-based), v elsewhere:
    // the result has all entries in F(sqrt -6)
    std::vector<std::vector<FuElem>> twisted(const BrandtMat& M) const {
        std::size_t n = M.size();
        std::vector<std::vector<FuElem>> T(n, std::vector<FuElem>(n));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                bool vk = k % 3 != 1, vl = l % 3 != 1;
                const AlgA& x = M[k][l];
                if (vk == vl) {
                    if (!x.t.is_zero()) throw std::logic_error("entry pattern violated (diag)");
                    T[k][l] = x.s;
                } else if (!vk && vl) {
                    // entry in F(u) v, times t_l/t_k = v
                    if (!x.s.is_zero()) throw std::logic_error("entry pattern violated (x v)");
                    T[k][l] = x.t * FuElem(ctx_.vsq);
                } else {
                    // t_l/t_k = 1/v = v / vsq
                    if (!x.s.is_zero()) throw std::logic_error("entry pattern violated (/ v)");
                    T[k][l] = x.t;
                }
            }
        return T;
    }

private:
    BrandtContext ctx_;
    std::size_t n_{12};
    std::vector<std::vector<NormForm8>> products_;
    std::vector<std::vector<QuadElem>> norm_gens_;
};


// ---- characteristic polynomial over F via fraction-free interpolation ----

// integral elements x + y u of F(sqrt -6), for Bareiss elimination
struct ZwU {
    QuadInt x, y;
    bool operator==(const ZwU& o) const { return x == o.x && y == o.y; }
    ZwU operator+(const ZwU& o) const { return {x + o.x, y + o.y}; }
    ZwU operator-(const ZwU& o) const { return {x - o.x, y - o.y}; }
    ZwU operator*(const ZwU& o) const {
        return {x * o.x - QuadInt{6, 0} * y * o.y, x * o.y + y * o.x};
    }
};

inline ZwU zwu_exact_div(const ZwU& n, const ZwU& d) {
    QuadInt nd = d.x * d.x + QuadInt{6, 0} * d.y * d.y;
    if (nd.is_zero()) throw std::domain_error("division by zero in Z[w][u]");
    ZwU conj{d.x, -d.y};
    ZwU prod = n * conj;
    return {exact_div(prod.x, nd), exact_div(prod.y, nd)};
}

// det(y I - M) over Z[w][u] by Bareiss
inline ZwU charpoly_value(const std::vector<std::vector<ZwU>>& M, const QuadInt& yv) {
    std::size_t n = M.size();
    std::vector<std::vector<ZwU>> a(n, std::vector<ZwU>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = ZwU{-M[i][j].x, -M[i][j].y};
            if (i == j) a[i][j].x = a[i][j].x + yv;
        }
    return bareiss_det(std::move(a), [](const ZwU& p, const ZwU& q) { return zwu_exact_div(p, q); },
                       ZwU{QuadInt{1, 0}, QuadInt{0, 0}});
}

// characteristic polynomial of a twisted Brandt matrix; coefficients must land in F
inline UPoly<QuadElem> twisted_charpoly(const std::vector<std::vector<FuElem>>& C, int threads = 2) {
    std::size_t n = C.size();
    // clear denominators: M = D C integral
    Int D = 1;
    for (auto& row : C)
        for (auto& e : row) {
            D = D / igcd(D, e.x.d) * e.x.d;
            D = D / igcd(D, e.y.d) * e.y.d;
        }
    std::vector<std::vector<ZwU>> M(n, std::vector<ZwU>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const FuElem& e = C[i][j];
            Int sx = D / e.x.d, sy = D / e.y.d;
            M[i][j] = ZwU{QuadInt{e.x.n.a * sx, e.x.n.b * sx}, QuadInt{e.y.n.a * sy, e.y.n.b * sy}};
        }
    // interpolate q(y) = det(y I - M) (monic, degree n) at integer points
    std::vector<QuadInt> pts(n);
    for (std::size_t m = 0; m < n; ++m) pts[m] = QuadInt{(long)m - (long)n / 2, 0};
    std::vector<ZwU> vals(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= n) return;
            vals[idx] = charpoly_value(M, pts[idx]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    // subtract the monic part, interpolate the remainder of degree <= n-1 over F(u)
    std::vector<FuElem> rv(n);
    for (std::size_t m = 0; m < n; ++m) {
        QuadElem xm = QuadElem(pts[m]);
        QuadElem xn(1);
        for (std::size_t k = 0; k < n; ++k) xn *= xm;
        rv[m] = FuElem(QuadElem(vals[m].x), QuadElem(vals[m].y)) - FuElem(xn);
    }
    // Newton divided differences in F(u)
    std::vector<FuElem> coef = rv;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t m = n - 1; m >= level; --m) {
            QuadElem dx = QuadElem(pts[m]) - QuadElem(pts[m - level]);
            coef[m] = (coef[m] - coef[m - 1]) * FuElem(dx).inv();
            if (m == level) break;
        }
    // expand Newton form to monomial coefficients
    std::vector<FuElem> q(n + 1);
    std::vector<FuElem> basis{FuElem(1)};  // prod (x - pts[k]) so far
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < basis.size(); ++k) q[k] += coef[m] * basis[k];
        // basis *= (x - pts[m])
        std::vector<FuElem> nb(basis.size() + 1);
        QuadElem pm = QuadElem(pts[m]);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            nb[k + 1] += basis[k];
            nb[k] -= basis[k] * FuElem(pm);
        }
        basis = nb;
    }
    q[n] += FuElem(1);  // restore the monic term
    // p(x) = q(D x) / D^n: p_k = q_k D^k / D^n, and all u-parts must vanish
    std::vector<QuadElem> p(n + 1);
    QuadElem Dq = QuadElem(QuadInt{D, 0});
    QuadElem scale = QuadElem(1);
    for (std::size_t k = 0; k <= n; ++k) {
        FuElem c = q[k] * FuElem(scale);  // q_k D^k
        scale *= Dq;
        // divide by D^n at the end via rational scaling
        if (!c.y.is_zero()) throw std::logic_error("charpoly has a nonzero u-component");
        p[k] = c.x;
    }
    QuadElem Dn(1);
    for (std::size_t k = 0; k < n; ++k) Dn *= Dq;
    QuadElem dninv = Dn.inv();
    for (auto& c : p) c *= dninv;
    UPoly<QuadElem> out(std::move(p));
    if (out.deg() != (int)n || !(out.lead() == QuadElem(1)))
        throw std::logic_error("charpoly interpolation failed");
    return out;
}

// F-roots of a polynomial over F = Q(sqrt 5): numeric roots under both real
// embeddings, rationally reconstructed and verified exactly
inline std::vector<QuadElem> f_roots(const UPoly<QuadElem>& g) {
    int d = g.deg();
    if (d <= 0) return {};
    auto embed_roots = [&](int emb) {
        std::vector<std::complex<double>> c(d + 1);
        for (int k = 0; k <= d; ++k) c[k] = g.coeff(k).emb(emb);
        std::vector<std::complex<double>> z(d);
        for (int i = 0; i < d; ++i)
            z[i] = 3.7 * std::polar(1.0, 2 * M_PI * i / d + 0.4) * std::abs(c[0].real() + 1);
        // scale initial guesses by a root bound
        double bound = 1;
        for (int k = 0; k < d; ++k) bound = std::max(bound, 2 * std::pow(std::abs(c[k].real() / c[d].real()), 1.0 / (d - k)));
        for (int i = 0; i < d; ++i) z[i] = bound * std::polar(1.0, 2 * M_PI * i / d + 0.4);
        for (int it = 0; it < 600; ++it) {
            double moved = 0;
            for (int i = 0; i < d; ++i) {
                std::complex<double> num = c[d];
                for (int k = d - 1; k >= 0; --k) num = num * z[i] + c[k];
                std::complex<double> den = c[d];
                for (int j = 0; j < d; ++j)
                    if (j != i) den *= z[i] - z[j];
                std::complex<double> delta = num / den;
                z[i] -= delta;
                moved += std::abs(delta);
            }
            if (moved < 1e-13 * bound) break;
        }
        return z;
    };
    auto z1 = embed_roots(1), z2 = embed_roots(2);
    auto nearest_rat = [](double x, long max_den) {
        // continued-fraction best approximation
        long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        double v = x;
        for (int it = 0; it < 64; ++it) {
            long a = (long)std::floor(v);
            long p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > max_den) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            double frac = v - a;
            if (std::abs(frac) < 1e-12) break;
            v = 1.0 / frac;
        }
        return Rat(p1, q1);
    };
    const double w1 = (1 + std::sqrt(5.0)) / 2, sq5 = std::sqrt(5.0);
    std::vector<QuadElem> roots;
    for (auto& r1 : z1) {
        if (std::abs(r1.imag()) > 1e-6 * (1 + std::abs(r1))) continue;
        for (auto& r2 : z2) {
            if (std::abs(r2.imag()) > 1e-6 * (1 + std::abs(r2))) continue;
            double bd = (r1.real() - r2.real()) / sq5;
            double ad = r1.real() - bd * w1;
            Rat ra = nearest_rat(ad, 1 << 16), rb = nearest_rat(bd, 1 << 16);
            QuadElem cand = quad_from_parts(ra, rb);
            if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
            if (g.eval(cand).is_zero()) roots.push_back(cand);
        }
    }
    return roots;
}

struct CharpolyInfo {
    UPoly<QuadElem> poly;
    std::vector<std::pair<QuadElem, int>> roots;     // F-roots with multiplicities
    std::vector<std::pair<int, int>> residual;       // (degree, multiplicity) without F-roots
};

// [OP] charpoly_info
inline CharpolyInfo charpoly_info(const BrandtSystem& sys, const QuadElem& xi, int threads = 2) {
    auto M = sys.brandt_matrix(xi, false, threads);
    auto C = sys.twisted(M);
    CharpolyInfo info;
    info.poly = twisted_charpoly(C, threads);
    auto parts = squarefree_decomposition(info.poly);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int mult = (int)i + 1;
        if (parts[i].deg() <= 0) continue;
        auto roots = f_roots(parts[i]);
        UPoly<QuadElem> rest = parts[i];
        for (auto& r : roots) {
            info.roots.push_back({r, mult});
            UPoly<QuadElem> lin({-r, QuadElem(1)});
            rest = upoly_divmod(rest, lin).first;
        }
        if (rest.deg() > 0) info.residual.push_back({rest.deg(), mult});
    }
    return info;
}

// ---- the distinguished eigenvector ----

struct EigenData {
    std::vector<AlgA> eps;  // 36 entries, entry pattern F(u) at k = 2 mod 3, F(u) v otherwise
    QuadElem lambda_3w;     // 4(-15+w)
};

struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// kernel of a stacked system over the field F(u); returns a basis
inline std::vector<std::vector<FuElem>> fu_kernel(std::vector<std::vector<FuElem>> rows, std::size_t ncols) {
    std::size_t nr = rows.size();
    std::vector<int> pivot_of_col(ncols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t r = rank; r < nr; ++r)
            if (!rows[r][c].is_zero()) { piv = r; break; }
        if (piv == nr) continue;
        std::swap(rows[rank], rows[piv]);
        FuElem inv = rows[rank][c].inv();
        for (std::size_t j = c; j < ncols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            FuElem f = rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_of_col[c] = (int)rank;
        ++rank;
    }
    std::vector<std::vector<FuElem>> kernel;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<FuElem> v(ncols);
        v[c] = FuElem(1);
        for (std::size_t cc = 0; cc < ncols; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = -rows[pivot_of_col[cc]][c];
        kernel.push_back(v);
    }
    return kernel;
}

// [OP] find_eigenvector: the common eigenspace of B(3+w) at 4(-15+w) and
// B(7) at -70, which must be one-dimensional
inline EigenData find_eigenvector(const BrandtSystem& sys, int threads = 2) {
    QuadElem lam = QuadElem(QuadInt{-60, 4});  // 4(-15+w)
    auto C1 = sys.twisted(sys.brandt_matrix(QuadElem(QuadInt{3, 1}), false, threads));
    auto C2 = sys.twisted(sys.brandt_matrix(QuadElem(7), false, threads));
    std::size_t n = C1.size();
    std::vector<std::vector<FuElem>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        auto r = C1[i];
        r[i] = r[i] - FuElem(lam);
        rows.push_back(r);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto r = C2[i];
        r[i] = r[i] + FuElem(QuadElem(70));
        rows.push_back(r);
    }
    auto kernel = fu_kernel(std::move(rows), n);
    if (kernel.size() != 1)
        throw ConventionError("common eigenspace has dimension " + std::to_string(kernel.size()) +
                              "; retry with the other embedding choice");
    // untwist: eps_k = x_k at k = 2 mod 3 (1-based), x_k v otherwise; then scale
    // so that the second entry is -w-2
    auto& x = kernel[0];
    FuElem scale = FuElem(QuadElem(QuadInt{-2, -1})) * x[1].inv();
    EigenData out;
    out.lambda_3w = lam;
    out.eps.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        FuElem v = x[k] * scale;
        if (k % 3 == 1) out.eps[k] = AlgA(v);
        else out.eps[k] = AlgA(FuElem(), v);
    }
    return out;
}

// AlgA inverse (A is a field)
inline AlgA alg_inv(const BrandtContext& ctx, const AlgA& x) {
    FuElem nrm = x.s * x.s - x.t * x.t * FuElem(ctx.vsq);
    if (nrm.is_zero()) throw std::domain_error("inverse of zero in A");
    FuElem ni = nrm.inv();
    return AlgA(x.s * ni, -(x.t * ni));
}

// [OP] eigenvalue_at: only the first block-row of B(xi) is needed
inline QuadElem eigenvalue_at(const BrandtSystem& sys, const QuadElem& xi, const EigenData& ed) {
    std::vector<std::vector<AlgA>> band(3, std::vector<AlgA>(36));
    for (std::size_t j = 0; j < 12; ++j) {
        Block3 b = sys.block(0, j, xi);
        for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) band[a][3 * j + c] = b.e[a][c];
    }
    std::array<AlgA, 3> y{};
    for (int a = 0; a < 3; ++a)
        for (std::size_t l = 0; l < 36; ++l) y[a] = y[a] + sys.ctx().mul(band[a][l], ed.eps[l]);
    AlgA lam = sys.ctx().mul(y[1], alg_inv(sys.ctx(), ed.eps[1]));
    for (int a = 0; a < 3; ++a) {
        AlgA check = sys.ctx().mul(lam, ed.eps[a]);
        if (!(check == y[a])) throw std::runtime_error("eigenvalue_at: not an eigenvector row");
    }
    if (!lam.t.is_zero() || !lam.s.y.is_zero())
        throw std::runtime_error("eigenvalue has a nonzero u or v component");
    return lam.s.x;
}

// a normalized totally positive generator of each prime above p (split p)
inline std::pair<QuadElem, QuadElem> split_prime_generators(std::uint64_t p) {
    for (long b = 1; b * b <= (long)(4 * p); ++b)
        for (long a = -(long)p; a <= (long)p; ++a) {
            Int nr = QuadInt{a, b}.norm();
            if (nr == (long)p || nr == -(long)p) {
                QuadInt g1 = normalize_tp(QuadInt{a, b});
                QuadInt g2 = normalize_tp(QuadInt{a, b}.conj());
                return {QuadElem(g1), QuadElem(g2)};
            }
        }
    throw std::logic_error("no split prime generator found");
}

// [OP] frobenius_match
struct FrobeniusMatch {
    std::uint64_t p;
    bool split;
    bool ok;
    QuadElem lambda1, lambda2;  // split: the two eigenvalues; inert: lambda in lambda1
    std::int64_t a_p, a_p2;
};

inline FrobeniusMatch frobenius_match(const BrandtSystem& sys, const EigenData& ed, std::uint64_t p,
                                      std::int64_t a_p, std::int64_t a_p2) {
    FrobeniusMatch out;
    out.p = p;
    out.a_p = a_p;
    out.a_p2 = a_p2;
    std::uint64_t r = p % 5;
    if (r == 2 || r == 3) {
        out.split = false;
        out.lambda1 = eigenvalue_at(sys, QuadElem(QuadInt{(long)p, 0}), ed);
        out.ok = out.lambda1 * QuadElem(2) == QuadElem(QuadInt{a_p2, 0});
    } else {
        out.split = true;
        auto [g1, g2] = split_prime_generators(p);
        out.lambda1 = eigenvalue_at(sys, g1, ed);
        out.lambda2 = eigenvalue_at(sys, g2, ed);
        bool sum_ok = out.lambda1 + out.lambda2 == QuadElem(QuadInt{a_p, 0});
        bool conj_ok = out.lambda2 == out.lambda1.conj();
        // (T^2 - l1 T + p^3)(T^2 - l2 T + p^3) must equal the quartic exactly
        struct { std::int64_t a; Int b; } q{a_p, (Int(a_p) * a_p - a_p2) / 2};
        Int p3 = Int(p) * p * p;
        bool charpoly_ok = (out.lambda1 * out.lambda2 + QuadElem(QuadInt{2 * p3, 0}) ==
                            QuadElem(QuadInt{q.b, 0}));
        out.ok = sum_ok && conj_ok && charpoly_ok;
    }
    return out;
}

}  // namespace quintic
