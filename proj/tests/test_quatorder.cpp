#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "quintic/quatorder.hpp"

using namespace quintic;

TEST_CASE("quaternion multiplication relations") {
    Quat X = Quat::X(), Y = Quat::Y(), XY = Quat::XY();
    CHECK(X * Y == XY);
    CHECK(Y * X == -XY);
    CHECK(X * X == Quat::one().scaled(QuadElem(-6)));
    CHECK(Y * Y == Quat::one().scaled(QuadElem(QuadInt{-3, 1})));
    CHECK(XY * XY == Quat::one().scaled(QuadElem(QuadInt{-18, 6})));  // 6w - 18
    CHECK(X.norm() == QuadElem(6));
    // Y l = conj(l) Y for l in F(X)
    Quat l = Quat(qw(2, 1, 1, 1), qw(3, 2, -1, 1), QuadElem(0), QuadElem(0));
    Quat lbar = Quat(l.c[0], -l.c[1], QuadElem(0), QuadElem(0));
    CHECK(Y * l == lbar * Y);
}

TEST_CASE("norm is multiplicative and totally positive") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int t = 0; t < 60; ++t) {
        Quat x(qw(d(rng), 2, d(rng), 2), qw(d(rng), 2, d(rng), 2), qw(d(rng), 2, d(rng), 2),
               qw(d(rng), 2, d(rng), 2));
        Quat y(qw(d(rng), 2, d(rng), 2), qw(d(rng), 2, d(rng), 2), qw(d(rng), 2, d(rng), 2),
               qw(d(rng), 2, d(rng), 2));
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK((x * y).conj() == y.conj() * x.conj());
        if (!x.is_zero()) {
            CHECK(x.norm().sign_emb1() > 0);
            CHECK(x.norm().sign_emb2() > 0);
            CHECK(x * x.inv() == Quat::one());
        }
        CHECK(x * (y + y) == x * y + x * y);
    }
}

TEST_CASE("hilbert checks reproduce the ramification set") {
    auto h = hilbert_checks();
    CHECK(h.symbol.at("p3") == -1);
    CHECK(h.symbol.at("p5") == 1);
    CHECK(h.symbol.at("p2") == -1);
    CHECK(h.symbol.at("inf1") == -1);
    CHECK(h.symbol.at("inf2") == -1);
    CHECK(h.totally_negative_pair);
}

TEST_CASE("both orders are ring-closed and contain 1") {
    CHECK(order_oprime().is_ring());
    CHECK(order_o().is_ring());
    CHECK(order_o() == order_o_alt());
    CHECK(order_o() == order_o_from_matrix());
    CHECK(order_oprime().contains(order_o()));
    QuadElem idx = order_o().det() / order_oprime().det();
    Rat nrm = idx.norm();
    if (nrm < 0) nrm = -nrm;
    CHECK(nrm == 5);  // the index ideal is (sqrt 5)
}

TEST_CASE("HNF properties: idempotence, module preservation") {
    auto I4 = Lattice4::from_generators({Quat::one(), Quat::X(), Quat::Y(), Quat::XY()});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(I4.m[i][j] == (i == j ? QuadInt{1, 0} : QuadInt{0, 0}));
    auto O = order_o();
    auto b = O.basis();
    std::vector<Quat> scrambled = {b[3] + b[1], b[2], b[0] - b[3].scaled(QuadElem(QuadInt{0, 1})),
                                   b[1], b[0] + b[2].scaled(QuadElem(7))};
    CHECK(Lattice4::from_generators(scrambled) == O);
    CHECK_THROWS_AS(Lattice4::from_generators({Quat::one(), Quat::X(), Quat::one() + Quat::X()}),
                    DegenerateLattice);
}

TEST_CASE("duals: defining property and involutivity") {
    auto O = order_o();
    auto f = order_o_basis();
    auto g = dual_basis(f);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK((f[i] * g[j].conj()).trace() == QuadElem(i == j ? 1 : 0));
    Quat g1(qw(1, 2, 0, 1), QuadElem(0), qw(-1, 10, -3, 10), QuadElem(0));
    CHECK(g[0] == g1);
    CHECK(O.dual().dual() == O);
}

TEST_CASE("reduced discriminants of O' and O") {
    auto drp = reduced_discriminant(order_oprime());
    CHECK(drp == SmoothIdeal{1, 1, 1});  // p2 p3 p5
    auto dr = reduced_discriminant(order_o());
    CHECK(dr == SmoothIdeal{1, 1, 2});  // (p2 p3) . 5
    auto v = smooth_valuations(gram_determinant(order_o()));
    CHECK(v == SmoothIdeal{2 * dr.e2, 2 * dr.e3, 2 * dr.e5});
}

TEST_CASE("ternary form of O matches the printed coefficients and splits mod p5") {
    auto te = ternary_form_and_eichler(order_o());
    CHECK(te.eichler_at_5 == 1);
    // printed basis h1, h2, h3 of O* cap B_0
    Quat h1(QuadElem(0), qw(2, 6, -1, 6), QuadElem(0), QuadElem(0));
    Quat h2(QuadElem(0), QuadElem(0), qw(-1, 5, -3, 5), QuadElem(0));
    Quat h3(QuadElem(0), qw(-3, 12, 2, 12), qw(1, 5, 1, 5), qw(1, 60, 1, 60));
    auto mine = Lattice4::from_generators({te.basis[0], te.basis[1], te.basis[2], Quat::one()});
    auto theirs = Lattice4::from_generators({h1, h2, h3, Quat::one()});
    CHECK(mine == theirs);
    auto q = ternary_form_on({h1, h2, h3}, QuadElem(5));
    CHECK(q.diag[0] == qw(25, 6, -15, 6));            // (5/6)(5-3w)
    CHECK(q.diag[1] == QuadElem(QuadInt{3, 4}));      // 3+4w
    CHECK(q.diag[2] == qw(20, 6, -5, 6));             // (5/6)(4-w)
    CHECK(q.cross[1] == qw(-40, 6, 25, 6));           // (5/6)(-8+5w) X1X3
    CHECK(q.cross[2] == QuadElem(QuadInt{-2, -4}));   // -2(1+2w) X2X3
    CHECK(q.cross[0] == QuadElem(0));
    CHECK(classify_ternary_mod5(q) == 1);
}

TEST_CASE("mass, class number, type number") {
    auto dr = reduced_discriminant(order_o());
    std::map<std::string, int> eich{{"p2", -1}, {"p3", -1}, {"p5", 1}};
    Rat m = mass_formula(dr, eich);
    CHECK(m == 12);
    eich["p5"] = 0;
    CHECK(mass_formula(dr, eich) == Rat(48, 5));
    SmoothIdeal dr2{dr.e2, dr.e3, dr.e5 + 2};
    eich["p5"] = 1;
    CHECK(mass_formula(dr2, eich) == 25 * mass_formula(dr, eich));  // Nr scales by Nr(p5)^2

    auto ct = class_and_type(Rat(12));
    CHECK(ct.h == 12);
    CHECK(ct.t == 3);
    ClassTypeData bad;
    bad.embedding_numbers["p5"] = 2;
    CHECK(class_and_type(Rat(12), bad).h != 12);
    CHECK(ct.t * ClassTypeData{}.local_index_product == Rat(12));
}
