#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "quintic/ideals.hpp"

using namespace quintic;

namespace {
const std::vector<std::string> kIdealXis = {"1", "2",   "2+w", "3-w", "3",     "3+w",
                                            "4-w", "4", "4+w", "4+2*w", "5", "10"};
// the published ideal theta table (all 144 entries)
const long kIdealTheta[12][12] = {
    {2, 0, 0, 0, 0, 4, 4, 2, 0, 0, 10, 20},  {0, 0, 10, 10, 0, 2, 2, 0, 4, 2, 18, 0},
    {0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 20, 10},  {0, 0, 2, 2, 0, 2, 2, 0, 4, 10, 0, 18},
    {0, 0, 2, 2, 0, 2, 2, 0, 4, 0, 10, 18},  {0, 0, 0, 0, 0, 2, 2, 0, 4, 2, 18, 10},
    {0, 0, 0, 0, 0, 2, 2, 0, 4, 2, 18, 10},  {0, 0, 0, 0, 0, 2, 2, 0, 4, 2, 18, 10},
    {0, 0, 2, 2, 0, 2, 2, 0, 4, 0, 10, 18},  {0, 0, 2, 2, 0, 2, 2, 0, 4, 0, 10, 18},
    {0, 0, 0, 0, 0, 2, 2, 0, 4, 2, 18, 10},  {0, 0, 2, 2, 0, 2, 2, 0, 4, 0, 10, 18}};
}  // namespace

TEST_CASE("the twelve ideals: norms and left-module closure") {
    auto& ideals = the_twelve_ideals();
    REQUIRE(ideals.size() == 12);
    CHECK(ideals[0].lattice == order_o());
    CHECK(ideals[1].norm_gen == QuadElem(QuadInt{2, 1}));   // I2 above 5
    CHECK(ideals[2].norm_gen == QuadElem(2));               // I3 above 2
    CHECK(ideals[9].norm_gen == QuadElem(7));               // I10 above 7
    // O I = I for each
    auto Ob = order_o().basis();
    for (auto& I : ideals) {
        for (auto& f : Ob)
            for (auto& v : I.lattice.basis()) CHECK(I.lattice.contains(f * v));
    }
}

TEST_CASE("ideal theta table reproduces the published one exactly") {
    auto& ideals = the_twelve_ideals();
    for (int i = 0; i < 12; ++i) {
        NormForm8 nf = norm_form(ideals[i]);
        for (int j = 0; j < 12; ++j) {
            long got = (long)enumerate_by_norm(nf, parse_quad(kIdealXis[j])).size();
            INFO("I" << i + 1 << " at " << kIdealXis[j]);
            CHECK(got == kIdealTheta[i][j]);
        }
    }
}

TEST_CASE("norm form basics at the unit ideal") {
    NormForm8 nf = norm_form(the_twelve_ideals()[0]);
    // e1 = the element 1 has Nr_S = 1
    std::array<long, 8> e1{};
    bool found = false;
    for (auto& v : enumerate_by_norm(nf, QuadElem(1))) {
        if (vector_to_quat(nf, v) == Quat::one()) { found = true; e1 = v; }
    }
    CHECK(found);
    CHECK(quadratic_value(nf.Q1, e1) == 1);
    CHECK(quadratic_value(nf.Q2, e1) == 0);
    // X has norm 6
    auto six = enumerate_by_norm(nf, QuadElem(6));
    bool has_x = false;
    for (auto& v : six)
        if (vector_to_quat(nf, v) == Quat::X()) has_x = true;
    CHECK(has_x);
    // Q1 positive definite: Cholesky succeeded (constructor would have thrown) and
    // all pivots positive
    for (auto& d : nf.chol_d) CHECK(d > 0);
}

TEST_CASE("right orders: consistency, discriminants, unit counts") {
    auto& ideals = the_twelve_ideals();
    for (auto& I : ideals) {
        Lattice4 Oj = right_order_checked(I);  // throws if the two routes disagree
        CHECK(Oj.is_ring());
        CHECK(reduced_discriminant(Oj) == SmoothIdeal{1, 1, 2});
        NormForm8 nf = norm_form(Oj, QuadElem(1));
        CHECK(enumerate_by_norm(nf, QuadElem(1)).size() == 2);  // e_j = 2
    }
    CHECK(right_order_checked(ideals[0]) == order_o());
}

TEST_CASE("conj(I) I has norm Nr(I)^2") {
    auto& ideals = the_twelve_ideals();
    for (auto& I : {ideals[1], ideals[5], ideals[9]}) {
        Lattice4 P = lattice_product(I.lattice.conjugated(), I.lattice);
        QuadElem n = P.norm_generator();
        QuadElem n2 = I.norm_gen * I.norm_gen;
        // equal up to a totally positive unit square
        QuadElem ratio = n * n2.inv();
        Rat nr = ratio.norm();
        CHECK(nr == 1);
        CHECK(ratio.totally_positive());
    }
}

TEST_CASE("theta invariance under unit squares and evenness") {
    auto& ideals = the_twelve_ideals();
    QuadElem w2 = QuadElem(QuadInt{1, 1});  // w^2
    std::mt19937 rng(3);
    for (int t = 0; t < 6; ++t) {
        auto& I = ideals[rng() % 12];
        NormForm8 nf = norm_form(I);
        QuadElem xi = QuadElem(QuadInt{(long)(rng() % 4 + 1), (long)(rng() % 2)});
        if (!xi.totally_positive()) continue;
        auto c1 = enumerate_by_norm(nf, xi).size();
        CHECK(c1 % 2 == 0);  // -1 acts freely
        auto c2 = enumerate_by_norm(nf, xi * w2 * w2).size();  // xi (w^2)^2
        CHECK(c1 == c2);
    }
}

TEST_CASE("same_class: reflexive, scaling invariant, distinguishes the twelve") {
    auto& ideals = the_twelve_ideals();
    CHECK(same_class(ideals[0], ideals[0]));
    CHECK(same_class(ideals[4], ideals[4]));
    CHECK(!same_class(ideals[0], ideals[1]));
    // theta-equal but inequivalent: I6, I7, I8, I11 share a theta row
    CHECK(!same_class(ideals[5], ideals[6]));
    CHECK(!same_class(ideals[5], ideals[7]));
    CHECK(!same_class(ideals[5], ideals[10]));
    CHECK(!same_class(ideals[6], ideals[10]));
    // principal scaling stays in the class
    LeftIdeal wI2;
    wI2.lattice = ideals[1].lattice.scaled(QuadElem(QuadInt{0, 1}));
    wI2.norm_gen = wI2.lattice.norm_generator();
    CHECK(same_class(ideals[1], wI2));
    CHECK(same_class(wI2, ideals[1]));
}

TEST_CASE("classify_all: 12 classes, 3 types, expected buckets") {
    auto rep = classify_all();
    CHECK(rep.class_count == 12);
    CHECK(rep.type_count == 3);
    for (auto e : rep.unit_counts) CHECK(e == 2);
    // type partition: {1,2,3,4}, {5,8,11,12}, {6,7,9,10} (the paper's right-order
    // table rows 8 and 9 appear transposed; see the O5/O6 matrix checks)
    auto t = rep.type_of_right_order;
    CHECK(t[0] == t[1]);
    CHECK(t[1] == t[2]);
    CHECK(t[2] == t[3]);
    CHECK(t[4] == t[7]);
    CHECK(t[4] == t[10]);
    CHECK(t[4] == t[11]);
    CHECK(t[5] == t[6]);
    CHECK(t[5] == t[8]);
    CHECK(t[5] == t[9]);
    CHECK(t[0] != t[4]);
    CHECK(t[4] != t[5]);
    CHECK(t[0] != t[5]);
}

TEST_CASE("right orders of I5 and I6 equal the printed matrices") {
    auto& ideals = the_twelve_ideals();
    QuadElem r5 = QuadElem(QuadInt{2, 1}).inv();
    Lattice4 O5paper = Lattice4::from_generators({
        Quat(parse_quad("3+4*w"), QuadElem(0), QuadElem(0), QuadElem(0)).scaled(r5),
        Quat(QuadElem(0), parse_quad("5*w"), QuadElem(0), QuadElem(0)).scaled(r5),
        Quat(parse_quad("-3/2-2*w"), parse_quad("-1-3*w"), parse_quad("-5/2-5/2*w"), QuadElem(0))
            .scaled(r5),
        Quat(parse_quad("-7/2-11/2*w"), parse_quad("-1/2+w"), parse_quad("-1-3/2*w"),
             parse_quad("-1/2+1/2*w"))
            .scaled(r5),
    });
    QuadElem r6 = parse_quad("7-2*w").inv();
    Lattice4 O6paper = Lattice4::from_generators({
        Quat(parse_quad("-7+2*w"), QuadElem(0), QuadElem(0), QuadElem(0)).scaled(r6),
        Quat(QuadElem(0), parse_quad("39+73*w"), QuadElem(0), QuadElem(0)).scaled(r6),
        Quat(parse_quad("7/2-w"), parse_quad("19+30*w"), parse_quad("-23/2+11/2*w"), QuadElem(0))
            .scaled(r6),
        Quat(QuadElem(0), parse_quad("-19-55/2*w"), parse_quad("-4+2*w"), parse_quad("1/2+w"))
            .scaled(r6),
    });
    CHECK(right_order_checked(ideals[4]) == O5paper);
    CHECK(right_order_checked(ideals[5]) == O6paper);
}
