#include <catch2/catch_amalgamated.hpp>

#include "quintic/cyclo.hpp"

using namespace quintic;

TEST_CASE("zeta15 primitive relations") {
    CycloElem z = CycloElem::zeta(1);
    CycloElem p = CycloElem(Rat(1));
    for (int i = 0; i < 15; ++i) p *= z;
    CHECK(p == CycloElem(Rat(1)));
    CHECK(CycloElem::zeta(5) != CycloElem(Rat(1)));
    CHECK(CycloElem::zeta(3) != CycloElem(Rat(1)));
}

TEST_CASE("embedded subfield elements satisfy their equations") {
    CycloElem z5 = cyclo_zeta5(), z3 = cyclo_zeta3(), w = cyclo_w();
    CycloElem one(Rat(1));
    CycloElem z5p5 = z5 * z5 * z5 * z5 * z5;
    CHECK(z5p5 == one);
    CHECK(z3 * z3 * z3 == one);
    CHECK(w * w == w + one);
}

TEST_CASE("inverse and galois") {
    CycloElem x = CycloElem::zeta(1) + CycloElem(Rat(3, 7)) - CycloElem::zeta(11);
    CHECK(x * x.inv() == CycloElem(Rat(1)));
    // galois maps are automorphisms
    CycloElem y = CycloElem::zeta(2) - CycloElem(Rat(2)) * CycloElem::zeta(7);
    for (int k : {2, 4, 7, 8, 11, 13, 14}) {
        CHECK((x * y).galois(k) == x.galois(k) * y.galois(k));
        CHECK((x + y).galois(k) == x.galois(k) + y.galois(k));
    }
    // w is fixed exactly by k = 1 mod 5 and up to conjugate otherwise
    CycloElem w = cyclo_w();
    CHECK(w.galois(4) == w);
    CHECK(w.galois(11) == w);
    CHECK(w.galois(2) == CycloElem(Rat(1)) - w);  // sigma(w) = 1 - w
}

TEST_CASE("cyclo_from_quad is a field embedding") {
    QuadElem a = qw(2, 3, -1, 4), b = qw(1, 1, 5, 2);
    CHECK(cyclo_from_quad(a * b) == cyclo_from_quad(a) * cyclo_from_quad(b));
    CHECK(cyclo_from_quad(a + b) == cyclo_from_quad(a) + cyclo_from_quad(b));
}
