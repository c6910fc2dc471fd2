#include <random>
#include <set>
#include <catch2/catch_amalgamated.hpp>

#include "quintic/finite_field.hpp"

using namespace quintic;

TEST_CASE("F_7 basics: 3 generates") {
    FieldTable F(7, 1);
    CHECK(F.q == 7);
    // multiplicative group cyclic of order 6
    FieldTable::idx g = F.generator();
    std::set<std::uint64_t> seen;
    FieldTable::idx x = F.one();
    for (int i = 0; i < 6; ++i) {
        seen.insert(F.packed(x));
        x = F.mul(x, g);
    }
    CHECK(seen.size() == 6);
    CHECK(x == F.one());
}

TEST_CASE("F_49 Lagrange: x^48 = 1 for nonzero x") {
    FieldTable F(7, 2);
    CHECK(F.q == 49);
    for (std::uint64_t i = 0; i + 1 < F.q; ++i) CHECK(F.pow((FieldTable::idx)i, 48) == F.one());
}

TEST_CASE("sqrt5 exists in F_11 (4^2 = 5)") {
    FieldTable F(11, 1);
    CHECK(F.has_sqrt5());
    FieldTable::idx four = F.from_int(4);
    CHECK(F.mul(four, four) == F.from_int(5));
    FieldTable F7(7, 1);
    CHECK(!F7.has_sqrt5());  // 7 = +-2 mod 5
}

TEST_CASE("field axioms sampled, and Frobenius fixes exactly F_p") {
    for (auto [p, n] : {std::pair<int, int>{3, 3}, {5, 2}, {11, 2}, {13, 1}, {2, 4}}) {
        FieldTable F(p, n);
        std::mt19937 rng(p * 100 + n);
        std::uniform_int_distribution<std::uint64_t> d(0, F.q - 1);
        for (int t = 0; t < 50; ++t) {
            auto x = (FieldTable::idx)d(rng, decltype(d)::param_type{0, F.q - 1});
            auto y = (FieldTable::idx)d(rng, decltype(d)::param_type{0, F.q - 1});
            auto z = (FieldTable::idx)d(rng, decltype(d)::param_type{0, F.q - 1});
            CHECK(F.add(x, y) == F.add(y, x));
            CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
            CHECK(F.add(x, F.neg(x)) == F.zero());
            if (!F.is_zero(x)) CHECK(F.mul(x, F.inv(x)) == F.one());
            // Frobenius is additive
            CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
        }
        // fixed points of x -> x^p are exactly the prime field
        int fixed = 0;
        for (std::uint64_t i = 0; i < F.q; ++i)
            if (F.frobenius((FieldTable::idx)i) == (FieldTable::idx)i) ++fixed;
        CHECK(fixed == p);
    }
}

TEST_CASE("dickson_permutes gcd criterion with examples") {
    CHECK(dickson_permutes(5, 7));
    CHECK(!dickson_permutes(5, 11));  // gcd(5, 120) != 1 via q-1 = 10
    for (std::uint64_t q : {4ull, 7ull, 9ull, 11ull, 13ull}) CHECK(dickson_permutes(1, q));
}
