#include <algorithm>
#include <random>
#include <catch2/catch_amalgamated.hpp>

#include "quintic/quad.hpp"

using namespace quintic;

TEST_CASE("w has norm -1, trace 1, conjugate 1-w") {
    auto r = quad_norm_trace_conj(QuadElem(W()));
    CHECK(r.norm == -1);
    CHECK(r.trace == 1);
    CHECK(r.conj == QuadElem(QuadInt{1, -1}));
}

TEST_CASE("norm trace conj of 1 and 2+w") {
    auto r1 = quad_norm_trace_conj(QuadElem(QuadInt{1, 0}));
    CHECK(r1.norm == 1);
    CHECK(r1.trace == 2);
    CHECK(r1.conj == QuadElem(QuadInt{1, 0}));

    auto r2 = quad_norm_trace_conj(QuadElem(QuadInt{2, 1}));
    CHECK(r2.norm == 5);
    CHECK(r2.trace == 5);
    CHECK(r2.conj == QuadElem(QuadInt{3, -1}));
}

TEST_CASE("Z[w] norm form a^2+ab-b^2 on random samples") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int t = 0; t < 200; ++t) {
        QuadInt x{d(rng), d(rng)};
        CHECK(x * x.conj() == QuadInt{x.norm(), 0});
        CHECK(x.norm() == x.a * x.a + x.a * x.b - x.b * x.b);
    }
}

TEST_CASE("field arithmetic in Q(sqrt5)") {
    QuadElem x = qw(3, 2, -5, 7);  // 3/2 - 5/7 w
    QuadElem y = qw(1, 3, 2, 1);
    CHECK(x * y * x.inv() == y);
    CHECK((x + y) - y == x);
    CHECK(x * x.inv() == QuadElem(1));
    CHECK(x.conj().conj() == x);
    CHECK(x.norm() == (x * x.conj()).ra());
}

TEST_CASE("euclidean division and gcd in Z[w]") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int t = 0; t < 200; ++t) {
        QuadInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
        if (y.is_zero()) continue;
        auto [q, r] = divmod_nearest(x, y);
        CHECK(x == q * y + r);
        Int nr = r.norm(), ny = y.norm();
        if (nr < 0) nr = -nr;
        if (ny < 0) ny = -ny;
        CHECK(nr < ny);
        QuadInt g = quad_gcd(x, y);
        if (!g.is_zero()) {
            CHECK(divides(g, x));
            CHECK(divides(g, y));
        }
    }
}

TEST_CASE("tp_enumerate basics") {
    auto l1 = tp_enumerate(1);
    REQUIRE(l1.size() == 2);  // 1 and 1+w = w^2 both have a = 1
    CHECK(l1[0] == QuadInt{1, 0});
    CHECK(l1[1] == QuadInt{1, 1});

    auto l4 = tp_enumerate(4);
    auto has = [&](long a, long b) {
        return std::find(l4.begin(), l4.end(), QuadInt{a, b}) != l4.end();
    };
    CHECK(has(2, 1));   // 2+w
    CHECK(has(3, -1));  // 3-w
    CHECK(has(3, 1));
    CHECK(has(4, -1));
    CHECK(has(4, 1));
    CHECK(has(4, 2));
    for (auto& x : l4) {
        CHECK(x.sign_emb1() > 0);
        CHECK(x.sign_emb2() > 0);
    }
    // lexicographic by (a, b)
    for (size_t i = 1; i < l4.size(); ++i) {
        bool ordered = l4[i - 1].a < l4[i].a || (l4[i - 1].a == l4[i].a && l4[i - 1].b < l4[i].b);
        CHECK(ordered);
    }
}

TEST_CASE("normalize_tp picks the minimal totally positive associate") {
    // the prime above 5: (-1+2w) ~ 2+w
    CHECK(normalize_tp(QuadInt{-1, 2}) == QuadInt{2, 1});
    CHECK(normalize_tp(QuadInt{3, -1}) == QuadInt{2, 1});  // 3-w = (2+w) w^{-2}
    CHECK(normalize_tp(QuadInt{5, -1}) == QuadInt{4, 3});  // conjugate prime above 19
    CHECK(normalize_tp(QuadInt{7, 0}) == QuadInt{7, 0});
    for (long a : {2L, 3L, 7L}) {
        QuadInt x{a, 0};
        CHECK(normalize_tp(x * quad_w_pow(4)) == x);
        CHECK(normalize_tp(-(x * quad_w_pow(-2))) == x);
    }
}

TEST_CASE("serialization round trip") {
    for (auto s : {"1", "-3/2+5*w", "w", "-w", "2+w", "7/10-3/10*w", "0"}) {
        QuadElem x = parse_quad(s);
        CHECK(parse_quad(to_string(x)) == x);
    }
    CHECK(to_string(qw(0, 1, 1, 2)) == "1/2*w");
    CHECK(to_string(QuadElem(QuadInt{2, 1})) == "2+w");
}
