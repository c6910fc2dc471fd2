#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <map>

#include "quintic/pointcount.hpp"

using namespace quintic;

namespace {

// independent oracle: plain modular arithmetic over a prime field
long p5_mod(long x1, long x2, long p) {
    auto m = [&](long v) { return ((v % p) + p) % p; };
    auto pw = [&](long x, int e) {
        long r = 1;
        for (int i = 0; i < e; ++i) r = m(r * x);
        return r;
    };
    long v = pw(x1, 5) + pw(x2, 5) - 5 * m(pw(x1, 3) * x2) - 5 * m(x1 * pw(x2, 3)) +
             5 * m(pw(x1, 2) * x2) + 5 * m(x1 * pw(x2, 2)) + 5 * pw(x1, 2) + 5 * pw(x2, 2) - 5 * x1 -
             5 * x2;
    return m(v);
}

std::vector<std::uint64_t> naive_histogram(long p) {
    std::vector<std::uint64_t> h(p, 0);
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) h[p5_mod(a, b, p)] += 1;
    return h;
}

std::uint64_t naive_resolved(long p) {
    auto h = naive_histogram(p);
    std::uint64_t affine = 0;
    for (auto v : h) affine += v * v;
    auto m = [&](long v) { return ((v % p) + p) % p; };
    std::map<long, long> buckets;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) {
            long d1 = m(5 * m(m(a * a) * m(a * a)) - 15 * m(m(a * a) * b) - 5 * m(m(b * b) * b) +
                        10 * m(a * b) + 5 * m(b * b) + 10 * a - 5);
            long d2 = m(5 * m(m(b * b) * m(b * b)) - 15 * m(a * m(b * b)) - 5 * m(m(a * a) * a) +
                        10 * m(a * b) + 5 * m(a * a) + 10 * b - 5);
            if (d1 == 0 && d2 == 0) buckets[p5_mod(a, b, p)] += 1;
        }
    std::uint64_t nodes = 0;
    for (auto& [v, n] : buckets) { (void)v; nodes += (std::uint64_t)n * n; }
    std::vector<std::uint64_t> g(p, 0);
    auto pw5 = [&](long x) {
        long r = 1;
        for (int i = 0; i < 5; ++i) r = m(r * x);
        return r;
    };
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) g[m(pw5(a) + pw5(b))] += 1;
    std::uint64_t sg = 0;
    for (auto v : g) sg += v * v;
    std::uint64_t infinity = (sg - 1) / (std::uint64_t)(p - 1);
    return affine + nodes * ((std::uint64_t)(p + 1) * (p + 1) - 1) + infinity;
}

}  // namespace

TEST_CASE("closed-form counts at q = 7 and q = 13") {
    FieldTable F7(7, 1);
    auto b7 = resolved_count(F7, true);
    CHECK(b7.resolved_total == 400);
    CHECK(b7.rational_nodes == 0);
    FieldTable F13(13, 1);
    CHECK(resolved_count(F13, true).resolved_total == 2380);
}

TEST_CASE("q = 2 mod 5: every P5 value hit exactly q times") {
    FieldTable F(7, 1);
    auto h = value_histogram(F);
    for (auto v : h) CHECK(v == 7);
    FieldTable F17(17, 1);
    for (auto v : value_histogram(F17)) CHECK(v == 17);
}

TEST_CASE("histogram and resolved count match the independent oracle at q = 11") {
    FieldTable F(11, 1);
    auto h = value_histogram(F);
    auto hn = naive_histogram(11);
    std::map<long, std::uint64_t> got;
    for (std::uint64_t s = 0; s < F.q; ++s) {
        auto c = F.coords((FieldTable::idx)s);
        got[(long)c[0]] = h[s];
    }
    for (long v = 0; v < 11; ++v) CHECK(got[v] == hn[v]);

    auto b = resolved_count(F, true);
    CHECK(b.rational_nodes == 104);
    CHECK(b.resolved_total == naive_resolved(11));
    // the count must be consistent with a_11 = -116 for some integer k (here k = 125)
    CHECK(1 + 1331 + 125 * (11 + 121) - (std::int64_t)b.resolved_total == -116);
}

TEST_CASE("oracle agreement at q = 19 and 31") {
    FieldTable F19(19, 1);
    auto b19 = resolved_count(F19, true);
    CHECK(b19.rational_nodes == 24);  // 19 = 4 mod 15
    CHECK(b19.resolved_total == naive_resolved(19));
    FieldTable F31(31, 1);
    auto b31 = resolved_count(F31, true);
    CHECK(b31.rational_nodes == 120);  // 31 = 1 mod 15
    CHECK(b31.resolved_total == naive_resolved(31));
}

TEST_CASE("node paths agree on prime powers") {
    for (auto [p, n] : {std::pair<int, int>{7, 2}, {11, 2}, {7, 1}, {13, 1}, {17, 1}, {19, 1},
                        {23, 1}, {29, 1}, {31, 1}}) {
        FieldTable F(p, n);
        CHECK_NOTHROW(rational_node_count(F, true));
    }
}

TEST_CASE("infinity count invariants") {
    for (auto [p, n] : {std::pair<int, int>{7, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {29, 1}}) {
        FieldTable F(p, n);
        CHECK(infinity_count(F) == F.q * F.q + F.q + 1);
    }
    FieldTable F11(11, 1);
    CHECK_NOTHROW(infinity_count(F11));
    FieldTable F31(31, 1);
    CHECK_NOTHROW(infinity_count(F31));
}

TEST_CASE("bad reduction rejected") {
    CHECK_THROWS(require_good_reduction(2));
    CHECK_THROWS(require_good_reduction(3));
    CHECK_THROWS(require_good_reduction(25));
    FieldTable F(2, 2);
    CHECK_THROWS(value_histogram(F));
}

TEST_CASE("count cache: idempotent, checksum verified") {
    auto tmp = std::filesystem::temp_directory_path() / "quintic_test_cache" / "counts.csv";
    std::filesystem::remove(tmp);
    {
        CountCache cache(tmp);
        std::size_t n1 = count_range({{7, 1}}, cache);
        CHECK(n1 == 1);
        CHECK(cache.get(7).resolved_total == 400);
        std::size_t n2 = count_range({{7, 1}}, cache);
        CHECK(n2 == 0);  // nothing recomputed
        std::size_t n3 = count_range({{7, 1}, {13, 1}, {23, 1}}, cache);
        CHECK(n3 == 2);
        for (auto q : {7, 13, 23}) {
            auto& b = cache.get(q);
            CHECK(b.resolved_total == (std::uint64_t)q * q * q + (std::uint64_t)q * q + q + 1);
        }
    }
    {
        CountCache cache(tmp);
        CHECK(cache.size() == 3);
        CHECK(cache.get(13).resolved_total == 2380);
    }
    {
        // corrupt one row; loading must pinpoint it
        std::ifstream in(tmp);
        std::string all, line;
        while (std::getline(in, line)) {
            if (line.substr(0, 2) == "13") line[5] = line[5] == '0' ? '1' : '0';
            all += line + "\n";
        }
        in.close();
        std::ofstream out(tmp, std::ios::trunc);
        out << all;
        out.close();
        CHECK_THROWS_WITH(CountCache(tmp), Catch::Matchers::ContainsSubstring("13"));
    }
    std::filesystem::remove(tmp);
}
