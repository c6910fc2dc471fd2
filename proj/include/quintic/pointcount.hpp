#pragma once

// Point counts over F_q for the singular threefold P5(x1,x2) = P5(x3,x4),
// its nodes, the locus at infinity, and the blown-up total.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "quintic/finite_field.hpp"

namespace quintic {

struct CountBreakdown {
    std::uint64_t q{0};
    std::uint64_t affine_singular_model{0};
    long rational_nodes{0};
    std::uint64_t infinity{0};
    std::uint64_t resolved_total{0};
};

inline void require_good_reduction(std::uint64_t q) {
    if (std::gcd<std::uint64_t>(q, 30) != 1)
        throw std::domain_error("bad reduction: gcd(q,30) != 1 for q = " + std::to_string(q));
}

// P5 as coefficients in x2 for fixed x1 (ids in the field table):
//   x2^5 + c3 x2^3 + c2 x2^2 + c1 x2 + c0
struct P5Row {
    FieldTable::idx c3, c2, c1, c0;
};

inline P5Row p5_row(const FieldTable& F, FieldTable::idx x1) {
    using idx = FieldTable::idx;
    idx five = F.from_int(5);
    idx x1sq = F.mul(x1, x1);
    idx x1cu = F.mul(x1sq, x1);
    idx x1p5 = F.mul(F.mul(x1sq, x1sq), x1);
    P5Row r;
    r.c3 = F.neg(F.mul(five, x1));
    r.c2 = F.mul(five, F.add(x1, F.one()));
    // c1 = -5 x1^3 + 5 x1^2 - 5
    r.c1 = F.mul(five, F.sub(F.sub(x1sq, x1cu), F.one()));
    // c0 = x1^5 + 5 x1^2 - 5 x1
    r.c0 = F.add(x1p5, F.mul(five, F.sub(x1sq, x1)));
    return r;
}

// full histogram of P5 over F_q x F_q, indexed by value_slot (exponent, q-1 = zero)
inline std::vector<std::uint64_t> p5_histogram(const FieldTable& F, int threads = 0) {
    using idx = FieldTable::idx;
    const std::uint64_t q = F.q;
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    if (threads <= 0) threads = 1;

    auto worker = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint32_t>& hist) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            idx x1 = (idx)i;
            P5Row r = p5_row(F, x1);
            for (std::uint64_t j = 0; j <= i; ++j) {
                idx x2 = (idx)j;
                idx t = F.mul(x2, x2);
                t = F.mul(F.add(t, r.c3), x2);
                t = F.mul(F.add(t, r.c2), x2);
                t = F.mul(F.add(t, r.c1), x2);
                t = F.add(t, r.c0);
                hist[t] += (j < i) ? 2 : 1;
            }
        }
    };

    // balance stripes: row i costs i+1; split by equal area
    std::vector<std::uint64_t> cuts{0};
    for (int t = 1; t < threads; ++t) {
        double frac = (double)t / threads;
        std::uint64_t c = (std::uint64_t)(q * std::sqrt(frac));
        cuts.push_back(std::min<std::uint64_t>(c, q));
    }
    cuts.push_back(q);

    std::vector<std::vector<std::uint32_t>> hists(threads, std::vector<std::uint32_t>(q, 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, cuts[t], cuts[t + 1], std::ref(hists[t]));
    for (auto& th : pool) th.join();

    std::vector<std::uint64_t> out(q, 0);
    for (auto& h : hists)
        for (std::uint64_t v = 0; v < q; ++v) out[v] += h[v];
    return out;
}

// [OP] value_histogram
inline std::vector<std::uint64_t> value_histogram(const FieldTable& F, int threads = 0) {
    require_good_reduction(F.q);
    auto h = p5_histogram(F, threads);
    std::uint64_t total = 0;
    for (auto v : h) total += v;
    if (total != F.q * F.q) throw std::logic_error("histogram mass mismatch");
    return h;
}

inline std::uint64_t sum_of_squares(const std::vector<std::uint64_t>& h) {
    std::uint64_t s = 0;
    for (auto v : h) s += v * v;
    return s;
}

// [OP] rational_node_count, path A: closed form by q mod 15
inline long rational_node_count_closed_form(std::uint64_t q) {
    require_good_reduction(q);
    switch (q % 15) {
        case 1: return 120;
        case 11: return 104;
        case 4: return 24;
        case 14: return 8;
        default: return 0;
    }
}

// path B: scan for simultaneous zeros of both partials, bucket by value
inline long rational_node_count_scan(const FieldTable& F) {
    using idx = FieldTable::idx;
    require_good_reduction(F.q);
    idx five = F.from_int(5), ten = F.from_int(10), fifteen = F.from_int(15);
    std::map<std::uint64_t, long> buckets;  // value slot -> number of critical points
    for (std::uint64_t i = 0; i < F.q; ++i) {
        idx x1 = (idx)i;
        idx x1sq = F.mul(x1, x1), x1cu = F.mul(x1sq, x1), x1q = F.mul(x1sq, x1sq);
        // dP/dx1 = -5 x2^3 + 5 x2^2 - 15 x1^2 x2 + 10 x1 x2 + (5 x1^4 + 10 x1 - 5)
        idx d3 = F.neg(five);
        idx d2 = five;
        idx d1 = F.sub(F.mul(ten, x1), F.mul(fifteen, x1sq));
        idx d0 = F.add(F.mul(five, x1q), F.sub(F.mul(ten, x1), five));
        // dP/dx2 = 5 x2^4 - 15 x1 x2^2 + (10 x1 + 10) x2 + (-5 x1^3 + 5 x1^2 - 5)
        idx e4 = five;
        idx e2 = F.neg(F.mul(fifteen, x1));
        idx e1 = F.add(F.mul(ten, x1), ten);
        idx e0 = F.sub(F.mul(five, x1sq), F.add(F.mul(five, x1cu), five));
        P5Row r = p5_row(F, x1);
        for (std::uint64_t j = 0; j < F.q; ++j) {
            idx x2 = (idx)j;
            idx g1 = F.add(F.mul(F.add(F.mul(F.add(F.mul(d3, x2), d2), x2), d1), x2), d0);
            if (!F.is_zero(g1)) continue;
            idx g2 = F.add(F.mul(F.add(F.mul(F.mul(e4, x2), x2), e2), F.mul(x2, x2)), F.add(F.mul(e1, x2), e0));
            if (!F.is_zero(g2)) continue;
            idx t = F.mul(x2, x2);
            t = F.mul(F.add(t, r.c3), x2);
            t = F.mul(F.add(t, r.c2), x2);
            t = F.mul(F.add(t, r.c1), x2);
            t = F.add(t, r.c0);
            buckets[F.value_slot(t)] += 1;
        }
    }
    long total = 0;
    for (auto& [v, n] : buckets) { (void)v; total += n * n; }
    return total;
}

inline long rational_node_count(const FieldTable& F, bool verify = false) {
    long a = rational_node_count_closed_form(F.q);
    if (verify) {
        long b = rational_node_count_scan(F);
        if (a != b)
            throw std::logic_error("node count paths disagree at q = " + std::to_string(F.q) + ": " +
                                   std::to_string(a) + " vs " + std::to_string(b));
    }
    return a;
}

// [OP] infinity_count: (sum_v g(v)^2 - 1) / (q - 1), g the histogram of x1^5 + x2^5
inline std::uint64_t infinity_count(const FieldTable& F) {
    require_good_reduction(F.q);
    const std::uint64_t q = F.q;
    auto c = F.fifth_power_counts();
    bool all_one = true;
    for (auto v : c)
        if (v != 1) { all_one = false; break; }
    std::uint64_t sum_sq = 0;
    if (all_one) {
        // x -> x^5 bijective, so g(v) = q identically and sum g^2 = q^3
        sum_sq = q * q * q;
    } else {
        // convolve over the support (zero and the fifth powers)
        std::vector<std::pair<FieldTable::idx, std::uint64_t>> supp;
        for (std::uint64_t s = 0; s < q; ++s)
            if (c[s] != 0) supp.push_back({(FieldTable::idx)s, c[s]});
        std::vector<std::uint64_t> g(q, 0);
        for (auto& [u1, m1] : supp)
            for (auto& [u2, m2] : supp) g[F.add(u1, u2)] += m1 * m2;
        for (auto v : g) sum_sq += v * v;
    }
    std::uint64_t numer = sum_sq - 1;
    if (numer % (q - 1) != 0) throw std::logic_error("infinity count not integral");
    return numer / (q - 1);
}

// [OP] resolved_count
inline CountBreakdown resolved_count(const FieldTable& F, bool verify_nodes = false, int threads = 0) {
    require_good_reduction(F.q);
    CountBreakdown b;
    b.q = F.q;
    b.affine_singular_model = sum_of_squares(p5_histogram(F, threads));
    b.rational_nodes = rational_node_count(F, verify_nodes);
    b.infinity = infinity_count(F);
    std::uint64_t blowup = (std::uint64_t)b.rational_nodes * ((F.q + 1) * (F.q + 1) - 1);
    b.resolved_total = b.affine_singular_model + blowup + b.infinity;
    return b;
}

// ---- persistent count cache (append-only CSV) ----

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string count_row_payload(const CountBreakdown& b) {
    std::ostringstream os;
    os << b.q << "," << b.affine_singular_model << "," << b.rational_nodes << "," << b.infinity << ","
       << b.resolved_total;
    return os.str();
}

class CountCache {
public:
    explicit CountCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

    bool has(std::uint64_t q) const { return rows_.count(q) > 0; }
    const CountBreakdown& get(std::uint64_t q) const { return rows_.at(q); }
    std::size_t size() const { return rows_.size(); }

    const CountBreakdown& get_or_compute(const FieldTable& F, int threads = 0) {
        auto it = rows_.find(F.q);
        if (it != rows_.end()) return it->second;
        CountBreakdown b = resolved_count(F, false, threads);
        append(b);
        return rows_.at(F.q);
    }

    void append(const CountBreakdown& b) {
        if (rows_.count(b.q)) return;
        rows_[b.q] = b;
        std::filesystem::create_directories(file_.parent_path());
        std::ofstream out(file_, std::ios::app);
        std::string payload = count_row_payload(b);
        out << payload << "," << fnv1a(payload) << "\n";
    }

private:
    std::filesystem::path file_;
    std::map<std::uint64_t, CountBreakdown> rows_;

    void load() {
        std::ifstream in(file_);
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream is(line);
            CountBreakdown b;
            char comma;
            std::uint64_t checksum;
            if (!(is >> b.q >> comma >> b.affine_singular_model >> comma >> b.rational_nodes >> comma >>
                  b.infinity >> comma >> b.resolved_total >> comma >> checksum))
                throw std::runtime_error("count cache: malformed row: " + line);
            if (fnv1a(count_row_payload(b)) != checksum)
                throw std::runtime_error("count cache: checksum mismatch at q = " + std::to_string(b.q) +
                                         " in row: " + line);
            rows_[b.q] = b;
        }
    }
};

// [OP] count_range
inline std::size_t count_range(const std::vector<std::pair<std::uint64_t, int>>& q_list, CountCache& cache,
                               int threads = 0) {
    std::size_t computed = 0;
    for (auto& [p, n] : q_list) {
        std::uint64_t q = 1;
        for (int i = 0; i < n; ++i) q *= p;
        if (cache.has(q)) continue;
        FieldTable F(p, n);
        cache.get_or_compute(F, threads);
        ++computed;
    }
    return computed;
}

}  // namespace quintic
