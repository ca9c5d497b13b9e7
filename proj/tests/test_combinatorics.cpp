// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "codemeas/combinatorics.hpp"

using namespace codemeas;

namespace {

// Independent oracle: exhaustive recursion over all q^n words, no symmetry
// reductions and no coloring bounds, so it shares nothing with the
// implementation path it checks. Only viable for tiny instances.
struct BruteSearch {
    int q, n, d;
    long total;
    int best = 0;

    int dist(long a, long b) const {
        int r = 0;
        while (a > 0 || b > 0) {
            r += (a % q != b % q) ? 1 : 0;
            a /= q;
            b /= q;
        }
        return r;
    }
    void recurse(long next, std::vector<long>& chosen) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (long w = next; w < total; ++w) {
            bool ok = true;
            for (long c : chosen) {
                if (dist(w, c) < d) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.push_back(w);
                recurse(w + 1, chosen);
                chosen.pop_back();
            }
        }
    }
    int run() {
        total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        std::vector<long> chosen;
        recurse(0, chosen);
        return best;
    }
};

int brute_max_code(int q, int n, int d) { return BruteSearch{q, n, d}.run(); }

}  // namespace

TEST_CASE("ball volume") {
    CHECK(ball_volume(2, 6, 1) == 7);
    CHECK(ball_volume(2, 6, 0) == 1);
    CHECK(ball_volume(5, 9, 0) == 1);
    CHECK(ball_volume(4, 9, 1) == 28);  // 1 + 9*3
    CHECK(ball_volume(2, 3, 3) == 8);   // whole space
    CHECK(ball_volume(3, 4, 4) == 81);
    CHECK_THROWS_AS(ball_volume(2, 4, 5), std::domain_error);
    CHECK_THROWS_AS(ball_volume(2, 4, -1), std::domain_error);

    // big-integer regime: V_{2,400}(40) needs ~184 bits
    const double log2v = ball_volume_log2(2, 400, 40);
    CHECK(log2v > 150.0);
    CHECK(log2v < 200.0);
}

TEST_CASE("sphere packing bounds") {
    const auto [lo, hi] = sphere_packing_bounds(2, 6, 1);
    CHECK(lo == doctest::Approx(64.0 / 22.0));
    CHECK(hi == doctest::Approx(64.0 / 7.0));

    const auto [lo2, hi2] = sphere_packing_bounds(2, 3, 1);
    CHECK(lo2 == doctest::Approx(1.0));
    CHECK(hi2 == doctest::Approx(2.0));

    CHECK_THROWS_AS(sphere_packing_bounds(2, 3, 2), std::domain_error);

    CHECK(hamming_bound(2, 6, 1) == 9);
    CHECK(gilbert_varshamov_bound(2, 6, 3) == 3);
}

TEST_CASE("q-ary entropy") {
    CHECK(q_ary_entropy(2, 0.5) == doctest::Approx(1.0));
    CHECK(q_ary_entropy(2, 0.0) == 0.0);
    CHECK(q_ary_entropy(3, 0.0) == 0.0);
    CHECK(q_ary_entropy(4, 0.75) == doctest::Approx(1.0));  // maximizer x = (q-1)/q
    CHECK(q_ary_entropy(2, 1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(q_ary_entropy(2, -0.1), std::domain_error);
    CHECK_THROWS_AS(q_ary_entropy(2, 1.1), std::domain_error);
}

TEST_CASE("exact search matches the exhaustive oracle") {
    // oracle values computed fresh each run, then also frozen as literals
    CHECK(brute_max_code(2, 3, 3) == 2);
    CHECK(brute_max_code(2, 4, 3) == 2);
    CHECK(brute_max_code(2, 5, 3) == 4);
    CHECK(brute_max_code(3, 3, 2) == 9);
    CHECK(brute_max_code(3, 3, 3) == 3);

    for (auto [q, n, d, expected] : std::vector<std::tuple<int, int, int, long>>{
             {2, 3, 3, 2}, {2, 4, 3, 2}, {2, 5, 3, 4}, {2, 6, 3, 8},
             {2, 4, 4, 2}, {2, 6, 4, 4}, {3, 3, 2, 9}, {3, 3, 3, 3}, {3, 4, 3, 9}}) {
        const SearchCertificate cert = max_code_size(q, n, d);
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(cert.exact);
        CHECK(cert.lower == expected);
        CHECK(cert.upper == expected);
        REQUIRE(cert.witness.has_value());
        CHECK(cert.witness->size() == expected);
        if (expected >= 2) {
            CHECK(cert.witness->min_distance() >= d);
        }
    }
}

TEST_CASE("c6 witnesses A_2(6,3) = 8") {
    const SearchCertificate cert = max_code_size(2, 6, 3);
    CHECK(cert.exact);
    CHECK(cert.lower == 8);
    const ClassicalCode c6 = ClassicalCode::c6();
    CHECK(c6.size() == 8);
    CHECK(c6.min_distance() == 3);
}

TEST_CASE("degenerate search parameters") {
    const SearchCertificate wide = max_code_size(2, 3, 7);  // d > n
    CHECK(wide.exact);
    CHECK(wide.lower == 1);

    const SearchCertificate all = max_code_size(2, 3, 1);  // every word
    CHECK(all.exact);
    CHECK(all.lower == 8);

    CHECK_THROWS_AS(max_code_size(1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(max_code_size(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_code_size(2, 3, 0), std::invalid_argument);
}

TEST_CASE("sandwich property on exactly searched triples") {
    for (auto [q, n, t] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 5, 1}, {2, 6, 1}, {3, 3, 1}}) {
        const SearchCertificate cert = max_code_size(q, n, 2 * t + 1);
        REQUIRE(cert.exact);
        CHECK(gilbert_varshamov_bound(q, n, 2 * t + 1) <= cert.lower);
        CHECK(cert.lower <= hamming_bound(q, n, t));
    }
}

TEST_CASE("monotonicity of searched values") {
    long prev = 0;
    for (int n = 3; n <= 7; ++n) {  // non-decreasing in n
        const SearchCertificate cert = max_code_size(2, n, 3);
        REQUIRE(cert.exact);
        CHECK(cert.lower >= prev);
        prev = cert.lower;
    }
    prev = 1L << 30;
    for (int d = 1; d <= 6; ++d) {  // non-increasing in d
        const SearchCertificate cert = max_code_size(2, 6, d);
        REQUIRE(cert.exact);
        CHECK(cert.lower <= prev);
        prev = cert.lower;
    }
}

TEST_CASE("search budget exhaustion yields a bracket, not an error") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    tiny.multistart_rounds = 0;
    const SearchCertificate cert = max_code_size(2, 8, 3, tiny);
    CHECK_FALSE(cert.exact);
    CHECK(cert.lower >= 2);
    CHECK(cert.upper >= cert.lower);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->min_distance() >= 3);
}

TEST_CASE("greedy code attains the GV bound") {
    for (auto [q, n, d] : std::vector<std::tuple<int, int, int>>{{2, 6, 3}, {2, 7, 3}, {3, 4, 3}}) {
        const ClassicalCode greedy = greedy_code(q, n, d);
        CHECK(greedy.min_distance() >= d);
        CHECK(mpz_class(greedy.size()) >= gilbert_varshamov_bound(q, n, d));
    }
}

TEST_CASE("min_length") {
    CHECK(convention_distance(Convention::strict, 1) == 3);
    CHECK(convention_distance(Convention::even, 1) == 4);

    const LengthResult r1 = min_length(2, 2, 3);
    CHECK(r1.exact);
    CHECK(r1.n_upper == 3);  // repetition length 2t+1

    const LengthResult r2 = min_length(2, 8, 3);
    CHECK(r2.exact);
    CHECK(r2.n_upper == 6);  // c6-sized: A_2(5,3)=4 rules out length 5
    REQUIRE(r2.witness.has_value());
    CHECK(r2.witness->size() >= 8);
    CHECK(r2.witness->min_distance() >= 3);

    const LengthResult r3 = min_length(2, 8, 4);
    CHECK(r3.exact);
    CHECK(r3.n_upper == 7);

    // repetition regime for several alphabets
    for (int q : {2, 3, 4}) {
        for (int t : {1, 2}) {
            const LengthResult r = min_length(q, q, 2 * t + 1);
            CHECK(r.exact);
            CHECK(r.n_upper == 2 * t + 1);
        }
    }

    CHECK_THROWS_AS(min_length(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_length(2, 4, 0), std::invalid_argument);
}

TEST_CASE("asymptotic length bounds") {
    const auto [lo0, hi0] = asymptotic_length_bounds(2, 16.0, 0.0);
    CHECK(lo0 == doctest::Approx(4.0));
    CHECK(hi0 == doctest::Approx(4.0));

    const double m = std::pow(2.0, 64);
    const auto [lo, hi] = asymptotic_length_bounds(2, m, 0.01);
    CHECK(lo == doctest::Approx(64.0 / (1.0 - q_ary_entropy(2, 0.01))));
    CHECK(lo <= hi);

    // lower <= upper across a parameter sweep
    for (double eps : {0.0, 0.02, 0.1}) {
        for (double mm : {4.0, 1e6}) {
            const auto [l, h] = asymptotic_length_bounds(2, mm, eps);
            CHECK(l <= h);
        }
    }
    CHECK_THROWS_AS(asymptotic_length_bounds(2, 8.0, 0.3), std::domain_error);  // 2 eps >= 1/2
}

TEST_CASE("entropy approximates normalized ball volume as n grows") {
    const double target = q_ary_entropy(2, 0.1);
    double prev = 1.0;
    for (int n : {50, 100, 200, 400}) {
        const int t = static_cast<int>(std::floor(0.1 * n));
        const double rate = ball_volume_log2(2, n, t) / n;
        const double gap = std::abs(rate - target);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 0.02);  // at n = 400
}
