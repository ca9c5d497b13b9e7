// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "codemeas/classical_code.hpp"

using namespace codemeas;

namespace {

// independent oracle: linear-scan nearest codeword with smallest-index ties
std::pair<int, int> brute_nearest(const ClassicalCode& code, const Word& y) {
    int best_k = 0, best_d = 1 << 20;
    for (int k = 1; k <= code.size(); ++k) {
        int d = 0;
        const Word& x = code.codeword(k);
        for (std::size_t i = 0; i < y.size(); ++i) d += (y[i] != x[i]) ? 1 : 0;
        if (d < best_d) {
            best_d = d;
            best_k = k;
        }
    }
    return {best_k, best_d};
}

// all words within Hamming distance 1 of w (over alphabet q), w included
std::vector<Word> ball_radius_one(const Word& w, int q) {
    std::vector<Word> ball{w};
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (int s = 0; s < q; ++s) {
            if (s == w[i]) continue;
            Word y = w;
            y[i] = s;
            ball.push_back(std::move(y));
        }
    }
    return ball;
}

}  // namespace

TEST_CASE("hamming distance") {
    CHECK(hamming_distance({0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1}) == 3);
    CHECK(hamming_distance({0, 1, 1, 0, 1, 1}, {1, 1, 1, 0, 0, 0}) == 3);
    const Word w = {1, 2, 0, 1};
    CHECK(hamming_distance(w, w) == 0);
    CHECK(hamming_distance({0, 1}, {1, 0}) == hamming_distance({1, 0}, {0, 1}));
    CHECK_THROWS_AS(hamming_distance({0, 1}, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("c6 shortened Hamming code") {
    const ClassicalCode c6 = ClassicalCode::c6();
    CHECK(c6.q() == 2);
    CHECK(c6.length() == 6);
    CHECK(c6.size() == 8);
    CHECK(c6.min_distance() == 3);
    CHECK(c6.error_radius() == 1);
    CHECK(word_to_string(c6.codeword(1)) == "000000");
    CHECK(word_to_string(c6.codeword(2)) == "100011");
    CHECK(word_to_string(c6.codeword(7)) == "011011");
    CHECK(word_to_string(c6.codeword(8)) == "111000");
    CHECK_THROWS_AS(c6.codeword(0), std::out_of_range);
    CHECK_THROWS_AS(c6.codeword(9), std::out_of_range);

    // same code as the span of its generators
    const ClassicalCode spanned = ClassicalCode::linear(2, {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 0}});
    CHECK(spanned.size() == 8);
    for (int k = 1; k <= 8; ++k) {
        CHECK(spanned.contains(c6.codeword(k)));
    }
}

TEST_CASE("decode_nearest on c6") {
    const ClassicalCode c6 = ClassicalCode::c6();

    // frozen values verified against the brute-force oracle
    const DecodeResult r1 = c6.decode_nearest(word_from_string("110011", 2));
    CHECK(r1.index == 2);
    CHECK(r1.distance == 1);
    CHECK_FALSE(r1.beyond_radius);
    CHECK(brute_nearest(c6, word_from_string("110011", 2)) == std::pair<int, int>{2, 1});

    const DecodeResult r2 = c6.decode_nearest(word_from_string("011011", 2));
    CHECK(r2.index == 7);
    CHECK(r2.distance == 0);

    // two errors on codeword 1 land nearer to codeword 8
    const DecodeResult r3 = c6.decode_nearest(word_from_string("110000", 2));
    CHECK(r3.index == 8);
    CHECK(r3.distance == 1);
    CHECK(brute_nearest(c6, word_from_string("110000", 2)) == std::pair<int, int>{8, 1});

    CHECK_THROWS_AS(c6.decode_nearest({0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(c6.decode_nearest({0, 1, 2, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("decoder ball property holds exhaustively for c6") {
    const ClassicalCode c6 = ClassicalCode::c6();
    int checked = 0;
    for (int k = 1; k <= c6.size(); ++k) {
        for (const Word& y : ball_radius_one(c6.codeword(k), 2)) {
            const DecodeResult r = c6.decode_nearest(y);
            CHECK(r.index == k);
            CHECK_FALSE(r.beyond_radius);
            ++checked;
        }
    }
    CHECK(checked == 8 * 7);
}

TEST_CASE("encode/decode round trip") {
    for (const ClassicalCode& code :
         {ClassicalCode::c6(), ClassicalCode::repetition(3, 2), ClassicalCode::linear(3, {{1, 2}})}) {
        for (int k = 1; k <= code.size(); ++k) {
            CHECK(code.decode_nearest(code.codeword(k)).index == k);
        }
    }
}

TEST_CASE("repetition codes") {
    const ClassicalCode bin = ClassicalCode::repetition(2, 1);
    CHECK(bin.size() == 2);
    CHECK(bin.contains({0, 0, 0}));
    CHECK(bin.contains({1, 1, 1}));
    CHECK(bin.min_distance() == 3);

    const ClassicalCode tern = ClassicalCode::repetition(3, 1);
    CHECK(tern.size() == 3);
    // brute-force pairwise distances
    int d = 1 << 20;
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) d = std::min(d, hamming_distance(tern.codeword(i), tern.codeword(j)));
    }
    CHECK(d == 3);
    CHECK(tern.min_distance() == 3);

    CHECK(ClassicalCode::repetition(2, 2).length() == 5);
    CHECK(ClassicalCode::repetition(2, 2).error_radius() == 2);

    for (int q = 2; q <= 5; ++q) {
        for (int t = 0; t <= 3; ++t) {
            CHECK(ClassicalCode::repetition(q, t).min_distance() == 2 * t + 1);
        }
    }
}

TEST_CASE("linear constructor") {
    const ClassicalCode z2 = ClassicalCode::linear(2, {{1, 1}});
    CHECK(z2.size() == 2);
    CHECK(z2.contains({0, 0}));
    CHECK(z2.contains({1, 1}));

    const ClassicalCode z3 = ClassicalCode::linear(3, {{1, 2}});
    CHECK(z3.size() == 3);
    CHECK(z3.contains({0, 0}));
    CHECK(z3.contains({1, 2}));
    CHECK(z3.contains({2, 1}));

    CHECK_THROWS_AS(ClassicalCode::linear(4, {{1, 1}}), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(ClassicalCode::linear(6, {{1, 1}}), std::invalid_argument);
    // dependent generators rejected
    CHECK_THROWS_AS(ClassicalCode::linear(2, {{1, 0, 1}, {1, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ClassicalCode::linear(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("linear closure under addition mod q") {
    for (int q : {2, 3, 5}) {
        const ClassicalCode code =
            q == 2 ? ClassicalCode::linear(2, {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}})
                   : ClassicalCode::linear(q, {{1, 2, 0}, {0, 1, 1}});
        for (int i = 1; i <= code.size(); ++i) {
            for (int j = 1; j <= code.size(); ++j) {
                Word sum(code.length());
                for (int c = 0; c < code.length(); ++c) {
                    sum[c] = (code.codeword(i)[c] + code.codeword(j)[c]) % q;
                }
                CHECK(code.contains(sum));
            }
        }
    }
}

TEST_CASE("code invariant violations") {
    CHECK_THROWS_AS(ClassicalCode(1, {{0, 0}}), std::invalid_argument);               // q too small
    CHECK_THROWS_AS(ClassicalCode(2, {}), std::invalid_argument);                     // empty
    CHECK_THROWS_AS(ClassicalCode(2, {{0, 1}, {0, 1}}), std::invalid_argument);       // duplicate
    CHECK_THROWS_AS(ClassicalCode(2, {{0, 1}, {0, 1, 1}}), std::invalid_argument);    // ragged
    CHECK_THROWS_AS(ClassicalCode(2, {{0, 2}}), std::invalid_argument);               // symbol range
    CHECK_THROWS_AS(ClassicalCode(2, {{0, 1}}).min_distance(), std::domain_error);    // M = 1
    CHECK_THROWS_AS(ClassicalCode(2, {{0, 1}}).error_radius(), std::domain_error);
}

TEST_CASE("code file round trip and validation") {
    const ClassicalCode c6 = ClassicalCode::c6();
    std::stringstream buffer;
    c6.save(buffer);
    const ClassicalCode reloaded = ClassicalCode::load(buffer);
    CHECK(reloaded.q() == 2);
    CHECK(reloaded.codewords() == c6.codewords());

    std::stringstream dup("2 3 2\n0 0 0\n0 0 0\n");
    CHECK_THROWS_WITH_AS(ClassicalCode::load(dup), doctest::Contains("line 3"), std::runtime_error);

    std::stringstream short_row("2 3 1\n0 0\n");
    CHECK_THROWS_WITH_AS(ClassicalCode::load(short_row), doctest::Contains("line 2"), std::runtime_error);

    std::stringstream bad_symbol("2 2 1\n0 5\n");
    CHECK_THROWS_AS(ClassicalCode::load(bad_symbol), std::runtime_error);

    std::stringstream truncated("2 3 4\n0 0 0\n1 1 1\n");
    CHECK_THROWS_AS(ClassicalCode::load(truncated), std::runtime_error);
}
