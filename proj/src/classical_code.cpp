// SPDX-License-Identifier: Apache-2.0
#include "codemeas/classical_code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace codemeas {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f) {
        if (q % f == 0) return false;
    }
    return true;
}

}  // namespace

ClassicalCode::ClassicalCode(int q, std::vector<Word> codewords) : q_(q), codewords_(std::move(codewords)) {
    if (q_ < 2) {
        throw std::invalid_argument("ClassicalCode: alphabet size must be >= 2, got " + std::to_string(q_));
    }
    if (codewords_.empty()) {
        throw std::invalid_argument("ClassicalCode: at least one codeword required");
    }
    n_ = static_cast<int>(codewords_.front().size());
    if (n_ < 1) {
        throw std::invalid_argument("ClassicalCode: block length must be >= 1");
    }
    for (const Word& w : codewords_) {
        if (static_cast<int>(w.size()) != n_) {
            throw std::invalid_argument("ClassicalCode: codeword length mismatch (expected " + std::to_string(n_) +
                                        ", got " + std::to_string(w.size()) + ")");
        }
        for (int s : w) {
            if (s < 0 || s >= q_) {
                throw std::invalid_argument("ClassicalCode: symbol " + std::to_string(s) +
                                            " out of range for q=" + std::to_string(q_));
            }
        }
    }
    std::set<Word> seen;
    for (const Word& w : codewords_) {
        if (!seen.insert(w).second) {
            throw std::invalid_argument("ClassicalCode: duplicate codeword " + word_to_string(w, q_));
        }
    }
    if (size() >= 2) {
        int best = n_ + 1;
        for (std::size_t i = 0; i < codewords_.size(); ++i) {
            for (std::size_t j = i + 1; j < codewords_.size(); ++j) {
                best = std::min(best, hamming_distance(codewords_[i], codewords_[j]));
            }
        }
        min_distance_ = best;
    }
}

ClassicalCode ClassicalCode::repetition(int q, int t) {
    if (q < 2) throw std::invalid_argument("repetition: q must be >= 2");
    if (t < 0) throw std::invalid_argument("repetition: t must be >= 0");
    const int n = 2 * t + 1;
    std::vector<Word> words;
    words.reserve(q);
    for (int s = 0; s < q; ++s) {
        words.emplace_back(n, s);
    }
    return ClassicalCode(q, std::move(words));
}

ClassicalCode ClassicalCode::linear(int q, const std::vector<Word>& generators) {
    if (!is_prime(q)) {
        throw std::invalid_argument("linear: alphabet size " + std::to_string(q) +
                                    " is not prime; only prime fields are supported");
    }
    if (generators.empty()) {
        throw std::invalid_argument("linear: at least one generator required");
    }
    const std::size_t n = generators.front().size();
    for (const Word& g : generators) {
        if (g.size() != n) throw std::invalid_argument("linear: generator length mismatch");
        for (int s : g) {
            if (s < 0 || s >= q) throw std::invalid_argument("linear: generator symbol out of range");
        }
    }
    const int g = static_cast<int>(generators.size());
    long total = 1;
    for (int i = 0; i < g; ++i) {
        total *= q;
        if (total > (1L << 22)) {
            throw std::invalid_argument("linear: q^generators too large to enumerate");
        }
    }

    // coefficient tuples by (weight, lex) so that generators precede sums
    std::vector<std::vector<int>> coeffs;
    coeffs.reserve(total);
    std::vector<int> c(g, 0);
    for (long it = 0; it < total; ++it) {
        coeffs.push_back(c);
        for (int i = g - 1; i >= 0; --i) {
            if (++c[i] < q) break;
            c[i] = 0;
        }
    }
    std::stable_sort(coeffs.begin(), coeffs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int wa = 0, wb = 0;
        for (int x : a) wa += (x != 0);
        for (int x : b) wb += (x != 0);
        if (wa != wb) return wa < wb;
        return a < b;
    });

    std::vector<Word> words;
    words.reserve(total);
    std::set<Word> seen;
    for (const auto& coeff : coeffs) {
        Word w(n, 0);
        for (int i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                w[j] = (w[j] + coeff[i] * generators[i][j]) % q;
            }
        }
        if (!seen.insert(w).second) {
            throw std::invalid_argument("linear: generators are linearly dependent (rank < " + std::to_string(g) +
                                        ")");
        }
        words.push_back(std::move(w));
    }
    return ClassicalCode(q, std::move(words));
}

ClassicalCode ClassicalCode::c6() {
    // generated by 100011, 010101, 001110; the label order below is load-bearing
    std::vector<Word> words = {
        {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 0},
        {1, 1, 0, 1, 1, 0}, {1, 0, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 1}, {1, 1, 1, 0, 0, 0},
    };
    return ClassicalCode(2, std::move(words));
}

ClassicalCode ClassicalCode::load(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line()) {
        throw std::runtime_error("code file line 1: missing header \"q n M\"");
    }
    int q = 0, n = 0, m = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> q >> n >> m)) {
            throw std::runtime_error("code file line " + std::to_string(lineno) + ": expected header \"q n M\"");
        }
    }
    if (q < 2 || n < 1 || m < 1) {
        throw std::runtime_error("code file line " + std::to_string(lineno) + ": invalid header values");
    }
    std::vector<Word> words;
    words.reserve(m);
    for (int k = 0; k < m; ++k) {
        if (!next_line()) {
            throw std::runtime_error("code file line " + std::to_string(lineno + 1) + ": expected " +
                                     std::to_string(m) + " codewords, found " + std::to_string(k));
        }
        std::istringstream row(line);
        Word w;
        int s;
        while (row >> s) w.push_back(s);
        if (static_cast<int>(w.size()) != n) {
            throw std::runtime_error("code file line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                     " symbols, got " + std::to_string(w.size()));
        }
        for (int sym : w) {
            if (sym < 0 || sym >= q) {
                throw std::runtime_error("code file line " + std::to_string(lineno) + ": symbol " +
                                         std::to_string(sym) + " out of range for q=" + std::to_string(q));
            }
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i] == w) {
                throw std::runtime_error("code file line " + std::to_string(lineno) + ": duplicate codeword " +
                                         word_to_string(w, q));
            }
        }
        words.push_back(std::move(w));
    }
    return ClassicalCode(q, std::move(words));
}

ClassicalCode ClassicalCode::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open code file: " + path);
    }
    return load(in);
}

void ClassicalCode::save(std::ostream& out) const {
    out << q_ << ' ' << n_ << ' ' << size() << '\n';
    for (const Word& w : codewords_) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << w[i];
        }
        out << '\n';
    }
}

const Word& ClassicalCode::codeword(int k) const {
    if (k < 1 || k > size()) {
        throw std::out_of_range("codeword index " + std::to_string(k) + " outside 1.." + std::to_string(size()));
    }
    return codewords_[static_cast<std::size_t>(k) - 1];
}

bool ClassicalCode::contains(const Word& w) const {
    return std::find(codewords_.begin(), codewords_.end(), w) != codewords_.end();
}

int ClassicalCode::min_distance() const {
    if (min_distance_ < 0) {
        throw std::domain_error("min_distance: undefined for a single-codeword code");
    }
    return min_distance_;
}

int ClassicalCode::error_radius() const { return (min_distance() - 1) / 2; }

DecodeResult ClassicalCode::decode_nearest(const Word& y) const {
    if (static_cast<int>(y.size()) != n_) {
        throw std::invalid_argument("decode_nearest: word length " + std::to_string(y.size()) + " != block length " +
                                    std::to_string(n_));
    }
    for (int s : y) {
        if (s < 0 || s >= q_) {
            throw std::invalid_argument("decode_nearest: symbol " + std::to_string(s) + " out of range for q=" +
                                        std::to_string(q_));
        }
    }
    DecodeResult out;
    int best = n_ + 1;
    for (int k = 0; k < size(); ++k) {
        const int d = hamming_distance(y, codewords_[k]);
        if (d < best) {
            best = d;
            out.index = k + 1;
            if (d == 0) break;
        }
    }
    out.distance = best;
    const int radius = (min_distance_ >= 0) ? (min_distance_ - 1) / 2 : 0;
    out.beyond_radius = best > radius;
    return out;
}

}  // namespace codemeas
