// SPDX-License-Identifier: Apache-2.0
#include "codemeas/word.hpp"

#include <sstream>
#include <stdexcept>

namespace codemeas {

int hamming_distance(const Word& y, const Word& z) {
    if (y.size() != z.size()) {
        throw std::invalid_argument("hamming_distance: length mismatch (" +
                                    std::to_string(y.size()) + " vs " + std::to_string(z.size()) + ")");
    }
    int d = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        d += (y[i] != z[i]) ? 1 : 0;
    }
    return d;
}

int hamming_weight(const Word& w) {
    int n = 0;
    for (int s : w) {
        n += (s != 0) ? 1 : 0;
    }
    return n;
}

std::string word_to_string(const Word& w, int q) {
    std::string out;
    if (q <= 10) {
        out.reserve(w.size());
        for (int s : w) {
            out.push_back(static_cast<char>('0' + s));
        }
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

Word word_from_string(const std::string& text, int q) {
    Word w;
    const bool spaced = text.find(' ') != std::string::npos || q > 10;
    if (spaced) {
        std::istringstream in(text);
        int s;
        while (in >> s) {
            w.push_back(s);
        }
        if (!in.eof()) {
            throw std::invalid_argument("word_from_string: malformed symbol in \"" + text + "\"");
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("word_from_string: non-digit character in \"" + text + "\"");
            }
            w.push_back(c - '0');
        }
    }
    for (int s : w) {
        if (s < 0 || s >= q) {
            throw std::invalid_argument("word_from_string: symbol " + std::to_string(s) +
                                        " out of range for q=" + std::to_string(q));
        }
    }
    return w;
}

}  // namespace codemeas
