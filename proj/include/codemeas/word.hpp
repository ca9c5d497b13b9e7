// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_WORD_HPP
#define CODEMEAS_WORD_HPP

#include <string>
#include <vector>

namespace codemeas {

/// A q-ary word: symbols in {0, ..., q-1}.
using Word = std::vector<int>;

/// Number of positions where y and z differ. Throws std::invalid_argument
/// when the lengths do not match.
int hamming_distance(const Word& y, const Word& z);

/// Number of nonzero symbols.
int hamming_weight(const Word& w);

/// Compact rendering: "011011" when q <= 10, space separated otherwise.
std::string word_to_string(const Word& w, int q = 2);

/// Parse "011011" (q <= 10) or "0 1 1 0 1 1". Symbols are validated against q.
Word word_from_string(const std::string& text, int q);

}  // namespace codemeas

#endif
