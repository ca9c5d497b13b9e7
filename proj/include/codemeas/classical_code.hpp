// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_CLASSICAL_CODE_HPP
#define CODEMEAS_CLASSICAL_CODE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "codemeas/word.hpp"

namespace codemeas {

/// Result of nearest-codeword decoding. `index` is 1-based, matching the
/// labels k = 1..M used everywhere in this library. `beyond_radius` marks
/// words farther from every codeword than the guaranteed correction radius;
/// the decoded index is still the nearest codeword (smallest index on ties),
/// but no correctness promise attaches to it.
struct DecodeResult {
    int index = 0;
    int distance = 0;
    bool beyond_radius = false;
};

/// An arbitrary q-ary block code given by an explicit codeword list.
///
/// Codewords keep their construction order; the 1-based position of a word
/// in that list is its label. The minimum distance is computed once, by
/// brute force over all pairs, at construction.
class ClassicalCode {
  public:
    /// Validates: q >= 2, all words length n over {0..q-1}, no duplicates,
    /// at least one codeword.
    ClassicalCode(int q, std::vector<Word> codewords);

    /// q-ary repetition code of length 2t+1: the q constant words.
    static ClassicalCode repetition(int q, int t);

    /// All Z_q-linear combinations of the generators (q must be prime,
    /// generators must be independent). Codeword order: coefficient tuples
    /// enumerated by weight, then lexicographically, so single generators
    /// come before their sums.
    static ClassicalCode linear(int q, const std::vector<Word>& generators);

    /// The shortened Hamming code on 6 bits with 8 codewords and distance 3,
    /// in the fixed label order the observable construction relies on.
    static ClassicalCode c6();

    /// Text format: header "q n M", then M lines of n space-separated
    /// symbols. Parse errors carry a 1-based line number.
    static ClassicalCode load(std::istream& in);
    static ClassicalCode load_file(const std::string& path);
    void save(std::ostream& out) const;

    int q() const { return q_; }
    int length() const { return n_; }
    int size() const { return static_cast<int>(codewords_.size()); }

    /// Encoder E(k) = k-th codeword, k in 1..M.
    const Word& codeword(int k) const;
    const std::vector<Word>& codewords() const { return codewords_; }
    bool contains(const Word& w) const;

    /// Minimum pairwise Hamming distance. Throws std::domain_error for a
    /// single-codeword code.
    int min_distance() const;

    /// Guaranteed correction radius t = floor((d-1)/2).
    int error_radius() const;

    /// Nearest-codeword decoding; ties break toward the smallest index.
    /// This is an a-decoder for a = error_radius().
    DecodeResult decode_nearest(const Word& y) const;

  private:
    int q_ = 0;
    int n_ = 0;
    std::vector<Word> codewords_;
    int min_distance_ = -1;  // -1: undefined (M == 1)
};

}  // namespace codemeas

#endif
