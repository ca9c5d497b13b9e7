// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_RNG_HPP
#define CODEMEAS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace codemeas {

// Small counter-style PRNG (splitmix64). A master seed plus a stream id
// yields an independent stream, so campaigns can hand stream `i` to trial
// `i` and stay reproducible no matter how trials are scheduled.
class Prng {
  public:
    explicit Prng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {
        // decorrelate nearby (seed, stream) pairs
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be nonzero.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return x % n;
    }

    /// Standard normal deviate (Box-Muller, pair-cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace codemeas

#endif
