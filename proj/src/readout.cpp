// SPDX-License-Identifier: Apache-2.0
#include "codemeas/readout.hpp"

#include <cmath>
#include <stdexcept>

namespace codemeas {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}  // namespace

ReadoutConfig ReadoutConfig::make(int q, std::complex<double> alpha, double gamma) {
    if (q < 2) throw std::invalid_argument("ReadoutConfig: q must be >= 2");
    if (gamma <= 0.0) throw std::invalid_argument("ReadoutConfig: gamma must be positive");
    ReadoutConfig cfg;
    cfg.q = q;
    cfg.alpha = alpha;
    cfg.gamma = gamma;
    cfg.theta = kTwoPi / (q * gamma);
    return cfg;
}

bool ReadoutConfig::distinguishable() const { return kTwoPi * std::norm(alpha) > 10.0 * q; }

std::complex<double> rotated_amplitude(const ReadoutConfig& cfg, int z) {
    if (z < 0 || z >= cfg.q) {
        throw std::out_of_range("rotated_amplitude: symbol " + std::to_string(z) + " outside 0.." +
                                std::to_string(cfg.q - 1));
    }
    const double angle = -cfg.theta * cfg.gamma * z;  // = -2 pi z / q
    return std::polar(1.0, angle) * cfg.alpha;
}

QuadratureSample sample_quadratures(const ReadoutConfig& cfg, int z, Prng& prng) {
    const std::complex<double> mean = rotated_amplitude(cfg, z);
    QuadratureSample s;
    s.x = std::sqrt(2.0) * mean.real() + kInvSqrt2 * prng.gaussian();
    s.p = std::sqrt(2.0) * mean.imag() + kInvSqrt2 * prng.gaussian();
    return s;
}

int classify_outcome(const ReadoutConfig& cfg, const QuadratureSample& sample) {
    if (std::norm(cfg.alpha) == 0.0) {
        throw std::domain_error("classify_outcome: alpha = 0 carries no phase information");
    }
    int best = 0;
    double best_dist2 = 0.0;
    for (int z = 0; z < cfg.q; ++z) {
        const std::complex<double> mean = rotated_amplitude(cfg, z);
        const double dx = sample.x - std::sqrt(2.0) * mean.real();
        const double dp = sample.p - std::sqrt(2.0) * mean.imag();
        const double dist2 = dx * dx + dp * dp;
        if (z == 0 || dist2 < best_dist2) {
            best = z;
            best_dist2 = dist2;
        }
    }
    return best;
}

MisclassificationEstimate estimate_misclassification(const ReadoutConfig& cfg, long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("estimate_misclassification: trials must be >= 1");
    MisclassificationEstimate est;
    est.trials_per_symbol = trials;
    est.per_symbol.assign(cfg.q, 0.0);
    for (int z = 0; z < cfg.q; ++z) {
        Prng prng(seed, static_cast<std::uint64_t>(z));
        long wrong = 0;
        for (long i = 0; i < trials; ++i) {
            const QuadratureSample s = sample_quadratures(cfg, z, prng);
            if (classify_outcome(cfg, s) != z) ++wrong;
        }
        est.per_symbol[z] = static_cast<double>(wrong) / trials;
        est.average += est.per_symbol[z];
    }
    est.average /= cfg.q;
    return est;
}

double binary_misclassification_rate(double alpha_magnitude) {
    // Phi(-2|alpha|): the two means sit 2*sqrt(2)|alpha| apart with sigma 1/sqrt(2),
    // so an error needs a Gaussian excursion past half the separation.
    return 0.5 * std::erfc(std::sqrt(2.0) * alpha_magnitude);
}

}  // namespace codemeas
