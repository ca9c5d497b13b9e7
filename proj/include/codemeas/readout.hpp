// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_READOUT_HPP
#define CODEMEAS_READOUT_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "codemeas/rng.hpp"

namespace codemeas {

/// Dispersive-coupling readout of one q-valued observable: the ancilla
/// coherent state |alpha> picks up a phase-space rotation of 2*pi*z/q when
/// the system sits in the eigenvalue-z subspace, and balanced homodyne
/// detection of both quadratures discriminates the q rotated amplitudes.
struct ReadoutConfig {
    int q = 2;
    std::complex<double> alpha{0.0, 0.0};
    double gamma = 1.0;  // coupling rate, arbitrary units
    double theta = 0.0;  // interaction time; theta * gamma * q = 2*pi

    static ReadoutConfig make(int q, std::complex<double> alpha, double gamma = 1.0);

    /// Soft check of the phase-resolution regime: 2*pi*|alpha|^2 > 10*q.
    bool distinguishable() const;
};

/// e^{-i 2 pi z / q} * alpha: the ancilla amplitude after reading symbol z.
std::complex<double> rotated_amplitude(const ReadoutConfig& cfg, int z);

/// One homodyne sample of both quadratures (x, p), Gaussian around
/// (sqrt(2) Re alpha', sqrt(2) Im alpha') with standard deviation 1/sqrt(2)
/// each, using the x = (a + a^dag)/sqrt(2) convention.
struct QuadratureSample {
    double x = 0.0;
    double p = 0.0;
};

QuadratureSample sample_quadratures(const ReadoutConfig& cfg, int z, Prng& prng);

/// Maximum-likelihood symbol estimate: the z whose rotated mean lies
/// nearest the sample in the quadrature plane; ties break toward smaller z.
/// Requires alpha != 0.
int classify_outcome(const ReadoutConfig& cfg, const QuadratureSample& sample);

struct MisclassificationEstimate {
    std::vector<double> per_symbol;  // Pr[estimate != z] for each prepared z
    double average = 0.0;
    long trials_per_symbol = 0;
};

/// Monte-Carlo misclassification rates over seeded trials per symbol.
MisclassificationEstimate estimate_misclassification(const ReadoutConfig& cfg, long trials, std::uint64_t seed);

/// Gaussian tail Phi(-2|alpha|): the exact binary misclassification rate
/// for real alpha, used as the analytic reference.
double binary_misclassification_rate(double alpha_magnitude);

}  // namespace codemeas

#endif
