// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_MEASUREMENT_HPP
#define CODEMEAS_MEASUREMENT_HPP

#include <functional>
#include <optional>
#include <span>
#include <variant>

#include "codemeas/observables.hpp"
#include "codemeas/rng.hpp"

namespace codemeas {

/// Exact Born probabilities tr[rho P_k] for every outcome, clipped at zero
/// and renormalized. Entries below -tolerance raise a domain error.
std::vector<double> outcome_probabilities(const QuantumState& state, const ProjectivePOVM& povm);

struct ProjectiveOutcome {
    int index = 0;  // 1-based outcome label
    double probability = 0.0;
    QuantumState post;
};

/// Samples one projective measurement: outcome k with probability
/// tr[rho P_k], post state P_k rho P_k / p_k. Deterministic given the PRNG.
ProjectiveOutcome measure_projective(const QuantumState& state, const ProjectivePOVM& povm, Prng& prng);

struct SequenceOutcome {
    Word word;                              // one symbol per observable, in position order
    QuantumState post;
    std::vector<double> step_probabilities;  // conditional probability of each sampled symbol
    double probability = 1.0;                // product of the above
};

/// Measures the observables in index order, collapsing after each outcome.
/// The final word is always a codeword of the set's code.
SequenceOutcome measure_sequence(const QuantumState& state, const ObservableSet& set, Prng& prng);

/// Same, measuring in the given order of observable indices (1-based). The
/// outcome word is still reported in position order. Commutation makes the
/// resulting distribution order-independent.
SequenceOutcome measure_sequence(const QuantumState& state, const ObservableSet& set, std::span<const int> order,
                                 Prng& prng);

/// Conditional collapse along a prescribed outcome word (no sampling);
/// `probability` is the Born probability of that branch. Throws if the
/// branch has zero probability.
SequenceOutcome measure_sequence_forced(const QuantumState& state, const ObservableSet& set, const Word& outcomes);

/// Conditional collapse of only the first observables, one per prefix
/// symbol. Used for partial-measurement walkthroughs.
SequenceOutcome collapse_prefix(const QuantumState& state, const ObservableSet& set, std::span<const int> prefix);

/// Corrupts at most `max_errors` symbols (chosen positions, or seeded random
/// positions when none are given), each to a uniformly random different
/// symbol. Positions are 1-based.
struct AdversarialNoise {
    int max_errors = 0;
    std::optional<std::vector<int>> positions;
};

/// Flips each symbol independently with the given probability, replacing it
/// uniformly with one of the q-1 other symbols.
struct IndependentNoise {
    double flip_probability = 0.0;
};

using NoiseModel = std::variant<AdversarialNoise, IndependentNoise>;

struct Injection {
    Word corrupted;
    std::vector<int> positions;  // 1-based, sorted
};

Injection inject_symbol_errors(const Word& clean, int q, const NoiseModel& model, Prng& prng);

/// Everything needed to audit one robust-measurement run. `guaranteed`
/// marks trials whose corruption count stayed within the code's correction
/// radius; on those, decoded_index == true_index always holds.
struct MeasurementTranscript {
    int true_index = 0;
    Word clean;
    Word corrupted;
    std::vector<int> error_positions;
    int decoded_index = 0;
    bool beyond_radius = false;
    bool guaranteed = false;
    bool success = false;
    double post_state_deviation = 0.0;  // ||tau - P_k rho P_k / p_k||
    std::vector<double> step_probabilities;
    QuantumState post;
};

MeasurementTranscript robust_measurement_trial(const QuantumState& state, const ObservableSet& set,
                                               const NoiseModel& model, Prng& prng);

struct CampaignStats {
    long trials = 0;
    long successes = 0;
    long guaranteed_trials = 0;
    long guaranteed_failures = 0;
    long beyond_radius = 0;
    std::vector<long> true_counts;     // by outcome label
    std::vector<long> decoded_counts;  // by decoded label
    double success_rate() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Runs seeded independent trials (trial i uses stream i of the master
/// seed, so results do not depend on scheduling). The optional sink sees
/// every transcript in trial order.
CampaignStats run_campaign(const QuantumState& state, const ObservableSet& set, const NoiseModel& model, long trials,
                           std::uint64_t seed,
                           const std::function<void(long, const MeasurementTranscript&)>& per_trial = {});

}  // namespace codemeas

#endif
