// SPDX-License-Identifier: Apache-2.0
#include "codemeas/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace codemeas {

namespace {

double real_trace_product(const Matrix& rho, const Matrix& p) {
    // tr[rho p] without forming the product
    return rho.cwiseProduct(p.transpose()).sum().real();
}

std::vector<double> clip_and_normalize(std::vector<double> probs, double tol) {
    double sum = 0.0;
    for (double& p : probs) {
        if (p < -tol) {
            throw std::domain_error("measurement: outcome probability " + std::to_string(p) +
                                    " below numerical floor");
        }
        p = std::max(p, 0.0);
        sum += p;
    }
    if (sum <= 0.0) {
        throw std::domain_error("measurement: all outcome probabilities vanish");
    }
    for (double& p : probs) p /= sum;
    return probs;
}

int sample_index(const std::vector<double>& probs, Prng& prng) {
    const double u = prng.uniform();
    double acc = 0.0;
    int last_nonzero = -1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > 0.0) last_nonzero = static_cast<int>(i);
        acc += probs[i];
        if (u < acc && probs[i] > 0.0) return static_cast<int>(i);
    }
    return last_nonzero;  // u landed on the tail of accumulated rounding
}

}  // namespace

std::vector<double> outcome_probabilities(const QuantumState& state, const ProjectivePOVM& povm) {
    if (state.dim() != povm.dim()) {
        throw std::invalid_argument("outcome_probabilities: state dim " + std::to_string(state.dim()) +
                                    " != POVM dim " + std::to_string(povm.dim()));
    }
    std::vector<double> probs(povm.size());
    for (int k = 1; k <= povm.size(); ++k) {
        probs[k - 1] = real_trace_product(state.rho(), povm.projector(k));
    }
    return clip_and_normalize(std::move(probs), povm.tolerance() * povm.dim());
}

ProjectiveOutcome measure_projective(const QuantumState& state, const ProjectivePOVM& povm, Prng& prng) {
    const std::vector<double> probs = outcome_probabilities(state, povm);
    const int k = sample_index(probs, prng) + 1;
    const Matrix& p = povm.projector(k);
    Matrix post = p * state.rho() * p;
    const double norm = post.trace().real();
    post /= norm;
    return ProjectiveOutcome{k, probs[static_cast<std::size_t>(k) - 1], QuantumState::unchecked(std::move(post))};
}

namespace {

SequenceOutcome run_sequence(const QuantumState& state, const ObservableSet& set, std::span<const int> order,
                             Prng* prng, const Word* forced) {
    const int q = set.q();
    const double tol = set.povm().tolerance() * set.povm().dim();
    Matrix rho = state.rho();
    SequenceOutcome out;
    out.word.assign(set.count(), -1);
    for (int j : order) {
        std::vector<double> probs(q);
        for (int z = 0; z < q; ++z) {
            probs[z] = real_trace_product(rho, set.outcome_projector(j, z));
        }
        probs = clip_and_normalize(std::move(probs), tol);
        int z;
        if (forced) {
            z = (*forced)[static_cast<std::size_t>(j) - 1];
            if (probs[z] <= 0.0) {
                throw std::domain_error("measure_sequence_forced: outcome " + std::to_string(z) + " for observable " +
                                        std::to_string(j) + " has zero probability");
            }
        } else {
            z = sample_index(probs, *prng);
        }
        const Matrix& proj = set.outcome_projector(j, z);
        rho = proj * rho * proj;
        rho /= rho.trace().real();
        out.word[static_cast<std::size_t>(j) - 1] = z;
        out.step_probabilities.push_back(probs[z]);
        out.probability *= probs[z];
    }
    out.post = QuantumState::unchecked(std::move(rho));
    return out;
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    return order;
}

}  // namespace

SequenceOutcome measure_sequence(const QuantumState& state, const ObservableSet& set, Prng& prng) {
    const auto order = identity_order(set.count());
    return run_sequence(state, set, order, &prng, nullptr);
}

SequenceOutcome measure_sequence(const QuantumState& state, const ObservableSet& set, std::span<const int> order,
                                 Prng& prng) {
    if (static_cast<int>(order.size()) != set.count()) {
        throw std::invalid_argument("measure_sequence: order must list every observable exactly once");
    }
    std::vector<bool> seen(set.count() + 1, false);
    for (int j : order) {
        if (j < 1 || j > set.count() || seen[j]) {
            throw std::invalid_argument("measure_sequence: invalid observable order");
        }
        seen[j] = true;
    }
    return run_sequence(state, set, order, &prng, nullptr);
}

SequenceOutcome measure_sequence_forced(const QuantumState& state, const ObservableSet& set, const Word& outcomes) {
    if (static_cast<int>(outcomes.size()) != set.count()) {
        throw std::invalid_argument("measure_sequence_forced: outcome word length mismatch");
    }
    const auto order = identity_order(set.count());
    return run_sequence(state, set, order, nullptr, &outcomes);
}

SequenceOutcome collapse_prefix(const QuantumState& state, const ObservableSet& set, std::span<const int> prefix) {
    if (static_cast<int>(prefix.size()) > set.count()) {
        throw std::invalid_argument("collapse_prefix: prefix longer than observable count");
    }
    Word padded(set.count(), 0);
    std::vector<int> order;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        padded[i] = prefix[i];
        order.push_back(static_cast<int>(i) + 1);
    }
    return run_sequence(state, set, order, nullptr, &padded);
}

Injection inject_symbol_errors(const Word& clean, int q, const NoiseModel& model, Prng& prng) {
    const int n = static_cast<int>(clean.size());
    Injection out;
    out.corrupted = clean;

    auto corrupt_at = [&](int pos) {  // 1-based
        const int old = out.corrupted[static_cast<std::size_t>(pos) - 1];
        int repl = static_cast<int>(prng.uniform_below(static_cast<std::uint64_t>(q) - 1));
        if (repl >= old) ++repl;
        out.corrupted[static_cast<std::size_t>(pos) - 1] = repl;
        out.positions.push_back(pos);
    };

    if (const auto* adv = std::get_if<AdversarialNoise>(&model)) {
        if (adv->max_errors < 0) throw std::invalid_argument("AdversarialNoise: negative error budget");
        if (adv->positions) {
            if (static_cast<int>(adv->positions->size()) > adv->max_errors) {
                throw std::invalid_argument("AdversarialNoise: more positions than the error budget allows");
            }
            std::vector<bool> used(n + 1, false);
            for (int pos : *adv->positions) {
                if (pos < 1 || pos > n) {
                    throw std::out_of_range("AdversarialNoise: position " + std::to_string(pos) + " outside 1.." +
                                            std::to_string(n));
                }
                if (used[pos]) throw std::invalid_argument("AdversarialNoise: repeated position");
                used[pos] = true;
                corrupt_at(pos);
            }
        } else {
            const int count = static_cast<int>(prng.uniform_below(static_cast<std::uint64_t>(adv->max_errors) + 1));
            std::vector<int> all(n);
            std::iota(all.begin(), all.end(), 1);
            for (int i = 0; i < count; ++i) {
                const int j = i + static_cast<int>(prng.uniform_below(static_cast<std::uint64_t>(n - i)));
                std::swap(all[i], all[j]);
                corrupt_at(all[i]);
            }
        }
    } else {
        const auto& ind = std::get<IndependentNoise>(model);
        if (ind.flip_probability < 0.0 || ind.flip_probability > 1.0) {
            throw std::invalid_argument("IndependentNoise: probability outside [0,1]");
        }
        for (int pos = 1; pos <= n; ++pos) {
            if (prng.uniform() < ind.flip_probability) corrupt_at(pos);
        }
    }
    std::sort(out.positions.begin(), out.positions.end());
    return out;
}

MeasurementTranscript robust_measurement_trial(const QuantumState& state, const ObservableSet& set,
                                               const NoiseModel& model, Prng& prng) {
    SequenceOutcome seq = measure_sequence(state, set, prng);
    Injection injected = inject_symbol_errors(seq.word, set.q(), model, prng);
    const DecodeResult clean_decode = set.code().decode_nearest(seq.word);
    const DecodeResult decoded = set.code().decode_nearest(injected.corrupted);

    MeasurementTranscript t;
    t.true_index = clean_decode.index;
    t.clean = std::move(seq.word);
    t.corrupted = std::move(injected.corrupted);
    t.error_positions = std::move(injected.positions);
    t.decoded_index = decoded.index;
    t.beyond_radius = decoded.beyond_radius;
    t.guaranteed = static_cast<int>(t.error_positions.size()) <= set.code().error_radius();
    t.success = (t.decoded_index == t.true_index);
    t.step_probabilities = std::move(seq.step_probabilities);

    const Matrix& p = set.povm().projector(t.true_index);
    Matrix reference = p * state.rho() * p;
    reference /= reference.trace().real();
    t.post_state_deviation = (seq.post.rho() - reference).norm();
    t.post = std::move(seq.post);
    return t;
}

CampaignStats run_campaign(const QuantumState& state, const ObservableSet& set, const NoiseModel& model, long trials,
                           std::uint64_t seed, const std::function<void(long, const MeasurementTranscript&)>& per_trial) {
    if (trials < 1) throw std::invalid_argument("run_campaign: trials must be >= 1");
    CampaignStats stats;
    stats.trials = trials;
    stats.true_counts.assign(set.code().size() + 1, 0);
    stats.decoded_counts.assign(set.code().size() + 1, 0);
    for (long i = 0; i < trials; ++i) {
        Prng prng(seed, static_cast<std::uint64_t>(i));
        const MeasurementTranscript t = robust_measurement_trial(state, set, model, prng);
        stats.successes += t.success ? 1 : 0;
        stats.guaranteed_trials += t.guaranteed ? 1 : 0;
        stats.guaranteed_failures += (t.guaranteed && !t.success) ? 1 : 0;
        stats.beyond_radius += t.beyond_radius ? 1 : 0;
        ++stats.true_counts[static_cast<std::size_t>(t.true_index)];
        ++stats.decoded_counts[static_cast<std::size_t>(t.decoded_index)];
        if (per_trial) per_trial(i, t);
    }
    return stats;
}

}  // namespace codemeas
