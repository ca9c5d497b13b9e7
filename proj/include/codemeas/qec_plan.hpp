// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_QEC_PLAN_HPP
#define CODEMEAS_QEC_PLAN_HPP

#include <variant>

#include "codemeas/combinatorics.hpp"

namespace codemeas {

/// A p-ary distance code on m qudits correcting k errors; the corrected
/// error set has size V_{p^2,m}(k).
struct QuditCodeParams {
    int p = 2;
    int m = 1;
    int k = 0;
};

/// A single-mode binomial code correcting g0 loss, g1 gain and k dephasing
/// orders; the corrected set has size g0 + g1 + k + 1.
struct BinomialCodeParams {
    int g0 = 0;
    int g1 = 0;
    int k = 0;
    int gap() const { return g0 + g1 + 1; }
    int max_order() const;  // max(g0, g1, 2k)
};

/// Syndrome-measurement outcome count given directly.
struct ExplicitPovmSize {
    long size = 0;
};

using QecParams = std::variant<QuditCodeParams, BinomialCodeParams, ExplicitPovmSize>;

/// |K|, the corrected-error-set size. Not applicable to ExplicitPovmSize.
mpz_class correctible_set_size(const QecParams& params);

/// Two bounds on the syndrome POVM size: at most one projector beyond the
/// correctible spaces gives |K|+1; the Knill-Laflamme argument gives |K|.
struct PovmSizeBound {
    mpz_class with_uncorrectible;  // |K| + 1 (the default planning bound)
    mpz_class knill_laflamme;      // |K|
};

PovmSizeBound povm_size_bound(const QecParams& params);

/// A robust syndrome-extraction plan: how many q-valued observables are
/// needed so that up to t errors on their classical outcomes still identify
/// the syndrome. Both distance conventions are planned side by side. The
/// repetition baseline is ceil(log_q M) observables measured 2t+1 times.
struct SyndromePlan {
    QecParams params;
    mpz_class correctible_size;  // 0 for explicit POVM sizes
    PovmSizeBound bound;
    long outcome_count = 0;  // M used for planning (the |K|+1 bound)
    int t = 0;
    int q = 2;
    LengthResult n_strict;
    LengthResult n_even;
    int n_single = 0;             // ceil(log_q M)
    long repetition_baseline = 0;  // n_single * (2t+1)
};

SyndromePlan plan_syndrome_extraction(const QecParams& params, int t, int q, const SearchBudget& budget = {});

/// Asymptotic observable-count estimates for p-ary qudit codes, composing
/// log_q |K| ~ m H_{p^2}(k/m) log_q(p^2) with the entropy-rate bounds.
/// Reconstructed estimates with o(1) terms dropped, not certified values.
std::pair<double, double> syndrome_asymptotic_bounds(int p, int m, int k, double epsilon_frac, int q);

}  // namespace codemeas

#endif
