// SPDX-License-Identifier: Apache-2.0
#include "codemeas/qec_plan.hpp"

#include <cmath>
#include <stdexcept>

namespace codemeas {

int BinomialCodeParams::max_order() const { return std::max({g0, g1, 2 * k}); }

namespace {

void validate(const QecParams& params) {
    if (const auto* qc = std::get_if<QuditCodeParams>(&params)) {
        if (qc->p < 2 || qc->m < 1 || qc->k < 0) {
            throw std::invalid_argument("QuditCodeParams: require p >= 2, m >= 1, k >= 0");
        }
        if (qc->k > qc->m) {
            throw std::invalid_argument("QuditCodeParams: corrected errors k cannot exceed qudit count m");
        }
    } else if (const auto* bc = std::get_if<BinomialCodeParams>(&params)) {
        if (bc->g0 < 0 || bc->g1 < 0 || bc->k < 0) {
            throw std::invalid_argument("BinomialCodeParams: orders must be non-negative");
        }
    } else {
        const auto& ex = std::get<ExplicitPovmSize>(params);
        if (ex.size < 2) throw std::invalid_argument("ExplicitPovmSize: size must be >= 2");
    }
}

}  // namespace

mpz_class correctible_set_size(const QecParams& params) {
    validate(params);
    if (const auto* qc = std::get_if<QuditCodeParams>(&params)) {
        return ball_volume(qc->p * qc->p, qc->m, qc->k);
    }
    if (const auto* bc = std::get_if<BinomialCodeParams>(&params)) {
        return mpz_class(bc->g0 + bc->g1 + bc->k + 1);
    }
    throw std::domain_error("correctible_set_size: not applicable to an explicit POVM size");
}

PovmSizeBound povm_size_bound(const QecParams& params) {
    validate(params);
    if (const auto* ex = std::get_if<ExplicitPovmSize>(&params)) {
        return {mpz_class(ex->size), mpz_class(ex->size)};
    }
    const mpz_class k_size = correctible_set_size(params);
    return {k_size + 1, k_size};
}

SyndromePlan plan_syndrome_extraction(const QecParams& params, int t, int q, const SearchBudget& budget) {
    validate(params);
    if (t < 0) throw std::invalid_argument("plan_syndrome_extraction: t must be >= 0");
    if (q < 2) throw std::invalid_argument("plan_syndrome_extraction: q must be >= 2");

    SyndromePlan plan;
    plan.params = params;
    plan.bound = povm_size_bound(params);
    plan.correctible_size = std::holds_alternative<ExplicitPovmSize>(params) ? mpz_class(0)
                                                                             : correctible_set_size(params);
    if (!plan.bound.with_uncorrectible.fits_slong_p()) {
        throw std::domain_error("plan_syndrome_extraction: POVM size bound too large for exact planning");
    }
    plan.outcome_count = plan.bound.with_uncorrectible.get_si();
    plan.t = t;
    plan.q = q;
    plan.n_strict = min_length(q, plan.outcome_count, convention_distance(Convention::strict, t), budget);
    plan.n_even = min_length(q, plan.outcome_count, convention_distance(Convention::even, t), budget);

    int n_single = 0;
    {
        mpz_class cap = 1;
        while (cap < plan.outcome_count) {
            cap *= q;
            ++n_single;
        }
    }
    plan.n_single = n_single;
    plan.repetition_baseline = static_cast<long>(n_single) * (2L * t + 1L);
    return plan;
}

std::pair<double, double> syndrome_asymptotic_bounds(int p, int m, int k, double epsilon_frac, int q) {
    if (p < 2 || m < 1 || k < 1) {
        throw std::invalid_argument("syndrome_asymptotic_bounds: require p >= 2, m >= 1, k >= 1");
    }
    if (q < 2) throw std::invalid_argument("syndrome_asymptotic_bounds: q must be >= 2");
    const double rate = static_cast<double>(k) / m;
    if (2.0 * rate > 1.0) {
        throw std::domain_error("syndrome_asymptotic_bounds: 2k/m exceeds the entropy domain");
    }
    if (2.0 * epsilon_frac >= static_cast<double>(q - 1) / q || epsilon_frac < 0.0) {
        throw std::domain_error("syndrome_asymptotic_bounds: outcome-error fraction outside the entropy domain");
    }
    const int p2 = p * p;
    const double logq_p2 = std::log(static_cast<double>(p2)) / std::log(static_cast<double>(q));
    const double lower = m * q_ary_entropy(p2, rate) * logq_p2 / (1.0 - q_ary_entropy(q, epsilon_frac));
    const double upper = m * q_ary_entropy(p2, 2.0 * rate) * logq_p2 / (1.0 - q_ary_entropy(q, 2.0 * epsilon_frac));
    return {lower, upper};
}

}  // namespace codemeas
