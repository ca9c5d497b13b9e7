// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_COMBINATORICS_HPP
#define CODEMEAS_COMBINATORICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>

#include "codemeas/classical_code.hpp"

namespace codemeas {

/// Volume of the q-ary Hamming ball of radius t in length n:
/// sum_{j=0}^{t} C(n,j) (q-1)^j, exact.
mpz_class ball_volume(int q, int n, int t);

/// log2 of ball_volume, for entropy-scale comparisons at large n.
double ball_volume_log2(int q, int n, int t);

/// (Gilbert-Varshamov lower, Hamming upper) bounds on the size of a
/// q-ary length-n code correcting t errors: (q^n/V(2t), q^n/V(t)) as reals.
/// Requires 2t <= n.
std::pair<double, double> sphere_packing_bounds(int q, int n, int t);

/// floor(q^n / V_{q,n}(t)): exact integer Hamming bound on A_q(n, 2t+1).
mpz_class hamming_bound(int q, int n, int t);

/// ceil(q^n / V_{q,n}(d-1)): exact integer Gilbert-Varshamov lower bound
/// on A_q(n, d).
mpz_class gilbert_varshamov_bound(int q, int n, int d);

/// q-ary entropy -x log_q x - (1-x) log_q(1-x) + x log_q(q-1) on [0,1],
/// with the 0 log 0 := 0 convention at both endpoints.
double q_ary_entropy(int q, double x);

struct SearchBudget {
    std::uint64_t max_nodes = 150'000'000;  // branch-and-bound nodes
    std::size_t max_vertices = 8192;        // adjacency-matrix cap
    int multistart_rounds = 400;            // randomized greedy warm starts
};

/// Outcome of a maximum-code-size search. `exact` means lower == upper was
/// proven; otherwise [lower, upper] brackets the true value. An exact or
/// lower-bound result carries a witness code attaining `lower` (unless the
/// value came from a counting argument at a scale where no code was built,
/// in which case `witness` is empty).
struct SearchCertificate {
    bool exact = false;
    long lower = 0;
    long upper = 0;
    std::optional<ClassicalCode> witness;
    std::uint64_t nodes_used = 0;
};

/// A_q(n,d): maximum number of codewords of a q-ary length-n code with
/// minimum distance >= d, by branch-and-bound maximum clique on the graph
/// whose vertices are words at weight >= d (one codeword fixed to all-zeros
/// by translation symmetry) and whose edges join pairs at distance >= d.
///
/// `target`, when set, allows the search to stop as soon as a code of that
/// size is found (the certificate is then a bracket unless the search also
/// finished). Exceeding the node budget yields a bracket, not an error.
/// Results are memoized process-wide.
SearchCertificate max_code_size(int q, int n, int d, const SearchBudget& budget = {},
                                std::optional<long> target = std::nullopt);

/// Greedy lexicographic code: scan all q^n words, keep those at distance
/// >= d from everything kept so far. Attains the Gilbert-Varshamov bound.
ClassicalCode greedy_code(int q, int n, int d);

/// Distance conventions for turning a correction radius t into a design
/// distance. `strict` is the 2t+1 a-decoder requirement; `even` (2t+2) is
/// the convention several published length tables follow.
enum class Convention { strict, even };
int convention_distance(Convention c, int t);
const char* convention_name(Convention c);

/// n_q(M,d): the smallest length admitting M codewords at distance d.
/// `exact` when every shorter length was certified infeasible and a
/// construction (or GV guarantee) certifies `n_upper`; otherwise
/// [n_lower, n_upper] brackets the answer.
struct LengthResult {
    bool exact = false;
    int n_lower = 0;
    int n_upper = 0;
    bool witness_available = false;
    std::optional<ClassicalCode> witness;
};

LengthResult min_length(int q, long M, int d, const SearchBudget& budget = {});

/// Asymptotic estimates (o(1) terms dropped; not certified at finite n) of
/// the number of q-ary observables needed for M outcomes at outcome-error
/// fraction epsilon: (log_q M / (1 - H_q(eps)), log_q M / (1 - H_q(2 eps))).
/// Requires 2*eps < (q-1)/q.
std::pair<double, double> asymptotic_length_bounds(int q, double M, double epsilon_frac);

}  // namespace codemeas

#endif
