// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_OBSERVABLES_HPP
#define CODEMEAS_OBSERVABLES_HPP

#include <vector>

#include "codemeas/classical_code.hpp"
#include "codemeas/povm.hpp"

namespace codemeas {

/// Worst-case deviations of a built observable set from its defining
/// algebra. `product_identity` checks that for every codeword label k the
/// ordered product of per-step outcome projectors collapses to P_k exactly;
/// that identity is what makes sequential measurement of the observables
/// reproduce the underlying projective measurement.
struct ConsistencyReport {
    double commutators = 0.0;        // ||Q_i Q_j - Q_j Q_i||
    double spectrum = 0.0;           // eigenvalue distance from {0..q-1} integers
    double partition = 0.0;          // sum_z of outcome projectors vs identity, plus cross terms
    double product_identity = 0.0;   // prod_j P_{j, x_j^(k)} vs P_k
    std::vector<int> uninformative;  // observables from constant code columns (scalar multiples of I)
    double worst() const;
    bool pass(double tol) const { return worst() <= tol; }
};

/// The n commuting q-valued observables built from a code and a projective
/// POVM: Q_j = sum_k x_j^(k) P_k. Classical outcomes equal code symbols, so
/// decoding the outcome word recovers the projector label directly.
class ObservableSet {
  public:
    int count() const { return static_cast<int>(observables_.size()); }  // n
    int q() const { return code_.q(); }

    const ClassicalCode& code() const { return code_; }
    const ProjectivePOVM& povm() const { return povm_; }

    const Matrix& observable(int j) const;  // 1-based

    /// P_{j,z} = sum over k with x_j^(k) = z of P_k. For symbols never taken
    /// by column j this is the zero matrix. The q projectors of a given j
    /// partition the identity.
    const Matrix& outcome_projector(int j, int z) const;

    /// The consistency function f: outcome word -> projector label,
    /// realized by nearest-codeword decoding.
    DecodeResult consistency_map(const Word& y) const { return code_.decode_nearest(y); }

    friend ObservableSet build_observables(ClassicalCode code, ProjectivePOVM povm);

  private:
    ObservableSet(ClassicalCode code, ProjectivePOVM povm);
    ClassicalCode code_;
    ProjectivePOVM povm_;
    std::vector<Matrix> observables_;
    std::vector<std::vector<Matrix>> outcome_projectors_;  // [j][z]
};

/// Requires matching cardinality (codewords vs projectors). The returned
/// set is verified to commute pairwise and to have integer spectra in
/// {0..q-1} at the POVM tolerance.
ObservableSet build_observables(ClassicalCode code, ProjectivePOVM povm);

ConsistencyReport check_consistency(const ObservableSet& set);

}  // namespace codemeas

#endif
