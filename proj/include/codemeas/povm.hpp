// SPDX-License-Identifier: Apache-2.0
#ifndef CODEMEAS_POVM_HPP
#define CODEMEAS_POVM_HPP

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace codemeas {

using Matrix = Eigen::MatrixXcd;

/// Frobenius-norm deviations of a projector family from a projective POVM.
/// All fields are worst cases over the family.
struct PovmValidation {
    double hermiticity = 0.0;    // ||P - P^dag||
    double idempotence = 0.0;    // ||P^2 - P||
    double orthogonality = 0.0;  // ||P_k P_l||, k != l
    double completeness = 0.0;   // ||sum P_k - I||
    double worst() const;
    bool pass(double tol) const { return worst() <= tol; }
};

/// Validation report for an arbitrary candidate list (matrices must be
/// square and share a dimension; that much is a hard error).
PovmValidation validate_projectors(const std::vector<Matrix>& projectors);

/// An ordered list of pairwise-orthogonal projectors summing to identity.
/// Construction validates within `tolerance` and throws on violation.
class ProjectivePOVM {
  public:
    explicit ProjectivePOVM(std::vector<Matrix> projectors, double tolerance = 1e-9);

    /// Rank-1 (or block) projectors onto consecutive groups of standard
    /// basis vectors; `ranks` must sum to the dimension.
    static ProjectivePOVM standard_basis(int dim, const std::vector<int>& ranks);

    /// A fixed random rank split of `dim` into `outcomes` positive parts,
    /// conjugated by a seeded Haar-style unitary (Gaussian QR).
    static ProjectivePOVM random(int dim, int outcomes, std::uint64_t seed);
    static ProjectivePOVM random(int dim, const std::vector<int>& ranks, std::uint64_t seed);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(projectors_.size()); }
    double tolerance() const { return tolerance_; }
    const Matrix& projector(int k) const;  // 1-based
    const std::vector<Matrix>& projectors() const { return projectors_; }
    int rank(int k) const;  // trace of the projector, rounded

    nlohmann::json to_json() const;
    static ProjectivePOVM from_json(const nlohmann::json& j);
    static ProjectivePOVM load_file(const std::string& path);
    void save_file(const std::string& path) const;

  private:
    int dim_ = 0;
    double tolerance_ = 1e-9;
    std::vector<Matrix> projectors_;
};

/// A density matrix: Hermitian, unit trace, positive semidefinite within
/// tolerance. Construction validates and throws on violation.
class QuantumState {
  public:
    /// Empty placeholder (dim 0); any real use requires assignment first.
    QuantumState() = default;

    explicit QuantumState(Matrix rho, double tolerance = 1e-9);

    static QuantumState maximally_mixed(int dim);
    /// Normalized seeded Wishart matrix G G^dag / tr — full rank.
    static QuantumState random(int dim, std::uint64_t seed);
    /// P / rank(P): the maximally mixed state on a projector's support.
    static QuantumState on_support(const Matrix& projector);
    /// Skips validation; for states produced by internal collapse steps.
    static QuantumState unchecked(Matrix rho);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Matrix& rho() const { return rho_; }

  private:
    struct unchecked_t {};
    QuantumState(Matrix rho, unchecked_t) : rho_(std::move(rho)) {}
    Matrix rho_;
};

/// Seeded Haar-style unitary via QR of a complex Gaussian matrix.
Matrix random_unitary(int dim, std::uint64_t seed);

}  // namespace codemeas

#endif
