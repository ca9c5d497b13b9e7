// SPDX-License-Identifier: Apache-2.0
#include "codemeas/povm.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "codemeas/rng.hpp"

namespace codemeas {

double PovmValidation::worst() const {
    return std::max({hermiticity, idempotence, orthogonality, completeness});
}

PovmValidation validate_projectors(const std::vector<Matrix>& projectors) {
    if (projectors.empty()) {
        throw std::invalid_argument("validate_projectors: empty projector list");
    }
    const Eigen::Index dim = projectors.front().rows();
    for (const Matrix& p : projectors) {
        if (p.rows() != p.cols() || p.rows() != dim) {
            throw std::invalid_argument("validate_projectors: projectors must be square and share one dimension");
        }
    }
    PovmValidation v;
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix& p : projectors) {
        v.hermiticity = std::max(v.hermiticity, (p - p.adjoint()).norm());
        v.idempotence = std::max(v.idempotence, (p * p - p).norm());
        sum += p;
    }
    for (std::size_t k = 0; k < projectors.size(); ++k) {
        for (std::size_t l = k + 1; l < projectors.size(); ++l) {
            v.orthogonality = std::max(v.orthogonality, (projectors[k] * projectors[l]).norm());
        }
    }
    v.completeness = (sum - Matrix::Identity(dim, dim)).norm();
    return v;
}

ProjectivePOVM::ProjectivePOVM(std::vector<Matrix> projectors, double tolerance)
    : tolerance_(tolerance), projectors_(std::move(projectors)) {
    if (tolerance_ < 0) throw std::invalid_argument("ProjectivePOVM: negative tolerance");
    const PovmValidation v = validate_projectors(projectors_);
    if (!v.pass(tolerance_)) {
        throw std::invalid_argument("ProjectivePOVM: projector family fails validation (worst deviation " +
                                    std::to_string(v.worst()) + " > tol " + std::to_string(tolerance_) + ")");
    }
    dim_ = static_cast<int>(projectors_.front().rows());
}

ProjectivePOVM ProjectivePOVM::standard_basis(int dim, const std::vector<int>& ranks) {
    int total = 0;
    for (int r : ranks) {
        if (r < 1) throw std::invalid_argument("standard_basis: ranks must be positive");
        total += r;
    }
    if (total != dim) throw std::invalid_argument("standard_basis: ranks must sum to dim");
    std::vector<Matrix> ps;
    ps.reserve(ranks.size());
    int offset = 0;
    for (int r : ranks) {
        Matrix p = Matrix::Zero(dim, dim);
        for (int i = 0; i < r; ++i) p(offset + i, offset + i) = 1.0;
        ps.push_back(std::move(p));
        offset += r;
    }
    return ProjectivePOVM(std::move(ps));
}

Matrix random_unitary(int dim, std::uint64_t seed) {
    Prng prng(seed);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = std::complex<double>(prng.gaussian(), prng.gaussian());
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const std::complex<double> rjj = r(j, j);
        const double mag = std::abs(rjj);
        if (mag > 0) q.col(j) *= rjj / mag;
    }
    return q;
}

ProjectivePOVM ProjectivePOVM::random(int dim, const std::vector<int>& ranks, std::uint64_t seed) {
    int total = 0;
    for (int r : ranks) total += r;
    if (total != dim) throw std::invalid_argument("ProjectivePOVM::random: ranks must sum to dim");
    const Matrix u = random_unitary(dim, seed);
    std::vector<Matrix> ps;
    ps.reserve(ranks.size());
    int offset = 0;
    for (int r : ranks) {
        const Matrix block = u.middleCols(offset, r);
        ps.push_back(block * block.adjoint());
        offset += r;
    }
    return ProjectivePOVM(std::move(ps));
}

ProjectivePOVM ProjectivePOVM::random(int dim, int outcomes, std::uint64_t seed) {
    if (outcomes < 1 || outcomes > dim) {
        throw std::invalid_argument("ProjectivePOVM::random: need 1 <= outcomes <= dim");
    }
    // random composition of dim into `outcomes` positive parts
    Prng prng(seed ^ 0xC0DEULL);
    std::vector<int> cuts;
    std::vector<int> all(dim - 1);
    for (int i = 0; i < dim - 1; ++i) all[i] = i + 1;
    for (int i = 0; i < outcomes - 1; ++i) {
        const int j = i + static_cast<int>(prng.uniform_below(all.size() - i));
        std::swap(all[i], all[j]);
        cuts.push_back(all[i]);
    }
    cuts.push_back(0);
    cuts.push_back(dim);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> ranks;
    for (std::size_t i = 1; i < cuts.size(); ++i) ranks.push_back(cuts[i] - cuts[i - 1]);
    return random(dim, ranks, seed);
}

const Matrix& ProjectivePOVM::projector(int k) const {
    if (k < 1 || k > size()) {
        throw std::out_of_range("projector index " + std::to_string(k) + " outside 1.." + std::to_string(size()));
    }
    return projectors_[static_cast<std::size_t>(k) - 1];
}

int ProjectivePOVM::rank(int k) const { return static_cast<int>(std::lround(projector(k).real().trace())); }

nlohmann::json ProjectivePOVM::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["dim"] = dim_;
    j["tolerance"] = tolerance_;
    nlohmann::json ps = nlohmann::json::array();
    for (const Matrix& p : projectors_) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) {
                rows.push_back({p(r, c).real(), p(r, c).imag()});
            }
        }
        ps.push_back(std::move(rows));
    }
    j["projectors"] = std::move(ps);
    return j;
}

ProjectivePOVM ProjectivePOVM::from_json(const nlohmann::json& j) {
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw std::invalid_argument("POVM json: dim must be >= 1");
    const double tol = j.contains("tolerance") ? j.at("tolerance").get<double>() : 1e-9;
    std::vector<Matrix> ps;
    for (const auto& flat : j.at("projectors")) {
        if (static_cast<int>(flat.size()) != dim * dim) {
            throw std::invalid_argument("POVM json: projector entry count != dim*dim");
        }
        Matrix p(dim, dim);
        int idx = 0;
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c, ++idx) {
                p(r, c) = std::complex<double>(flat[idx][0].get<double>(), flat[idx][1].get<double>());
            }
        }
        ps.push_back(std::move(p));
    }
    return ProjectivePOVM(std::move(ps), tol);
}

ProjectivePOVM ProjectivePOVM::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open POVM file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

void ProjectivePOVM::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open POVM file for writing: " + path);
    out << to_json().dump(2) << '\n';
}

QuantumState::QuantumState(Matrix rho, double tolerance) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
        throw std::invalid_argument("QuantumState: density matrix must be square");
    }
    if ((rho_ - rho_.adjoint()).norm() > tolerance) {
        throw std::invalid_argument("QuantumState: density matrix not Hermitian within tolerance");
    }
    if (std::abs(rho_.trace().real() - 1.0) > tolerance || std::abs(rho_.trace().imag()) > tolerance) {
        throw std::invalid_argument("QuantumState: trace differs from 1 beyond tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tolerance) {
        throw std::invalid_argument("QuantumState: negative eigenvalue beyond tolerance");
    }
}

QuantumState QuantumState::maximally_mixed(int dim) {
    return QuantumState::unchecked(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

QuantumState QuantumState::random(int dim, std::uint64_t seed) {
    Prng prng(seed ^ 0x57A7EULL);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = std::complex<double>(prng.gaussian(), prng.gaussian());
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return QuantumState::unchecked(std::move(rho));
}

QuantumState QuantumState::on_support(const Matrix& projector) {
    const double r = projector.real().trace();
    if (r < 0.5) throw std::invalid_argument("QuantumState::on_support: projector has rank 0");
    return QuantumState::unchecked(projector / r);
}

QuantumState QuantumState::unchecked(Matrix rho) { return QuantumState(std::move(rho), unchecked_t{}); }

}  // namespace codemeas
