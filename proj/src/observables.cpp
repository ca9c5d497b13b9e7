// SPDX-License-Identifier: Apache-2.0
#include "codemeas/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace codemeas {

double ConsistencyReport::worst() const {
    return std::max({commutators, spectrum, partition, product_identity});
}

ObservableSet::ObservableSet(ClassicalCode code, ProjectivePOVM povm)
    : code_(std::move(code)), povm_(std::move(povm)) {
    const int n = code_.length();
    const int q = code_.q();
    const int dim = povm_.dim();
    observables_.reserve(n);
    outcome_projectors_.assign(n, {});
    for (int j = 1; j <= n; ++j) {
        Matrix qj = Matrix::Zero(dim, dim);
        auto& per_symbol = outcome_projectors_[j - 1];
        per_symbol.assign(q, Matrix::Zero(dim, dim));
        for (int k = 1; k <= code_.size(); ++k) {
            const int symbol = code_.codeword(k)[j - 1];
            qj += static_cast<double>(symbol) * povm_.projector(k);
            per_symbol[symbol] += povm_.projector(k);
        }
        observables_.push_back(std::move(qj));
    }
}

const Matrix& ObservableSet::observable(int j) const {
    if (j < 1 || j > count()) {
        throw std::out_of_range("observable index " + std::to_string(j) + " outside 1.." + std::to_string(count()));
    }
    return observables_[static_cast<std::size_t>(j) - 1];
}

const Matrix& ObservableSet::outcome_projector(int j, int z) const {
    if (j < 1 || j > count()) {
        throw std::out_of_range("outcome_projector: observable index " + std::to_string(j) + " outside 1.." +
                                std::to_string(count()));
    }
    if (z < 0 || z >= q()) {
        throw std::out_of_range("outcome_projector: symbol " + std::to_string(z) + " outside 0.." +
                                std::to_string(q() - 1));
    }
    return outcome_projectors_[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(z)];
}

ObservableSet build_observables(ClassicalCode code, ProjectivePOVM povm) {
    if (code.size() != povm.size()) {
        throw std::invalid_argument("build_observables: codeword count " + std::to_string(code.size()) +
                                    " != projector count " + std::to_string(povm.size()));
    }
    ObservableSet set(std::move(code), std::move(povm));
    const double tol = set.povm().tolerance() * set.povm().dim();
    const ConsistencyReport report = check_consistency(set);
    if (!report.pass(tol)) {
        throw std::logic_error("build_observables: constructed set fails consistency checks (worst " +
                               std::to_string(report.worst()) + ")");
    }
    return set;
}

ConsistencyReport check_consistency(const ObservableSet& set) {
    ConsistencyReport report;
    const int n = set.count();
    const int q = set.q();
    const int dim = set.povm().dim();
    const Matrix identity = Matrix::Identity(dim, dim);

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Matrix& a = set.observable(i);
            const Matrix& b = set.observable(j);
            report.commutators = std::max(report.commutators, (a * b - b * a).norm());
        }
    }

    for (int j = 1; j <= n; ++j) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(set.observable(j), Eigen::EigenvaluesOnly);
        for (int i = 0; i < dim; ++i) {
            const double lambda = es.eigenvalues()(i);
            double nearest = std::clamp(std::round(lambda), 0.0, static_cast<double>(q - 1));
            report.spectrum = std::max(report.spectrum, std::abs(lambda - nearest));
        }
    }

    for (int j = 1; j <= n; ++j) {
        Matrix sum = Matrix::Zero(dim, dim);
        for (int z = 0; z < q; ++z) {
            sum += set.outcome_projector(j, z);
            for (int z2 = z + 1; z2 < q; ++z2) {
                report.partition =
                    std::max(report.partition, (set.outcome_projector(j, z) * set.outcome_projector(j, z2)).norm());
            }
        }
        report.partition = std::max(report.partition, (sum - identity).norm());
    }

    for (int k = 1; k <= set.code().size(); ++k) {
        const Word& word = set.code().codeword(k);
        Matrix product = identity;
        for (int j = 1; j <= n; ++j) {
            product = product * set.outcome_projector(j, word[j - 1]);
        }
        report.product_identity =
            std::max(report.product_identity, (product - set.povm().projector(k)).norm());
    }

    for (int j = 0; j < n; ++j) {
        const int first = set.code().codeword(1)[j];
        bool constant = true;
        for (int k = 2; k <= set.code().size(); ++k) {
            if (set.code().codeword(k)[j] != first) {
                constant = false;
                break;
            }
        }
        if (constant) report.uninformative.push_back(j + 1);
    }
    return report;
}

}  // namespace codemeas
