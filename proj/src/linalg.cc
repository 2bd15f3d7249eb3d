// Copyright 2026 The rtosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rto/linalg.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace rto {

namespace {

bool all_finite(const auto &m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Amplitude z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

Eigen::Index as_index(std::size_t n) { return static_cast<Eigen::Index>(n); }

}  // namespace

std::size_t Factor::index_of(const std::string &label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::invalid_argument("unknown basis label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

Space::Space(std::initializer_list<Factor> factors) : factors_(factors) {}

Space::Space(std::vector<Factor> factors) : factors_(std::move(factors)) {}

std::size_t Space::dim() const {
    if (factors_.empty()) {
        return 0;
    }
    std::size_t d = 1;
    for (const auto &f : factors_) {
        d *= f.dim();
    }
    return d;
}

std::size_t Space::index_of(const std::vector<std::string> &labels) const {
    if (labels.size() != factors_.size()) {
        throw std::invalid_argument("expected " + std::to_string(factors_.size()) +
                                    " labels for space " + str());
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        index = index * factors_[k].dim() + factors_[k].index_of(labels[k]);
    }
    return index;
}

std::vector<std::string> Space::labels_of(std::size_t index) const {
    if (index >= dim()) {
        throw std::out_of_range("basis index out of range for space " + str());
    }
    std::vector<std::string> out(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        const std::size_t d = factors_[k].dim();
        out[k] = factors_[k].labels[index % d];
        index /= d;
    }
    return out;
}

std::string Space::str() const {
    std::string s;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) {
            s += "x";
        }
        s += "[";
        for (std::size_t j = 0; j < factors_[k].labels.size(); ++j) {
            if (j) {
                s += ",";
            }
            s += factors_[k].labels[j];
        }
        s += "]";
    }
    return s.empty() ? "[]" : s;
}

Space operator*(const Space &a, const Space &b) {
    std::vector<Factor> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return Space(std::move(f));
}

StateVector::StateVector(Space space, CVector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (space_.dim() == 0 || static_cast<std::size_t>(amplitudes_.size()) != space_.dim()) {
        throw std::invalid_argument("state has " + std::to_string(amplitudes_.size()) +
                                    " amplitudes but space " + space_.str() + " has dimension " +
                                    std::to_string(space_.dim()));
    }
    if (!all_finite(amplitudes_)) {
        throw std::invalid_argument("state amplitudes must be finite");
    }
    const double n2 = amplitudes_.squaredNorm();
    if (std::abs(n2 - 1.0) > kExactTol) {
        throw std::invalid_argument("state is not normalized (squared norm " + std::to_string(n2) +
                                    ")");
    }
}

StateVector StateVector::basis(const Space &space, const std::vector<std::string> &labels) {
    CVector amps = CVector::Zero(as_index(space.dim()));
    amps[as_index(space.index_of(labels))] = 1.0;
    return StateVector(space, std::move(amps));
}

Amplitude StateVector::amplitude(const std::vector<std::string> &labels) const {
    return amplitudes_[as_index(space_.index_of(labels))];
}

DensityMatrix::DensityMatrix(Space space, CMatrix entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
    const auto d = as_index(space_.dim());
    if (d == 0 || entries_.rows() != d || entries_.cols() != d) {
        throw std::invalid_argument("density matrix shape does not match space " + space_.str());
    }
    if (!all_finite(entries_)) {
        throw std::invalid_argument("density matrix entries must be finite");
    }
    if (max_abs_diff(entries_, entries_.adjoint()) > kExactTol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    const Amplitude tr = entries_.trace();
    if (std::abs(tr.real() - 1.0) > kExactTol || std::abs(tr.imag()) > kExactTol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(entries_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -kPsdTol) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

double unitarity_defect(const CMatrix &m) {
    double defect = max_abs_diff(m.adjoint() * m, CMatrix::Identity(m.cols(), m.cols()));
    if (m.rows() == m.cols()) {
        defect = std::max(defect, max_abs_diff(m * m.adjoint(), CMatrix::Identity(m.rows(), m.rows())));
    }
    return defect;
}

Operator::Operator(Space input_space, Space output_space, CMatrix entries)
    : input_(std::move(input_space)), output_(std::move(output_space)), entries_(std::move(entries)) {
    if (entries_.cols() != as_index(input_.dim()) || entries_.rows() != as_index(output_.dim()) ||
        input_.dim() == 0) {
        throw std::invalid_argument("operator shape does not match spaces " + input_.str() + " -> " +
                                    output_.str());
    }
    if (entries_.rows() < entries_.cols()) {
        throw std::invalid_argument("operator cannot be isometric: output smaller than input");
    }
    if (!all_finite(entries_)) {
        throw std::invalid_argument("operator entries must be finite");
    }
    if (unitarity_defect(entries_) > kExactTol) {
        throw std::invalid_argument("operator on " + input_.str() +
                                    " is not unitary/isometric within tolerance");
    }
}

Operator Operator::identity(const Space &space) {
    const auto d = as_index(space.dim());
    return Operator(space, space, CMatrix::Identity(d, d));
}

StateVector tensor(const StateVector &u, const StateVector &v) {
    CVector amps = Eigen::kroneckerProduct(u.amplitudes(), v.amplitudes()).eval();
    return StateVector(u.space() * v.space(), std::move(amps));
}

Operator tensor(const Operator &a, const Operator &b) {
    CMatrix m = Eigen::kroneckerProduct(a.entries(), b.entries()).eval();
    return Operator(a.input_space() * b.input_space(), a.output_space() * b.output_space(),
                    std::move(m));
}

Operator compose(const Operator &second, const Operator &first) {
    if (!(first.output_space() == second.input_space())) {
        throw std::invalid_argument("cannot compose: " + first.output_space().str() + " vs " +
                                    second.input_space().str());
    }
    return Operator(first.input_space(), second.output_space(), second.entries() * first.entries());
}

StateVector apply(const Operator &op, const StateVector &psi) {
    if (!(op.input_space() == psi.space())) {
        throw std::invalid_argument("operator expects space " + op.input_space().str() +
                                    " but state lives on " + psi.space().str());
    }
    return StateVector(op.output_space(), op.entries() * psi.amplitudes());
}

DensityMatrix density_of(const StateVector &psi) {
    return DensityMatrix(psi.space(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::size_t keep) {
    const Space &space = rho.space();
    if (space.num_factors() != 2) {
        throw std::invalid_argument("partial trace needs a two-factor space, got " + space.str());
    }
    if (keep > 1) {
        throw std::out_of_range("factor index " + std::to_string(keep) + " out of range");
    }
    const auto da = as_index(space.factors()[0].dim());
    const auto db = as_index(space.factors()[1].dim());
    const CMatrix &m = rho.entries();
    CMatrix out;
    if (keep == 0) {
        out = CMatrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; ++i) {
            for (Eigen::Index j = 0; j < da; ++j) {
                for (Eigen::Index k = 0; k < db; ++k) {
                    out(i, j) += m(i * db + k, j * db + k);
                }
            }
        }
    } else {
        out = CMatrix::Zero(db, db);
        for (Eigen::Index i = 0; i < db; ++i) {
            for (Eigen::Index j = 0; j < db; ++j) {
                for (Eigen::Index k = 0; k < da; ++k) {
                    out(i, j) += m(k * db + i, k * db + j);
                }
            }
        }
    }
    return DensityMatrix(Space{space.factors()[keep]}, std::move(out));
}

double purity(const DensityMatrix &rho) {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return rho.entries().cwiseAbs2().sum();
}

Amplitude inner(const StateVector &u, const StateVector &v) {
    if (!(u.space() == v.space())) {
        throw std::invalid_argument("inner product across spaces " + u.space().str() + " and " +
                                    v.space().str());
    }
    return u.amplitudes().dot(v.amplitudes());
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace rto
