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

#ifndef RTO_LINALG_H
#define RTO_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rto {

using Amplitude = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerance for every "exact" structural claim (normalization, hermiticity,
/// unitarity, trace). Dimensions never exceed 6, so rounding stays far below it.
inline constexpr double kExactTol = 1e-12;
/// Smallest eigenvalue a density matrix may have before it is rejected.
inline constexpr double kPsdTol = 1e-10;

/// One tensor factor: an ordered list of orthonormal basis labels.
struct Factor {
    std::vector<std::string> labels;

    std::size_t dim() const { return labels.size(); }
    /// Position of `label`; throws std::invalid_argument if absent.
    std::size_t index_of(const std::string &label) const;
    bool operator==(const Factor &) const = default;
};

/// Ordered tensor product of factors. Basis ordering is lexicographic in the
/// declared factor order (last factor varies fastest).
class Space {
   public:
    Space() = default;
    Space(std::initializer_list<Factor> factors);
    explicit Space(std::vector<Factor> factors);

    const std::vector<Factor> &factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }
    std::size_t dim() const;

    /// Flat index of the basis vector with the given per-factor labels.
    std::size_t index_of(const std::vector<std::string> &labels) const;
    /// Per-factor labels of flat basis index `index`.
    std::vector<std::string> labels_of(std::size_t index) const;

    /// e.g. "[A1,A2]x[B1,B2]"
    std::string str() const;

    bool operator==(const Space &) const = default;

   private:
    std::vector<Factor> factors_;
};

/// Concatenation of factor lists.
Space operator*(const Space &a, const Space &b);

/// Normalized pure state on a labeled space. Immutable.
class StateVector {
   public:
    /// Throws std::invalid_argument on length mismatch, non-finite entries or
    /// a norm that differs from 1 by more than kExactTol.
    StateVector(Space space, CVector amplitudes);

    /// |label_1 ... label_k>.
    static StateVector basis(const Space &space, const std::vector<std::string> &labels);

    const Space &space() const { return space_; }
    const CVector &amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    Amplitude operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }
    Amplitude amplitude(const std::vector<std::string> &labels) const;
    double norm() const { return amplitudes_.norm(); }

   private:
    Space space_;
    CVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix on a labeled space.
class DensityMatrix {
   public:
    DensityMatrix(Space space, CMatrix entries);

    const Space &space() const { return space_; }
    const CMatrix &entries() const { return entries_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    Amplitude operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

   private:
    Space space_;
    CMatrix entries_;
};

/// Linear map between labeled spaces. Square operators must be unitary,
/// rectangular ones isometric (V^dagger V = I), both within kExactTol.
class Operator {
   public:
    Operator(Space input_space, Space output_space, CMatrix entries);

    static Operator identity(const Space &space);

    const Space &input_space() const { return input_; }
    const Space &output_space() const { return output_; }
    const CMatrix &entries() const { return entries_; }

   private:
    Space input_;
    Space output_;
    CMatrix entries_;
};

/// Largest entry of |U^dagger U - I| (and |U U^dagger - I| when square).
double unitarity_defect(const CMatrix &m);

StateVector tensor(const StateVector &u, const StateVector &v);
Operator tensor(const Operator &a, const Operator &b);

/// `second` after `first`. Throws if first's output space is not second's input.
Operator compose(const Operator &second, const Operator &first);

/// Throws std::invalid_argument naming both spaces on mismatch.
StateVector apply(const Operator &op, const StateVector &psi);

DensityMatrix density_of(const StateVector &psi);

/// Reduced state on factor `keep` (0 or 1) of a two-factor density matrix.
DensityMatrix partial_trace(const DensityMatrix &rho, std::size_t keep);

/// Tr(rho^2).
double purity(const DensityMatrix &rho);

/// <u|v>.
Amplitude inner(const StateVector &u, const StateVector &v);

/// Entrywise max-abs difference; shapes must match.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

}  // namespace rto

#endif
