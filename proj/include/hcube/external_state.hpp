/*
 * Copyright 2026 The hcube Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HCUBE_EXTERNAL_STATE_HPP
#define HCUBE_EXTERNAL_STATE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hcube/internal_state.hpp"
#include "hcube/permutation.hpp"

namespace hcube {

/// Per-order indistinguishability quantifiers: sums of trace products
/// over all particle labellings of one cycle structure.
struct Quantifiers {
    double i112 = 0.0; ///< cycle structure (1,1,2), range [0,6]
    double i13 = 0.0;  ///< cycle structure (1,3),   range [-8,8]
    double i22 = 0.0;  ///< cycle structure (2,2),   range [0,3]
    double i4 = 0.0;   ///< cycle structure (4),     range [-6,6]

    double sum() const { return i112 + i13 + i22 + i4; }
};

/// Reduced external density operator over the 24 particle labellings,
/// rows/columns ordered by enumerate_s4(). Invariants (Hermitian, unit
/// trace, PSD, uniform 1/24 diagonal) are validated on construction.
class ExternalState {
public:
    ExternalState(Eigen::MatrixXcd matrix, Statistics statistics,
                  std::optional<std::string> diagnostic = std::nullopt);

    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    Statistics statistics() const { return statistics_; }

    std::complex<double> element(const Permutation& row, const Permutation& col) const {
        return matrix_(s4_index(row), s4_index(col));
    }

    /// Entrywise complex conjugate (also a valid external state).
    ExternalState conjugated() const;

    /// Physicality note attached at construction (e.g. fermionic
    /// ensembles with identical pure internal states).
    const std::optional<std::string>& diagnostic() const { return diagnostic_; }

private:
    Eigen::MatrixXcd matrix_;
    Statistics statistics_;
    std::optional<std::string> diagnostic_;
};

/// Assembles the 24x24 reduced external state from cycle-structure
/// trace products of the ensemble.
ExternalState build_external_state(const InternalEnsemble& ensemble);

/// The four indistinguishability quantifiers evaluated from trace
/// products, pairing inverse cycles as 2 T cos(phi).
Quantifiers quantifiers(const InternalEnsemble& ensemble);

/// Expectation value of the projector onto the (anti)symmetric
/// subspace of the given particle subset (size 2, 3, or 4; 1-based
/// indices). Always within [1/N!, 1].
double projector_expectation(const InternalEnsemble& ensemble, const std::vector<int>& subset);

/// Four-particle projector expectation from precomputed quantifiers.
double projector_expectation_4p(const Quantifiers& q);

/// Three- and two-particle averages from precomputed quantifiers.
double projector_expectation_3p(const Quantifiers& q);
double projector_expectation_2p(const Quantifiers& q);

/// Reduced external state of the leading N particles (N = 2 or 3) via
/// the label-constrained sums; returned in the S_N labelling basis
/// (N! x N!), Hermitian with unit trace.
Eigen::MatrixXcd partial_trace(const ExternalState& state, int keep);

/// Tr(Pi_B(F) rho) for a reduced labelling-basis state of size N!.
double reduced_projector_expectation(const Eigen::MatrixXcd& reduced, Statistics statistics);

/// Eigenvalue of the external state on the (anti)symmetric vector;
/// verifies the eigenrelation and throws InvariantError if the state
/// is corrupted.
double symmetric_eigenvalue(const ExternalState& state);

} // namespace hcube

#endif // HCUBE_EXTERNAL_STATE_HPP
