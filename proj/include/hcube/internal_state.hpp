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

#ifndef HCUBE_INTERNAL_STATE_HPP
#define HCUBE_INTERNAL_STATE_HPP

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hcube/permutation.hpp"
#include "hcube/rng.hpp"
#include "hcube/tolerances.hpp"

namespace hcube {

enum class Statistics { Boson, Fermion };

/// Upper-sign (+1) for bosons, lower-sign (-1) for fermions in the
/// two-signed closed-form expressions.
inline double statistics_sign(Statistics s) {
    return s == Statistics::Boson ? 1.0 : -1.0;
}

/// Single-particle internal density operator. Validated on
/// construction: Hermitian, positive semi-definite, unit trace.
class InternalState {
public:
    /// Validates and wraps a density matrix.
    static InternalState from_density(Eigen::MatrixXcd rho);

    /// Normalizes a state vector and promotes it to a projector.
    static InternalState from_vector(const Eigen::VectorXcd& psi);

    int dimension() const { return static_cast<int>(rho_.rows()); }
    bool is_pure() const { return pure_; }
    const Eigen::MatrixXcd& matrix() const { return rho_; }

private:
    InternalState(Eigen::MatrixXcd rho, bool pure) : rho_(std::move(rho)), pure_(pure) {}

    Eigen::MatrixXcd rho_;
    bool pure_;
};

/// Four uncorrelated internal states of equal dimension plus the
/// particle statistics. Immutable after construction.
class InternalEnsemble {
public:
    InternalEnsemble(std::array<InternalState, 4> states, Statistics statistics);

    /// 1-based particle index.
    const InternalState& state(int particle) const { return states_[particle - 1]; }
    int dimension() const { return states_[0].dimension(); }
    Statistics statistics() const { return statistics_; }
    bool all_pure() const;

private:
    std::array<InternalState, 4> states_;
    Statistics statistics_;
};

/// Polar data of a trace product over one cycle.
struct OverlapTrace {
    Cycle cycle;
    std::complex<double> value;
    double magnitude;   ///< T >= 0
    double phase;       ///< in [-pi, pi); 0 for cycles of length <= 2
    bool phase_defined; ///< false when the magnitude is below eps_orth
};

/// Tr(rho_a rho_b ... rho_c) along the cycle, via direct matrix
/// products in a fixed summation order.
std::complex<double> trace_product(const InternalEnsemble& ensemble, const Cycle& cycle);

/// Polar decomposition of trace_product; the phase is flagged absent
/// when the magnitude falls below eps_orth.
OverlapTrace collective_phase(const InternalEnsemble& ensemble, const Cycle& cycle,
                              double eps_orth = tol::kOrth);

/// Pairwise-overlap graph patterns: complete graph, one missing edge,
/// two missing edges sharing a vertex, two disjoint missing edges, a
/// fully detached particle over a surviving triangle, and anything
/// with fewer connections than that.
enum class GraphTopology {
    Complete,
    OnePairOrthogonal,
    TwoPairsSharedVertex,
    TwoPairsDisjoint,
    IsolatedVertex,
    Beyond,
};

const char* to_string(GraphTopology topology);

struct OverlapGraph {
    std::array<std::array<bool, 4>, 4> adjacency{}; ///< symmetric, no self-edges
    GraphTopology topology = GraphTopology::Beyond;

    bool edge(int a, int b) const { return adjacency[a - 1][b - 1]; }
    std::vector<std::pair<int, int>> missing_edges() const;
};

/// Edge (a,b) present iff Tr(rho_a rho_b) > eps_orth.
OverlapGraph overlap_graph(const InternalEnsemble& ensemble, double eps_orth = tol::kOrth);

/// Embeds the ensemble into dimension d+1 and replaces the marked
/// particle's state by the added basis vector: every trace product
/// involving the marked particle vanishes exactly while products among
/// the remaining particles keep their previous values verbatim.
InternalEnsemble make_distinguishable(const InternalEnsemble& ensemble, int marked);

/// Haar-uniform pure state: normalized vector of iid standard complex
/// Gaussians.
InternalState random_pure_state(int dimension, Rng& rng);

/// Mixed state G G^dagger / Tr(...) with Gaussian G of the given rank
/// (full rank when rank == 0).
InternalState random_mixed_state(int dimension, Rng& rng, int rank = 0);

InternalEnsemble random_ensemble(int dimension, bool pure, Statistics statistics, Rng& rng);

} // namespace hcube

#endif // HCUBE_INTERNAL_STATE_HPP
