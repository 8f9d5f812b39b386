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

#include "hcube/internal_state.hpp"

#include <algorithm>
#include <cmath>

#include "hcube/errors.hpp"

namespace hcube {

namespace {

using Complex = std::complex<double>;

/// Matrix product with a fixed ascending summation order, so that
/// zero-padded embeddings reproduce the unpadded values exactly.
Eigen::MatrixXcd ordered_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const auto n = a.rows();
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (Eigen::Index k = 0; k < n; ++k) {
                acc += a(i, k) * b(k, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

Complex ordered_trace(const Eigen::MatrixXcd& a) {
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < a.rows(); ++i) acc += a(i, i);
    return acc;
}

} // namespace

InternalState InternalState::from_density(Eigen::MatrixXcd rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        throw SchemaError("density matrix must be square and non-empty");
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::kHermitian) {
        throw SchemaError("density matrix not Hermitian (max deviation " + std::to_string(herm) + ")");
    }
    const double trace_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (trace_dev > tol::kUnitTrace) {
        throw SchemaError("density matrix trace deviates from 1 by " + std::to_string(trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::kPsd) {
        throw SchemaError("density matrix not positive semi-definite");
    }
    const double purity = (rho * rho).trace().real();
    return InternalState(std::move(rho), purity >= 1.0 - tol::kPurity);
}

InternalState InternalState::from_vector(const Eigen::VectorXcd& psi) {
    const double norm = psi.norm();
    if (norm == 0.0) {
        throw SchemaError("state vector must be non-zero");
    }
    const Eigen::VectorXcd unit = psi / norm;
    return InternalState(unit * unit.adjoint(), true);
}

InternalEnsemble::InternalEnsemble(std::array<InternalState, 4> states, Statistics statistics)
    : states_(std::move(states)), statistics_(statistics) {
    for (int i = 1; i < 4; ++i) {
        if (states_[i].dimension() != states_[0].dimension()) {
            throw SchemaError("internal states must share one dimension");
        }
    }
}

bool InternalEnsemble::all_pure() const {
    return std::all_of(states_.begin(), states_.end(),
                       [](const InternalState& s) { return s.is_pure(); });
}

std::complex<double> trace_product(const InternalEnsemble& ensemble, const Cycle& cycle) {
    const auto& entries = cycle.entries();
    Eigen::MatrixXcd acc = ensemble.state(entries[0]).matrix();
    for (std::size_t i = 1; i < entries.size(); ++i) {
        acc = ordered_product(acc, ensemble.state(entries[i]).matrix());
    }
    return ordered_trace(acc);
}

OverlapTrace collective_phase(const InternalEnsemble& ensemble, const Cycle& cycle,
                              double eps_orth) {
    const Complex value = trace_product(ensemble, cycle);
    const double magnitude = std::abs(value);
    double phase = 0.0;
    if (cycle.length() > 2) {
        phase = std::arg(value);
        if (phase >= M_PI) phase -= 2.0 * M_PI; // std::arg yields (-pi, pi]
    } else if (std::abs(value.imag()) > tol::kImagResidue) {
        throw InvariantError("pair overlap has an imaginary part beyond tolerance");
    }
    const bool defined = magnitude >= eps_orth;
    return OverlapTrace{cycle, value, magnitude, defined ? phase : 0.0, defined};
}

const char* to_string(GraphTopology topology) {
    switch (topology) {
        case GraphTopology::Complete: return "complete";
        case GraphTopology::OnePairOrthogonal: return "one_pair_orthogonal";
        case GraphTopology::TwoPairsSharedVertex: return "two_pairs_shared_vertex";
        case GraphTopology::TwoPairsDisjoint: return "two_pairs_disjoint";
        case GraphTopology::IsolatedVertex: return "isolated_vertex";
        case GraphTopology::Beyond: return "beyond";
    }
    return "unknown";
}

std::vector<std::pair<int, int>> OverlapGraph::missing_edges() const {
    std::vector<std::pair<int, int>> missing;
    for (int a = 1; a <= 4; ++a) {
        for (int b = a + 1; b <= 4; ++b) {
            if (!edge(a, b)) missing.emplace_back(a, b);
        }
    }
    return missing;
}

OverlapGraph overlap_graph(const InternalEnsemble& ensemble, double eps_orth) {
    OverlapGraph graph;
    for (int a = 1; a <= 4; ++a) {
        for (int b = a + 1; b <= 4; ++b) {
            const double t = std::abs(trace_product(ensemble, Cycle({a, b})));
            graph.adjacency[a - 1][b - 1] = graph.adjacency[b - 1][a - 1] = t > eps_orth;
        }
    }
    const auto missing = graph.missing_edges();
    switch (missing.size()) {
        case 0:
            graph.topology = GraphTopology::Complete;
            break;
        case 1:
            graph.topology = GraphTopology::OnePairOrthogonal;
            break;
        case 2: {
            const auto& [a1, b1] = missing[0];
            const auto& [a2, b2] = missing[1];
            const bool shared = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
            graph.topology =
                shared ? GraphTopology::TwoPairsSharedVertex : GraphTopology::TwoPairsDisjoint;
            break;
        }
        case 3: {
            // All three missing at one vertex leaves a triangle.
            std::array<int, 4> degree_missing{};
            for (const auto& [a, b] : missing) {
                ++degree_missing[a - 1];
                ++degree_missing[b - 1];
            }
            const bool star = std::any_of(degree_missing.begin(), degree_missing.end(),
                                          [](int d) { return d == 3; });
            graph.topology = star ? GraphTopology::IsolatedVertex : GraphTopology::Beyond;
            break;
        }
        default:
            graph.topology = GraphTopology::Beyond;
            break;
    }
    return graph;
}

InternalEnsemble make_distinguishable(const InternalEnsemble& ensemble, int marked) {
    if (marked < 1 || marked > 4) {
        throw SchemaError("marked particle index must be in [1,4]");
    }
    const int d = ensemble.dimension();
    const auto embed = [&](const Eigen::MatrixXcd& rho) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d + 1, d + 1);
        out.topLeftCorner(d, d) = rho;
        return out;
    };
    Eigen::MatrixXcd marker = Eigen::MatrixXcd::Zero(d + 1, d + 1);
    marker(d, d) = 1.0;

    std::array<InternalState, 4> states = {
        InternalState::from_density(marked == 1 ? marker : embed(ensemble.state(1).matrix())),
        InternalState::from_density(marked == 2 ? marker : embed(ensemble.state(2).matrix())),
        InternalState::from_density(marked == 3 ? marker : embed(ensemble.state(3).matrix())),
        InternalState::from_density(marked == 4 ? marker : embed(ensemble.state(4).matrix())),
    };
    return InternalEnsemble(std::move(states), ensemble.statistics());
}

InternalState random_pure_state(int dimension, Rng& rng) {
    Eigen::VectorXcd psi(dimension);
    for (int i = 0; i < dimension; ++i) psi(i) = rng.complex_gaussian();
    return InternalState::from_vector(psi);
}

InternalState random_mixed_state(int dimension, Rng& rng, int rank) {
    if (rank <= 0 || rank > dimension) rank = dimension;
    Eigen::MatrixXcd g(dimension, rank);
    for (int i = 0; i < dimension; ++i) {
        for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Symmetrize away rounding noise so validation sees an exact Hermitian.
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return InternalState::from_density(std::move(rho));
}

InternalEnsemble random_ensemble(int dimension, bool pure, Statistics statistics, Rng& rng) {
    const auto make = [&] {
        return pure ? random_pure_state(dimension, rng) : random_mixed_state(dimension, rng);
    };
    std::array<InternalState, 4> states = {make(), make(), make(), make()};
    return InternalEnsemble(std::move(states), statistics);
}

} // namespace hcube
