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

#include "hcube/external_state.hpp"

#include <algorithm>
#include <cmath>

#include "hcube/errors.hpp"
#include "hcube/tolerances.hpp"

namespace hcube {

namespace {

using Complex = std::complex<double>;

double fermion_sign(const Permutation& p, Statistics statistics) {
    return statistics == Statistics::Fermion ? static_cast<double>(p.sign()) : 1.0;
}

/// Lexicographic enumeration of S_N for N <= 4, as 1-based image vectors.
std::vector<std::vector<int>> enumerate_sn(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

int sn_index(const std::vector<std::vector<int>>& table, const std::vector<int>& images) {
    const auto it = std::lower_bound(table.begin(), table.end(), images);
    return static_cast<int>(it - table.begin());
}

int sn_sign(const std::vector<int>& images) {
    int inversions = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (images[i] > images[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

ExternalState::ExternalState(Eigen::MatrixXcd matrix, Statistics statistics,
                             std::optional<std::string> diagnostic)
    : matrix_(std::move(matrix)), statistics_(statistics), diagnostic_(std::move(diagnostic)) {
    if (matrix_.rows() != 24 || matrix_.cols() != 24) {
        throw SchemaError("external state must be 24x24");
    }
    const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol::kHermitian) {
        throw InvariantError("external state not Hermitian (deviation " + std::to_string(herm) + ")");
    }
    if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > tol::kExternalTrace) {
        throw InvariantError("external state trace deviates from 1");
    }
    for (int i = 0; i < 24; ++i) {
        if (std::abs(matrix_(i, i) - Complex(1.0 / 24.0, 0.0)) > tol::kDiagonal) {
            throw InvariantError("external state diagonal entry deviates from 1/24");
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::kPsd) {
        throw InvariantError("external state not positive semi-definite");
    }
}

ExternalState ExternalState::conjugated() const {
    return ExternalState(matrix_.conjugate(), statistics_, diagnostic_);
}

ExternalState build_external_state(const InternalEnsemble& ensemble) {
    const auto& s4 = enumerate_s4();

    // One trace product per labelling kappa; entries (pi, pi') only
    // depend on kappa = pi o pi'^{-1}.
    std::array<Complex, 24> kappa_value;
    for (int k = 0; k < 24; ++k) {
        const auto decomp = cycle_decomposition(s4[k]);
        Complex prod(1.0, 0.0);
        for (const auto& cycle : decomp.cycles) {
            prod *= trace_product(ensemble, cycle);
        }
        kappa_value[k] = prod * fermion_sign(s4[k], ensemble.statistics()) / 24.0;
    }

    Eigen::MatrixXcd matrix(24, 24);
    for (int r = 0; r < 24; ++r) {
        for (int c = 0; c < 24; ++c) {
            const Permutation kappa = compose(s4[r], s4[c].inverse());
            matrix(r, c) = kappa_value[s4_index(kappa)];
        }
    }

    std::optional<std::string> diagnostic;
    if (ensemble.statistics() == Statistics::Fermion && ensemble.all_pure()) {
        bool all_equal = true;
        for (int a = 1; a <= 4 && all_equal; ++a) {
            for (int b = a + 1; b <= 4 && all_equal; ++b) {
                if (std::abs(trace_product(ensemble, Cycle({a, b})) - Complex(1.0, 0.0)) > 1e-9) {
                    all_equal = false;
                }
            }
        }
        if (all_equal) {
            diagnostic = "fermionic ensemble with identical pure internal states: "
                         "formulas remain defined, physical preparation is the user's concern";
        }
    }
    return ExternalState(std::move(matrix), ensemble.statistics(), std::move(diagnostic));
}

Quantifiers quantifiers(const InternalEnsemble& ensemble) {
    Quantifiers q;
    const std::array<std::pair<int, int>, 6> pairs = {
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    for (const auto& [a, b] : pairs) {
        q.i112 += trace_product(ensemble, Cycle({a, b})).real();
    }
    const std::array<std::array<int, 3>, 4> triads = {{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
    for (const auto& t : triads) {
        q.i13 += 2.0 * trace_product(ensemble, Cycle({t[0], t[1], t[2]})).real();
    }
    q.i22 = trace_product(ensemble, Cycle({1, 2})).real() * trace_product(ensemble, Cycle({3, 4})).real() +
            trace_product(ensemble, Cycle({1, 3})).real() * trace_product(ensemble, Cycle({2, 4})).real() +
            trace_product(ensemble, Cycle({1, 4})).real() * trace_product(ensemble, Cycle({2, 3})).real();
    const std::array<std::array<int, 4>, 3> fourcycles = {{{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}}};
    for (const auto& f : fourcycles) {
        q.i4 += 2.0 * trace_product(ensemble, Cycle({f[0], f[1], f[2], f[3]})).real();
    }
    return q;
}

double projector_expectation_4p(const Quantifiers& q) {
    return (1.0 + q.sum()) / 24.0;
}

double projector_expectation_3p(const Quantifiers& q) {
    return (1.0 + q.i112 / 2.0 + q.i13 / 4.0) / 6.0;
}

double projector_expectation_2p(const Quantifiers& q) {
    return (1.0 + q.i112 / 6.0) / 2.0;
}

double projector_expectation(const InternalEnsemble& ensemble, const std::vector<int>& subset) {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() ||
        (s.size() != 2 && s.size() != 3 && s.size() != 4) ||
        s.front() < 1 || s.back() > 4) {
        throw SchemaError("subset must hold 2, 3, or 4 distinct particles in [1,4]");
    }
    if (s.size() == 4) {
        return projector_expectation_4p(quantifiers(ensemble));
    }
    if (s.size() == 3) {
        const double tab = trace_product(ensemble, Cycle({s[0], s[1]})).real();
        const double tac = trace_product(ensemble, Cycle({s[0], s[2]})).real();
        const double tbc = trace_product(ensemble, Cycle({s[1], s[2]})).real();
        const double triad = trace_product(ensemble, Cycle({s[0], s[1], s[2]})).real();
        return (1.0 + tab + tac + tbc + 2.0 * triad) / 6.0;
    }
    const double tab = trace_product(ensemble, Cycle({s[0], s[1]})).real();
    return (1.0 + tab) / 2.0;
}

Eigen::MatrixXcd partial_trace(const ExternalState& state, int keep) {
    if (keep != 2 && keep != 3) {
        throw SchemaError("partial trace keeps 2 or 3 particles");
    }
    const auto& s4 = enumerate_s4();
    const auto sn = enumerate_sn(keep);
    const int size = static_cast<int>(sn.size());
    Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(size, size);

    // Relative ordering of the surviving modes maps each labelling
    // into the S_N basis; the traced-out slots must agree between bra
    // and ket for the term to survive.
    const auto relative = [&](const Permutation& p) {
        std::vector<int> modes(keep);
        for (int i = 0; i < keep; ++i) modes[i] = p(i + 1);
        std::vector<int> sorted = modes;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> rel(keep);
        for (int i = 0; i < keep; ++i) {
            rel[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), modes[i]) -
                                      sorted.begin()) + 1;
        }
        return rel;
    };

    for (int r = 0; r < 24; ++r) {
        for (int c = 0; c < 24; ++c) {
            bool constrained = true;
            for (int slot = keep + 1; slot <= 4 && constrained; ++slot) {
                constrained = s4[r](slot) == s4[c](slot);
            }
            if (!constrained) continue;
            const int rr = sn_index(sn, relative(s4[r]));
            const int cc = sn_index(sn, relative(s4[c]));
            reduced(rr, cc) += state.matrix()(r, c);
        }
    }
    return reduced;
}

double reduced_projector_expectation(const Eigen::MatrixXcd& reduced, Statistics statistics) {
    const int size = static_cast<int>(reduced.rows());
    int n = 0;
    for (int f = 1, k = 1; f <= size; f *= ++k) {
        if (f == size) n = k;
    }
    if (n == 0) {
        throw SchemaError("reduced state size must be N! for some N");
    }
    const auto sn = enumerate_sn(n);
    Eigen::VectorXcd psi(size);
    for (int i = 0; i < size; ++i) {
        const double sign = statistics == Statistics::Fermion ? sn_sign(sn[i]) : 1.0;
        psi(i) = sign / std::sqrt(static_cast<double>(size));
    }
    return (psi.adjoint() * reduced * psi).value().real();
}

double symmetric_eigenvalue(const ExternalState& state) {
    const auto& s4 = enumerate_s4();
    Eigen::VectorXcd psi(24);
    for (int i = 0; i < 24; ++i) {
        const double sign =
            state.statistics() == Statistics::Fermion ? static_cast<double>(s4[i].sign()) : 1.0;
        psi(i) = sign / std::sqrt(24.0);
    }
    const double lambda = (psi.adjoint() * state.matrix() * psi).value().real();
    const Eigen::VectorXcd image = state.matrix() * psi;
    const double residual = (image - lambda * psi).cwiseAbs().maxCoeff();
    if (residual > tol::kEigenRelation) {
        throw InvariantError("(anti)symmetric vector is not an eigenvector: residual " +
                             std::to_string(residual));
    }
    return lambda;
}

} // namespace hcube
