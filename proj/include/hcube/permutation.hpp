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

#ifndef HCUBE_PERMUTATION_HPP
#define HCUBE_PERMUTATION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hcube {

/// Element of the symmetric group S4 in one-line notation. Particle
/// indices are 1-based at the API surface and 0-based in storage.
class Permutation {
public:
    /// Identity permutation.
    Permutation() : images_{0, 1, 2, 3} {}

    /// One-line notation with 1-based images; throws SchemaError if the
    /// four entries are not a bijection on {1,2,3,4}.
    static Permutation from_one_line(const std::array<int, 4>& images);

    /// Parses cycle notation such as "(1 2)(3 4)" or "(1 3 2)"; omitted
    /// elements are fixed points, "()" is the identity.
    static Permutation from_cycles(const std::string& text);

    /// Image of a 1-based particle index.
    int operator()(int particle) const { return images_[particle - 1] + 1; }

    Permutation inverse() const;

    /// +1 for even, -1 for odd permutations.
    int sign() const;

    std::array<int, 4> one_line() const;

    /// Cycle notation with fixed points dropped; identity renders as "()".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::array<std::uint8_t, 4> images_;
};

/// Composition p * q maps alpha to p(q(alpha)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Cycle of a permutation: ordered distinct 1-based particle indices,
/// canonicalized to start at the minimal entry. Rotation-equivalent
/// inputs compare equal after canonicalization.
class Cycle {
public:
    explicit Cycle(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }

    /// The inverse cycle (same starting element, reversed traversal).
    Cycle reversed() const;

    std::string to_string() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<int> entries_;
};

/// Partition of 4 listing cycle lengths in ascending order; one of
/// (1,1,1,1), (1,1,2), (1,3), (2,2), (4).
class CycleStructure {
public:
    explicit CycleStructure(std::vector<int> lengths);

    const std::vector<int>& lengths() const { return lengths_; }

    std::string to_string() const;

    friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
    friend auto operator<=>(const CycleStructure&, const CycleStructure&) = default;

private:
    std::vector<int> lengths_;
};

struct CycleDecomposition {
    std::vector<Cycle> cycles; ///< ordered by minimal element, fixed points kept
    CycleStructure structure;
    int sign;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// All 24 elements of S4 in lexicographic one-line order; index 0 is
/// the identity, index 23 is (4,3,2,1). Stable across runs.
const std::array<Permutation, 24>& enumerate_s4();

/// Position of p in enumerate_s4().
int s4_index(const Permutation& p);

/// The normal Klein four-subgroup in the order
/// {identity, (1 3)(2 4), (1 2)(3 4), (1 4)(2 3)}.
const std::array<Permutation, 4>& klein_four();

} // namespace hcube

#endif // HCUBE_PERMUTATION_HPP
