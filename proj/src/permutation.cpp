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

#include "hcube/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hcube/errors.hpp"

namespace hcube {

Permutation Permutation::from_one_line(const std::array<int, 4>& images) {
    std::array<bool, 4> seen{};
    for (int v : images) {
        if (v < 1 || v > 4) {
            throw SchemaError("permutation image out of range [1,4]: " + std::to_string(v));
        }
        if (seen[v - 1]) {
            throw SchemaError("permutation images are not a bijection");
        }
        seen[v - 1] = true;
    }
    Permutation p;
    for (int i = 0; i < 4; ++i) {
        p.images_[i] = static_cast<std::uint8_t>(images[i] - 1);
    }
    return p;
}

Permutation Permutation::from_cycles(const std::string& text) {
    std::array<int, 4> images = {1, 2, 3, 4};
    std::array<bool, 4> moved{};
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') {
            throw SchemaError("cycle notation: expected '(' in \"" + text + "\"");
        }
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw SchemaError("cycle notation: unexpected character in \"" + text + "\"");
            }
            const int v = text[i] - '0';
            if (v < 1 || v > 4) {
                throw SchemaError("cycle notation: element out of range [1,4]");
            }
            cycle.push_back(v);
            ++i;
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i == text.size()) {
            throw SchemaError("cycle notation: missing ')' in \"" + text + "\"");
        }
        ++i; // consume ')'
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int from = cycle[k];
            const int to = cycle[(k + 1) % cycle.size()];
            if (moved[from - 1]) {
                throw SchemaError("cycle notation: element repeated across cycles");
            }
            moved[from - 1] = true;
            images[from - 1] = to;
        }
        skip_ws();
    }
    return from_one_line(images);
}

Permutation Permutation::inverse() const {
    Permutation inv;
    for (int i = 0; i < 4; ++i) {
        inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
    }
    return inv;
}

int Permutation::sign() const {
    return cycle_decomposition(*this).sign;
}

std::array<int, 4> Permutation::one_line() const {
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = images_[i] + 1;
    return out;
}

std::string Permutation::to_string() const {
    const auto decomp = cycle_decomposition(*this);
    std::ostringstream os;
    bool printed = false;
    for (const auto& cycle : decomp.cycles) {
        if (cycle.length() == 1) continue; // drop fixed points
        os << cycle.to_string();
        printed = true;
    }
    if (!printed) os << "()";
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    std::array<int, 4> images{};
    for (int a = 1; a <= 4; ++a) {
        images[a - 1] = p(q(a));
    }
    return Permutation::from_one_line(images);
}

Cycle::Cycle(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() > 4) {
        throw SchemaError("cycle length must be in [1,4]");
    }
    std::array<bool, 4> seen{};
    for (int v : entries_) {
        if (v < 1 || v > 4) {
            throw SchemaError("cycle element out of range [1,4]");
        }
        if (seen[v - 1]) {
            throw SchemaError("cycle elements must be distinct");
        }
        seen[v - 1] = true;
    }
    // Canonical rotation: start at the minimal element.
    const auto min_it = std::min_element(entries_.begin(), entries_.end());
    std::rotate(entries_.begin(), min_it, entries_.end());
}

Cycle Cycle::reversed() const {
    std::vector<int> rev(entries_.rbegin(), entries_.rend());
    return Cycle(std::move(rev));
}

std::string Cycle::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ' ';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

CycleStructure::CycleStructure(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    std::sort(lengths_.begin(), lengths_.end());
    const int total = std::accumulate(lengths_.begin(), lengths_.end(), 0);
    if (total != 4 || lengths_.empty() || lengths_.front() < 1) {
        throw SchemaError("cycle structure must be a partition of 4");
    }
}

std::string CycleStructure::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i) os << ',';
        os << lengths_[i];
    }
    os << ')';
    return os.str();
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
    std::vector<Cycle> cycles;
    std::vector<int> lengths;
    std::array<bool, 4> visited{};
    for (int start = 1; start <= 4; ++start) {
        if (visited[start - 1]) continue;
        std::vector<int> entries;
        int cur = start;
        do {
            visited[cur - 1] = true;
            entries.push_back(cur);
            cur = p(cur);
        } while (cur != start);
        lengths.push_back(static_cast<int>(entries.size()));
        cycles.emplace_back(std::move(entries));
    }
    const int sign = (4 - static_cast<int>(cycles.size())) % 2 == 0 ? 1 : -1;
    return CycleDecomposition{std::move(cycles), CycleStructure(std::move(lengths)), sign};
}

const std::array<Permutation, 24>& enumerate_s4() {
    static const std::array<Permutation, 24> table = [] {
        std::array<Permutation, 24> out;
        std::array<int, 4> images = {1, 2, 3, 4};
        int idx = 0;
        do {
            out[idx++] = Permutation::from_one_line(images);
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }();
    return table;
}

int s4_index(const Permutation& p) {
    const auto& table = enumerate_s4();
    const auto it = std::lower_bound(table.begin(), table.end(), p);
    return static_cast<int>(it - table.begin());
}

const std::array<Permutation, 4>& klein_four() {
    static const std::array<Permutation, 4> group = {
        Permutation(),
        Permutation::from_cycles("(1 3)(2 4)"),
        Permutation::from_cycles("(1 2)(3 4)"),
        Permutation::from_cycles("(1 4)(2 3)"),
    };
    return group;
}

} // namespace hcube
