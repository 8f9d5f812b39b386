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

#ifndef HCUBE_ERRORS_HPP
#define HCUBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcube {

/// Malformed or schema-violating input (files, matrices, indices).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Statistically inconsistent data: bad normalization, negative
/// discriminants beyond tolerance, unsatisfiable consistency checks.
class StatisticsError : public std::runtime_error {
public:
    explicit StatisticsError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called outside its contract (e.g. phase
/// reconstruction on mixed internal states).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal numerical invariant failed (imaginary residues, broken
/// eigenrelations, symmetry violations on the hypercube).
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hcube

#endif // HCUBE_ERRORS_HPP
