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

#ifndef HCUBE_TOLERANCES_HPP
#define HCUBE_TOLERANCES_HPP

namespace hcube::tol {

// Density-operator validation.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kPurity = 1e-10;

// External state (24x24) validation.
inline constexpr double kExternalTrace = 1e-10;
inline constexpr double kDiagonal = 1e-12;
inline constexpr double kEigenRelation = 1e-9;

// Overlap below which a trace product counts as vanishing and the
// associated collective phase as absent.
inline constexpr double kOrth = 1e-9;

// Interferometer numerics.
inline constexpr double kUnitary = 1e-12;
inline constexpr double kImagResidue = 1e-10;
inline constexpr double kNegativeClamp = 1e-12;
inline constexpr double kNormalization = 1e-10;
inline constexpr double kClassSpread = 1e-9;

// Extraction / reconstruction (exact-simulation defaults; sampled
// inputs scale these by propagated standard errors).
inline constexpr double kDiscriminant = 1e-8;
inline constexpr double kCos = 1e-6;
inline constexpr double kPhase = 1e-6;
inline constexpr double kPureMagnitude = 1e-8;

} // namespace hcube::tol

#endif // HCUBE_TOLERANCES_HPP
