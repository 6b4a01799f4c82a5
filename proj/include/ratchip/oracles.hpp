/*
 * Copyright 2026 the ratchip authors
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
#pragma once

#include "ratchip/chip_config.hpp"
#include "ratchip/lattice_path.hpp"
#include "ratchip/rat_params.hpp"
#include "ratchip/sinked_graph.hpp"

namespace ratchip {

// Definition-level reference implementations, exponential on purpose. They
// share only the data types with the fast paths they validate: subset
// enumeration, firing arithmetic and level walks are all written out here
// from scratch so agreement tests compare genuinely independent routes.

struct GeneralParams;

/// Literal enumeration of all vertex sets of size 1..k+1.
bool brute_is_k_stable(const SinkedGraph& g, const GeneralParams& p,
                       const ChipConfig& d, int k);

/// Complete graph: d is k-stable and no legal nonempty borrow lands on a
/// k-stable configuration, over all 2^b - 1 borrow sets.
bool brute_is_k_skeletal(const RatParams& p, const ChipConfig& d, int k);

/// Conditions (R1) and (R2) applied literally: the last k+1 north steps
/// start on or above bx = ay, and every shift at a point strictly above the
/// line breaks that.
bool brute_path_skeletal(const LatticePath& q, int k);

/// Literal quantification of the parking criterion over all nonempty subsets.
bool brute_superstable_parking(const RatParams& p, const ChipConfig& d);

}  // namespace ratchip
