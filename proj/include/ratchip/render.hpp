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

#include <string>

#include "ratchip/labeled_path.hpp"
#include "ratchip/lattice_path.hpp"

namespace ratchip {

struct RenderOptions {
    bool show_levels = false;
    bool show_labels = true;
};

/// Character grid: lattice nodes, the path's east/north edges, north-step
/// labels, the diagonal bx = ay, and optionally each visited point's level.
/// Overflow paths mark the x = a boundary.
std::string render_ascii(const LatticePath& q, RenderOptions opts = {});
std::string render_ascii(const LabeledPath& q, RenderOptions opts = {});

/// Standalone SVG document with the same content.
std::string render_svg(const LatticePath& q, RenderOptions opts = {});
std::string render_svg(const LabeledPath& q, RenderOptions opts = {});

}  // namespace ratchip
