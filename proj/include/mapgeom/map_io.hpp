// Copyright 2026 The mapgeom Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAPGEOM_MAP_IO_HPP_
#define MAPGEOM_MAP_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/map_geometry.hpp"

namespace mapgeom {

// Map file:
//   base: x y z
//   P: (x,y,z)(a.x,a.z,a.y)...
// Quadricell tokens are x, a.x, b.x and ab.x. Several P lines concatenate.
// Blank lines and '#' comments are ignored. Throws ParseError on unknown or
// repeated tokens. The map axioms are not checked here.
CombinatorialMap parse_map(std::string_view text);
std::string format_map(const CombinatorialMap& m);

// "v<i>" (vertex order) or any quadricell label of the vertex.
std::optional<int> resolve_vertex(const CombinatorialMap& m,
                                  std::string_view ref);

// Geometry file: a map file plus one "mu: <vertex> p/q" line per vertex
// (mu = (p/q) pi) and an optional "boundary: f1 f3" line. Angle factors
// outside (0, 1) and missing or repeated vertices are ParseErrors;
// valency and boundary violations are DomainErrors.
MapGeometry parse_geometry(std::string_view text);
std::string format_geometry(const MapGeometry& g);

}  // namespace mapgeom

#endif  // MAPGEOM_MAP_IO_HPP_
