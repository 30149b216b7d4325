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

#ifndef MAPGEOM_FIXTURES_HPP_
#define MAPGEOM_FIXTURES_HPP_

#include <array>
#include <vector>

#include "mapgeom/combinatorial_map.hpp"

namespace mapgeom {

using Triangle = std::array<int, 3>;

// Map of a closed surface glued from triangles that are consistently
// oriented: every directed edge occurs in exactly one triangle and its
// reverse in exactly one other. Throws std::invalid_argument otherwise, or
// when the triangles around a vertex do not close up into a single disk.
CombinatorialMap map_from_triangles(int num_vertices,
                                    const std::vector<Triangle>& triangles);

// K4 on the torus with one face of degree 4 and one of degree 8, on base
// x y z u v w.
CombinatorialMap k4_torus_map();

CombinatorialMap planar_k4_map();
CombinatorialMap icosahedron_map();
CombinatorialMap octahedron_map();

// 6-regular triangulation of the rows x cols torus grid (rows, cols >= 3).
CombinatorialMap torus_triangulation(int rows, int cols);

// The 4 x 4 torus triangulation with one diagonal flipped: two vertices of
// valency 5, two of valency 7, the rest 6.
CombinatorialMap mixed_valency_torus();

std::vector<Triangle> icosahedron_triangles();
std::vector<Triangle> octahedron_triangles();
std::vector<Triangle> torus_triangles(int rows, int cols);

}  // namespace mapgeom

#endif  // MAPGEOM_FIXTURES_HPP_
