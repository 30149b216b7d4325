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

#ifndef MAPGEOM_SMANIFOLD_HPP_
#define MAPGEOM_SMANIFOLD_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/rational.hpp"

namespace mapgeom {

struct TriangularityReport {
  bool triangular = false;
  int faces = 0;
  int edges = 0;
  // Every edge borders exactly two face corners; always true for a valid
  // map, recorded for the report.
  bool edges_two_sided = false;
  bool corner_count_matches = false;  // 3 phi == 2 eps
  std::vector<std::pair<int, int>> offending_faces;  // (face, degree)

  // "face degree 8 at f0; face degree 4 at f1", empty when triangular.
  std::string diagnosis() const;
};

TriangularityReport is_closed_triangular(const CombinatorialMap& m);

enum class SManifoldClass { kD1, kD2, kD3, kD4, kD5, kD6, kD7 };

struct SManifoldClassification {
  SManifoldClass cls;
  std::set<int> valencies;

  std::string tag() const;    // "Δ1" .. "Δ7"
  std::string label() const;  // "elliptic", ..., "mixed"
};

// Throws DomainError naming the offending face or vertex when the map is not
// triangular or has a valency outside {5, 6, 7}.
SManifoldClassification classify(const CombinatorialMap& m);

// For q-regular triangulations 3 phi = 2 eps = q nu, so chi = nu (6 - q) / 6.
struct RegularTriangulationRelation {
  int valency;
  Rational chi_per_vertex;  // (6 - q) / 6

  bool holds(int nu, int chi) const { return Rational(chi) == chi_per_vertex * nu; }
  // nu forced by chi; empty when q = 6 or nu would not be a positive integer.
  std::optional<int> vertices_for(int chi) const;
  // "nu = 6 chi", "chi = 0", "nu = -6 chi".
  std::string to_string() const;
};

// Throws DomainError unless q is 5, 6 or 7.
RegularTriangulationRelation euler_arithmetic(int q);

}  // namespace mapgeom

#endif  // MAPGEOM_SMANIFOLD_HPP_
