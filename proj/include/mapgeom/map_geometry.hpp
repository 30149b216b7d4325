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

#ifndef MAPGEOM_MAP_GEOMETRY_HPP_
#define MAPGEOM_MAP_GEOMETRY_HPP_

#include <compare>
#include <string>
#include <vector>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/graph.hpp"
#include "mapgeom/rational.hpp"

namespace mapgeom {

// An angle mu = q * pi with 0 < q < 1, kept as the exact rational q.
class AngleFactor {
 public:
  // Throws DomainError unless 0 < q < 1.
  explicit AngleFactor(Rational q);

  const Rational& q() const { return q_; }
  bool operator==(const AngleFactor&) const = default;

 private:
  Rational q_;
};

enum class PointClass { kElliptic, kEuclidean, kHyperbolic };

// "elliptic", "euclidean", "hyperbolic".
std::string to_string(PointClass c);

// Sign of valency * mu - 2 pi, computed exactly.
PointClass classify_point(int valency, const AngleFactor& mu);

// A map with an angle factor per vertex (vertex order of vertices()) and an
// optional set of boundary faces (face order of faces()).
class MapGeometry {
 public:
  // Throws DomainError if a vertex has valency below 3 or mu does not have
  // one entry per vertex.
  MapGeometry(CombinatorialMap map, std::vector<AngleFactor> mu);

  const CombinatorialMap& map() const { return map_; }
  const std::vector<AngleFactor>& mu() const { return mu_; }
  const std::vector<int>& valencies() const { return valencies_; }
  int num_faces() const { return num_faces_; }
  // Sorted face indices; empty for a geometry without boundary.
  const std::vector<int>& boundary() const { return boundary_; }

 private:
  friend MapGeometry with_boundary(const MapGeometry& g,
                                   std::vector<int> faces);

  CombinatorialMap map_;
  std::vector<AngleFactor> mu_;
  std::vector<int> valencies_;
  int num_faces_ = 0;
  std::vector<int> boundary_;
};

// Throws DomainError for an unknown vertex.
PointClass classify_vertex(const MapGeometry& g, int vertex);
std::vector<PointClass> classify_vertices(const MapGeometry& g);

// 2/rho for euclidean, 1/rho for elliptic, and the midpoint (2 + rho)/(2 rho)
// of (2/rho, 1) for hyperbolic. Throws DomainError for valency below 3.
AngleFactor canonical_angle(int valency, PointClass target);

// Geometry whose vertex classes are exactly targets (vertex order).
MapGeometry make_assignment(const CombinatorialMap& m,
                            const std::vector<PointClass>& targets);

// Removes the given faces. Throws DomainError when the set is empty, covers
// every face, names an unknown face, or disconnects the remaining faces
// (faces are adjacent when they share an edge).
MapGeometry with_boundary(const MapGeometry& g, std::vector<int> faces);

// True iff some map isomorphism preserves every vertex class and carries
// the boundary of g1 onto the boundary of g2.
bool equivalent(const MapGeometry& g1, const MapGeometry& g2);

struct GeometryCounts {
  BigInt without_boundary;
  BigInt one_face_boundary;
};

// 3^n * maps geometries without boundary and 3^n * m * maps with one
// boundary face, for maps with n vertices and m faces. Throws DomainError
// unless n, m, maps >= 1.
GeometryCounts count_geometries_for_maps(int n, int m, const BigInt& maps);

struct FormulaCounts {
  Rational orientable;
  Rational non_orientable;
};

// 3^|G| prod (rho - 1)! / (2 |Aut G|) for orientable maps and
// (2^betti - 1) times that for non-orientable ones. Exact, possibly
// fractional. Throws DomainError for non-simple or disconnected graphs.
FormulaCounts formula_count_without_boundary(const Graph& g);

// 3^|G| / (2 |Aut G|) * [(betti + 1) prod (rho - 1)! - 2 g'(1)] with g the
// genus polynomial; non-orientable count scaled by (2^betti - 1).
FormulaCounts formula_count_with_boundary(const Graph& g);

// Orbits of Aut M on class vectors by Burnside's lemma: the average over
// automorphisms of 3^(vertex cycles), times the number of fixed admissible
// boundary faces when with_boundary is set.
BigInt class_vector_orbits(const CombinatorialMap& m,
                           bool with_boundary = false);

struct BurnsideCounts {
  BigInt orientable;
  BigInt non_orientable;
};

// Exact number of class vectors (3 choices per vertex) up to map
// automorphism, summed over non-isomorphic maps of g. With
// with_boundary set, pairs of a class vector and a single admissible
// boundary face are counted instead.
BurnsideCounts burnside_counts(const Graph& g, bool with_boundary = false);

// orientable_only selects the orientable maps; otherwise all maps.
BigInt burnside_count(const Graph& g, bool orientable_only);

struct AnglePoint {
  int valency;
  AngleFactor mu;
};

// Interior angle sum of a k-gon whose sides pass through the points of h, in
// units of pi: (k + |h| - 2) - (1/2) sum rho mu. Throws DomainError when
// k < 3, |h| > k or a point has valency below 3.
Rational polygon_angle_sum(int k, const std::vector<AnglePoint>& h);

// Compares the triangle angle sum with pi.
std::strong_ordering triangle_class_sum(const std::vector<AnglePoint>& h);

}  // namespace mapgeom

#endif  // MAPGEOM_MAP_GEOMETRY_HPP_
