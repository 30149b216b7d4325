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

#include <gtest/gtest.h>

#include <random>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/embedding.hpp"
#include "mapgeom/error.hpp"
#include "mapgeom/fixtures.hpp"
#include "mapgeom/graph.hpp"
#include "mapgeom/map_geometry.hpp"
#include "mapgeom/map_io.hpp"
#include "oracles.hpp"

namespace mapgeom {
namespace {

Rational r(int p, int q) { return Rational(p, q); }

TEST(AngleFactor, OpenInterval) {
  EXPECT_NO_THROW(AngleFactor(r(1, 2)));
  EXPECT_THROW(AngleFactor(0), DomainError);
  EXPECT_THROW(AngleFactor(1), DomainError);
  EXPECT_THROW(AngleFactor(r(3, 2)), DomainError);
}

TEST(ClassifyPoint, ExactEquality) {
  // 4 * (1/2) pi = 2 pi.
  EXPECT_EQ(classify_point(4, AngleFactor(r(1, 2))), PointClass::kEuclidean);
  EXPECT_EQ(classify_point(4, AngleFactor(r(1, 2) - r(1, 1000000))),
            PointClass::kElliptic);
  EXPECT_EQ(classify_point(4, AngleFactor(r(1, 2) + r(1, 1000000))),
            PointClass::kHyperbolic);
  EXPECT_EQ(classify_point(3, AngleFactor(r(2, 3))), PointClass::kEuclidean);
  EXPECT_EQ(classify_point(6, AngleFactor(r(1, 3))), PointClass::kEuclidean);
  EXPECT_EQ(to_string(PointClass::kHyperbolic), "hyperbolic");
}

TEST(CanonicalAngle, Values) {
  EXPECT_EQ(canonical_angle(4, PointClass::kEuclidean).q(), r(1, 2));
  EXPECT_EQ(canonical_angle(4, PointClass::kElliptic).q(), r(1, 4));
  EXPECT_EQ(canonical_angle(4, PointClass::kHyperbolic).q(), r(3, 4));
  for (int rho = 3; rho <= 12; ++rho) {
    for (PointClass c :
         {PointClass::kElliptic, PointClass::kEuclidean, PointClass::kHyperbolic}) {
      EXPECT_EQ(classify_point(rho, canonical_angle(rho, c)), c);
    }
  }
}

TEST(MapGeometry, RejectsLowValency) {
  const auto c3 = enumerate_orientable(cycle_graph(3));
  std::vector<AngleFactor> mu(3, AngleFactor(r(1, 2)));
  EXPECT_THROW(MapGeometry(c3[0].map, mu), DomainError);
  const CombinatorialMap k4 = planar_k4_map();
  EXPECT_THROW(MapGeometry(k4, std::vector<AngleFactor>(3, AngleFactor(r(1, 2)))),
               DomainError);
}

std::vector<CombinatorialMap> round_trip_maps() {
  std::vector<CombinatorialMap> maps;
  for (const Graph& g : {complete_graph(4), dipole_graph(3), dipole_graph(4),
                         bouquet_graph(2), bouquet_graph(4),
                         Graph::with_vertex_count(2, {{0, 0}, {0, 1}, {1, 1}})}) {
    EmbeddingEnumerator it(g, EmbeddingKind::kLocallyOrientable);
    for (int i = 0; i < 40; ++i) {
      auto e = it.next();
      if (!e) break;
      maps.push_back(e->map);
    }
  }
  return maps;
}

TEST(MakeAssignment, ExhaustiveRoundTrip) {
  const PointClass kinds[] = {PointClass::kElliptic, PointClass::kEuclidean,
                              PointClass::kHyperbolic};
  size_t checked = 0;
  for (const CombinatorialMap& m : round_trip_maps()) {
    const int nu = static_cast<int>(vertices(m).size());
    int total = 1;
    for (int i = 0; i < nu; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<PointClass> targets;
      for (int i = 0, c = code; i < nu; ++i, c /= 3) targets.push_back(kinds[c % 3]);
      const MapGeometry g = make_assignment(m, targets);
      for (int u = 0; u < nu; ++u) {
        EXPECT_EQ(classify_vertex(g, u), targets[u]);
        EXPECT_LT(g.mu()[u].q(), 1);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Boundary, ValidatesFaces) {
  const MapGeometry k4 = make_assignment(
      planar_k4_map(), std::vector<PointClass>(4, PointClass::kEuclidean));
  EXPECT_NO_THROW(with_boundary(k4, {0}));
  EXPECT_NO_THROW(with_boundary(k4, {0, 1, 2}));
  EXPECT_THROW(with_boundary(k4, {0, 1, 2, 3}), DomainError);
  EXPECT_THROW(with_boundary(k4, {7}), DomainError);
  EXPECT_THROW(with_boundary(k4, {1, 1}), DomainError);
  EXPECT_EQ(with_boundary(k4, {2, 0}).boundary(), (std::vector<int>{0, 2}));
}

TEST(Equivalence, ClassesNotValues) {
  const MapGeometry a = parse_geometry(testing::read_fixture("k4_mixed.geom"));
  const MapGeometry b = parse_geometry(testing::read_fixture("k4_euclidean.geom"));
  EXPECT_TRUE(equivalent(a, a));
  EXPECT_TRUE(equivalent(b, b));
  EXPECT_FALSE(equivalent(a, b));
  // Same classes, different values.
  std::vector<AngleFactor> mu;
  for (int i = 0; i < 4; ++i) mu.emplace_back(r(2, 3));
  EXPECT_TRUE(equivalent(b, MapGeometry(b.map(), mu)));
  std::vector<AngleFactor> shifted = {AngleFactor(r(1, 4)), AngleFactor(r(2, 3)),
                                      AngleFactor(r(9, 10)), AngleFactor(r(2, 3))};
  EXPECT_TRUE(equivalent(a, with_boundary(MapGeometry(a.map(), shifted), {1})));
  EXPECT_FALSE(equivalent(a, MapGeometry(a.map(), shifted)));
}

TEST(Equivalence, EquivalenceRelationOnPool) {
  std::vector<MapGeometry> pool;
  const PointClass kinds[] = {PointClass::kElliptic, PointClass::kEuclidean,
                              PointClass::kHyperbolic};
  const auto maps = enumerate_orientable(complete_graph(4));
  for (size_t i = 0; i < maps.size(); i += 5) {
    for (int code = 0; code < 81; code += 13) {
      std::vector<PointClass> t;
      for (int v = 0, c = code; v < 4; ++v, c /= 3) t.push_back(kinds[c % 3]);
      pool.push_back(make_assignment(maps[i].map, t));
    }
  }
  const size_t n = pool.size();
  std::vector<std::vector<char>> eq(n, std::vector<char>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) eq[i][j] = equivalent(pool[i], pool[j]);
  for (size_t i = 0; i < n; ++i) {
    EXPECT_TRUE(eq[i][i]);
    for (size_t j = 0; j < n; ++j) {
      EXPECT_EQ(eq[i][j], eq[j][i]);
      for (size_t k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) {
          EXPECT_TRUE(eq[i][k]);
        }
      }
    }
  }
}

TEST(ClosedForms, CompleteGraphK4) {
  const FormulaCounts plain = formula_count_without_boundary(complete_graph(4));
  EXPECT_EQ(plain.orientable, 27);
  EXPECT_EQ(plain.non_orientable, 189);
  const FormulaCounts bounded = formula_count_with_boundary(complete_graph(4));
  EXPECT_EQ(bounded.orientable, r(243, 4));
  EXPECT_EQ(bounded.non_orientable, r(1701, 4));
  EXPECT_THROW(formula_count_without_boundary(bouquet_graph(2)), DomainError);
  EXPECT_EQ(count_geometries_for_maps(4, 2, 3).without_boundary, 243);
  EXPECT_EQ(count_geometries_for_maps(4, 2, 3).one_face_boundary, 486);
}

TEST(ClosedForms, InvariantUnderRelabeling) {
  const Graph g = Graph::with_vertex_count(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  const Graph h = Graph::with_vertex_count(
      5, {{3, 1}, {1, 4}, {4, 0}, {0, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(formula_count_without_boundary(g).orientable,
            formula_count_without_boundary(h).orientable);
  EXPECT_EQ(formula_count_with_boundary(g).non_orientable,
            formula_count_with_boundary(h).non_orientable);
}

// Orbits of (class vector[, boundary face]) under Aut M by union-find.
int brute_force_orbits(const CombinatorialMap& m, bool with_boundary_face) {
  const auto vs = vertices(m);
  const auto vi = vertex_index(m);
  const auto fs = faces(m);
  const auto fi = face_index(m);
  const int nu = static_cast<int>(vs.size());
  const int phi = static_cast<int>(fs.size());
  int vectors = 1;
  for (int i = 0; i < nu; ++i) vectors *= 3;
  std::vector<int> faces_allowed;
  if (with_boundary_face) {
    const MapGeometry g = make_assignment(
        m, std::vector<PointClass>(nu, PointClass::kEuclidean));
    for (int f = 0; f < phi; ++f) {
      try {
        with_boundary(g, {f});
        faces_allowed.push_back(f);
      } catch (const DomainError&) {
      }
    }
  } else {
    faces_allowed.push_back(-1);
  }
  const int slots = static_cast<int>(faces_allowed.size());
  const int items = vectors * slots;
  std::vector<std::vector<int>> perms;
  for (const MapIsomorphism& a : automorphisms(m)) {
    std::vector<int> vperm(nu), fperm(phi);
    for (int u = 0; u < nu; ++u) vperm[u] = vi[a.mapping[vs[u].cycle[0]]];
    for (int f = 0; f < phi; ++f) fperm[f] = fi[a.mapping[fs[f].cycle[0]]];
    std::vector<int> act(items);
    for (int code = 0; code < vectors; ++code) {
      std::vector<int> digits(nu), moved(nu);
      for (int i = 0, c = code; i < nu; ++i, c /= 3) digits[i] = c % 3;
      for (int u = 0; u < nu; ++u) moved[vperm[u]] = digits[u];
      int image = 0;
      for (int i = nu - 1; i >= 0; --i) image = image * 3 + moved[i];
      for (int s = 0; s < slots; ++s) {
        int t = s;
        if (with_boundary_face) {
          const int target = fperm[faces_allowed[s]];
          t = static_cast<int>(std::find(faces_allowed.begin(), faces_allowed.end(),
                                         target) - faces_allowed.begin());
        }
        act[code * slots + s] = image * slots + t;
      }
    }
    perms.push_back(act);
  }
  return testing::union_find_orbits(items, perms);
}

TEST(Burnside, MatchesBruteForceOrbits) {
  for (const Graph& g : {complete_graph(4), dipole_graph(3), bouquet_graph(2)}) {
    for (const Embedding& e : enumerate_locally_orientable(g)) {
      EXPECT_EQ(class_vector_orbits(e.map), brute_force_orbits(e.map, false));
      EXPECT_EQ(class_vector_orbits(e.map, true), brute_force_orbits(e.map, true));
    }
  }
}

TEST(Burnside, SmallCases) {
  // A lone triangle on the sphere: 3-colourings of its vertices up to the
  // dihedral group of order 6.
  EXPECT_EQ(class_vector_orbits(enumerate_orientable(cycle_graph(3))[0].map), 10);
  EXPECT_EQ(class_vector_orbits(planar_k4_map()), 15);
  const BurnsideCounts k4 = burnside_counts(complete_graph(4));
  EXPECT_EQ(burnside_count(complete_graph(4), true), k4.orientable);
  EXPECT_EQ(burnside_count(complete_graph(4), false), k4.orientable + k4.non_orientable);
}

TEST(AngleSum, Examples) {
  EXPECT_EQ(polygon_angle_sum(3, {}), 1);
  EXPECT_EQ(polygon_angle_sum(3, {{4, AngleFactor(r(1, 2))}}), 1);
  EXPECT_EQ(polygon_angle_sum(4, {{3, AngleFactor(r(1, 2))}, {5, AngleFactor(r(1, 2))}}),
            2);
  for (int k = 3; k < 40; ++k) EXPECT_EQ(polygon_angle_sum(k, {}), k - 2);
  EXPECT_THROW(polygon_angle_sum(2, {}), DomainError);
  EXPECT_THROW(polygon_angle_sum(3, std::vector<AnglePoint>(4, {3, AngleFactor(r(1, 2))})),
               DomainError);
  EXPECT_THROW(polygon_angle_sum(3, {{2, AngleFactor(r(1, 2))}}), DomainError);
}

TEST(AngleSum, TriangleSingleNonEuclideanPoint) {
  // An elliptic point pushes the sum above pi, a hyperbolic one below.
  EXPECT_EQ(polygon_angle_sum(3, {{3, AngleFactor(r(1, 2))}}), r(5, 4));
  EXPECT_EQ(triangle_class_sum({{3, AngleFactor(r(1, 2))}}), std::strong_ordering::greater);
  EXPECT_EQ(polygon_angle_sum(3, {{5, AngleFactor(r(9, 10))}}), r(-1, 4));
  EXPECT_EQ(triangle_class_sum({{5, AngleFactor(r(9, 10))}}), std::strong_ordering::less);
  EXPECT_EQ(triangle_class_sum({{6, AngleFactor(r(1, 3))}, {4, AngleFactor(r(1, 2))}}),
            std::strong_ordering::equal);
}

TEST(AngleSum, MonotoneDecreasingInEachAngle) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> valency(3, 9), num(1, 99);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 3 + trial % 6;
    std::vector<AnglePoint> h;
    for (int i = 0; i < k / 2; ++i) h.push_back({valency(rng), AngleFactor(r(num(rng), 100))});
    const Rational base = polygon_angle_sum(k, h);
    for (size_t i = 0; i < h.size(); ++i) {
      std::vector<AnglePoint> bumped = h;
      const Rational q = (h[i].mu.q() + 1) / 2;
      bumped[i].mu = AngleFactor(q);
      EXPECT_LT(polygon_angle_sum(k, bumped), base);
    }
  }
}

TEST(GeometryIo, RoundTripAndErrors) {
  const MapGeometry a = parse_geometry(testing::read_fixture("k4_mixed.geom"));
  EXPECT_EQ(a.boundary(), (std::vector<int>{1}));
  const MapGeometry again = parse_geometry(format_geometry(a));
  EXPECT_EQ(format_geometry(again), format_geometry(a));
  EXPECT_TRUE(equivalent(a, again));
  try {
    parse_geometry(testing::read_fixture("mu_out_of_range.geom"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("v1"), std::string::npos);
    EXPECT_EQ(e.line(), 4);
  }
  const std::string map = testing::read_fixture("k4_torus.map");
  EXPECT_THROW(parse_geometry(map + "mu: v0 1/2\n"), ParseError);
  EXPECT_THROW(parse_geometry(map + "mu: v0 1/2\nmu: v0 1/2\nmu: v1 1/2\nmu: v2 1/2\nmu: v3 1/2\n"),
               ParseError);
  EXPECT_THROW(parse_geometry(map + "mu: v9 1/2\n"), ParseError);
}

}  // namespace
}  // namespace mapgeom
