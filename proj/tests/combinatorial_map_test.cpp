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

#include <algorithm>
#include <numeric>
#include <set>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/embedding.hpp"
#include "mapgeom/error.hpp"
#include "mapgeom/fixtures.hpp"
#include "mapgeom/graph.hpp"
#include "mapgeom/map_io.hpp"
#include "oracles.hpp"

namespace mapgeom {
namespace {

CombinatorialMap torus_k4() {
  return parse_map(testing::read_fixture("k4_torus.map"));
}

TEST(Quadricells, KleinTags) {
  EXPECT_EQ(alpha(quadricell(2, Klein::kOne)), quadricell(2, Klein::kAlpha));
  EXPECT_EQ(beta(alpha(8)), alpha_beta(8));
  EXPECT_EQ(Klein::kAlpha * Klein::kBeta, Klein::kAlphaBeta);
  EXPECT_EQ(base_of(11), 2);
  EXPECT_EQ(klein_of(11), Klein::kAlphaBeta);
  const CombinatorialMap m = torus_k4();
  EXPECT_EQ(m.label(quadricell(0, Klein::kOne)), "x");
  EXPECT_EQ(m.label(quadricell(0, Klein::kAlpha)), "a.x");
  EXPECT_EQ(m.label(quadricell(0, Klein::kBeta)), "b.x");
  EXPECT_EQ(m.label(quadricell(0, Klein::kAlphaBeta)), "ab.x");
}

TEST(Validate, TorusMapPasses) {
  const ValidationReport r = validate(torus_k4());
  EXPECT_TRUE(r.ok());
  for (const AxiomCheck* c : r.checks()) EXPECT_TRUE(c->passed) << c->name;
}

TEST(Validate, IdentityOnTwoEdgesIsNotTransitive) {
  auto base = make_ground_set({"x", "y"});
  std::vector<int> id(8);
  std::iota(id.begin(), id.end(), 0);
  const ValidationReport r = validate(CombinatorialMap(base, id));
  EXPECT_FALSE(r.transitivity.passed);
  EXPECT_TRUE(r.involutions.passed);
  EXPECT_THROW(require_valid(CombinatorialMap(base, id)), StructureError);
}

TEST(Validate, NonBasicWitness) {
  // P = (x, a.x) puts x and alpha x in one P-orbit.
  const CombinatorialMap m = parse_map("base: x\nP: (x,a.x)(b.x,ab.x)\n");
  const ValidationReport r = validate(m);
  EXPECT_FALSE(r.basic.passed);
  ASSERT_TRUE(r.basic.witness.has_value());
  EXPECT_NE(r.basic.detail.find("k=1"), std::string::npos);
}

TEST(Validate, ConjugationFailure) {
  const CombinatorialMap m =
      parse_map("base: x y\nP: (x,y)\n");
  const ValidationReport r = validate(m);
  EXPECT_FALSE(r.conjugation.passed);
  ASSERT_TRUE(r.conjugation.witness.has_value());
}

TEST(Census, TorusK4) {
  const MapCensus c = census(torus_k4());
  EXPECT_EQ(c.nu, 4);
  EXPECT_EQ(c.eps, 6);
  EXPECT_EQ(c.phi, 2);
  EXPECT_EQ(c.chi, 0);
  EXPECT_TRUE(c.orientable);
  EXPECT_EQ(c.genus, 1);
  EXPECT_EQ(c.orientation_orbits, 2);
  std::vector<int> f = c.face_degrees;
  std::sort(f.begin(), f.end());
  EXPECT_EQ(f, (std::vector<int>{4, 8}));
  EXPECT_EQ(c.vertex_valencies, (std::vector<int>{3, 3, 3, 3}));
}

TEST(Census, VerticesPairConjugateCycles) {
  const CombinatorialMap m = torus_k4();
  const auto vs = vertices(m);
  ASSERT_EQ(vs.size(), 4u);
  // First vertex is {(x,y,z), (a.x,a.z,a.y)}.
  EXPECT_EQ(vs[0].cycle, (Cycle{0, 4, 8}));
  EXPECT_EQ(vs[0].conjugate, (Cycle{1, 9, 5}));
}

TEST(Census, PlanarK4AndSingleLoops) {
  EXPECT_EQ(census(planar_k4_map()).chi, 2);
  const Graph loop = bouquet_graph(1);
  const auto maps = enumerate_locally_orientable(loop);
  ASSERT_EQ(maps.size(), 2u);
  EXPECT_EQ(census(maps[0].map).chi, 2);
  EXPECT_TRUE(census(maps[0].map).orientable);
  EXPECT_EQ(census(maps[1].map).chi, 1);
  EXPECT_FALSE(census(maps[1].map).orientable);
  EXPECT_EQ(census(maps[1].map).orientation_orbits, 1);
}

TEST(Census, PlanarK4FaceDegrees) {
  const MapCensus c = census(planar_k4_map());
  EXPECT_EQ(c.genus, 0);
  EXPECT_EQ(c.face_degrees, (std::vector<int>{3, 3, 3, 3}));
}

TEST(Census, Identities) {
  for (const Embedding& e : enumerate_locally_orientable(dipole_graph(4))) {
    const MapCensus c = census(e.map);
    EXPECT_EQ(c.chi, c.nu - c.eps + c.phi);
    EXPECT_EQ(std::accumulate(c.vertex_valencies.begin(), c.vertex_valencies.end(), 0),
              2 * c.eps);
    EXPECT_EQ(std::accumulate(c.face_degrees.begin(), c.face_degrees.end(), 0),
              2 * c.eps);
    size_t cycle_total = 0;
    for (const Cycle& cy : cycle_decomposition(e.map.P())) cycle_total += cy.size();
    EXPECT_EQ(cycle_total, 4u * c.eps);
    if (c.orientable) {
      EXPECT_EQ(c.chi % 2, 0);
      EXPECT_EQ(c.genus, (2 - c.chi) / 2);
    } else {
      EXPECT_EQ(c.genus, 2 - c.chi);
    }
  }
}

TEST(Edges, KleinOrbits) {
  const CombinatorialMap m = torus_k4();
  const auto es = edges(m);
  ASSERT_EQ(es.size(), 6u);
  std::vector<int> seen(m.num_quadricells(), 0);
  for (const auto& e : es) {
    for (int q : e) ++seen[q];
    EXPECT_EQ(e[1], alpha(e[0]));
    EXPECT_EQ(e[2], beta(e[0]));
    EXPECT_EQ(e[3], alpha_beta(e[0]));
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST(Validate, AllMapsOnOneEdge) {
  // Brute force over every permutation of the four quadricells of one edge.
  auto base = make_ground_set({"x"});
  std::vector<int> p = {0, 1, 2, 3};
  std::set<std::vector<int>> classes;
  std::set<std::pair<int, int>> shapes;  // (vertices, chi)
  do {
    const CombinatorialMap m(base, p);
    if (!validate(m).ok()) continue;
    classes.insert(canonical_code(m).code);
    shapes.insert({static_cast<int>(vertices(m).size()), census(m).chi});
  } while (std::next_permutation(p.begin(), p.end()));
  // A segment on the sphere, a loop on the sphere, a loop on the projective
  // plane.
  EXPECT_EQ(classes.size(), 3u);
  EXPECT_EQ(shapes, (std::set<std::pair<int, int>>{{2, 2}, {1, 2}, {1, 1}}));
  for (const Graph& g : {path_graph(2), bouquet_graph(1)}) {
    for (const Embedding& e : enumerate_locally_orientable(g)) {
      EXPECT_TRUE(validate(e.map).ok());
    }
  }
  EXPECT_EQ(vertices(enumerate_orientable(bouquet_graph(1))[0].map).size(), 1u);
}

TEST(Dual, EulerCharacteristicOnManyMaps) {
  EmbeddingEnumerator it(complete_graph(5), EmbeddingKind::kLocallyOrientable);
  for (int i = 0; i < 60; ++i) {
    auto e = it.next();
    ASSERT_TRUE(e.has_value());
    const CombinatorialMap d = dual(e->map);
    EXPECT_TRUE(validate(d).ok());
    EXPECT_EQ(census(d).chi, census(e->map).chi);
    EXPECT_EQ(census(d).orientable, census(e->map).orientable);
  }
}

TEST(UnderlyingGraph, DegreesMatchValencies) {
  const CombinatorialMap m = torus_k4();
  const Graph g = underlying_graph(m);
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_TRUE(g.is_simple());
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3);

  const auto loop = enumerate_orientable(bouquet_graph(1));
  const Graph h = underlying_graph(loop[0].map);
  EXPECT_EQ(h.num_vertices(), 1u);
  EXPECT_EQ(h.num_edges(), 1u);
  EXPECT_EQ(h.multiplicity(0, 0), 1);
}

TEST(Dual, SwapsVerticesAndFaces) {
  const CombinatorialMap m = torus_k4();
  const CombinatorialMap d = dual(m);
  const MapCensus cm = census(m), cd = census(d);
  EXPECT_EQ(cd.nu, cm.phi);
  EXPECT_EQ(cd.phi, cm.nu);
  EXPECT_EQ(cd.eps, cm.eps);
  EXPECT_EQ(cd.chi, cm.chi);
  EXPECT_TRUE(are_isomorphic(dual(d), m));
}

TEST(Isomorphism, SelfAndMirror) {
  const CombinatorialMap m = torus_k4();
  const auto self = isomorphisms(m, m);
  ASSERT_FALSE(self.empty());
  std::vector<int> id(m.num_quadricells());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(std::any_of(self.begin(), self.end(),
                          [&](const MapIsomorphism& t) { return t.mapping == id; }));

  EXPECT_FALSE(are_isomorphic(planar_k4_map(), m));
}

TEST(Isomorphism, PlanarMirrorImages) {
  const Graph k4 = complete_graph(4);
  const auto maps = enumerate_orientable(k4);
  std::vector<size_t> planar;
  for (size_t i = 0; i < maps.size(); ++i) {
    if (census(maps[i].map).chi == 2) planar.push_back(i);
  }
  ASSERT_EQ(planar.size(), 2u);
  const auto& a = maps[planar[0]].map;
  const auto& b = maps[planar[1]].map;
  const auto witnesses = isomorphisms(a, b);
  const int oracle = testing::mirror_symmetries(
      testing::neighbour_rotation(k4, maps[planar[0]].rotation),
      testing::neighbour_rotation(k4, maps[planar[1]].rotation));
  EXPECT_EQ(static_cast<int>(witnesses.size()), oracle);
  EXPECT_EQ(oracle, 24);
  for (const auto& w : witnesses) {
    // Every witness either preserves the orientation class of quadricell 0
    // or reverses it; both kinds respect alpha, beta and P.
    for (size_t x = 0; x < a.num_quadricells(); ++x) {
      EXPECT_EQ(w.mapping[alpha(x)], alpha(w.mapping[x]));
      EXPECT_EQ(w.mapping[beta(x)], beta(w.mapping[x]));
      EXPECT_EQ(w.mapping[a.P(x)], b.P(w.mapping[x]));
    }
  }
}

TEST(Automorphisms, MatchBruteForceMirrorGroup) {
  const Graph k4 = complete_graph(4);
  for (const Embedding& e : enumerate_orientable(k4)) {
    const auto nr = testing::neighbour_rotation(k4, e.rotation);
    const auto autos = automorphisms(e.map);
    EXPECT_EQ(static_cast<int>(autos.size()), testing::mirror_symmetries(nr, nr));
    EXPECT_EQ(48 % autos.size(), 0u);
    EXPECT_EQ(canonical_code(e.map).roots_attaining_minimum,
              static_cast<int>(autos.size()));
  }
}

TEST(Automorphisms, ClosedUnderComposition) {
  const CombinatorialMap m = planar_k4_map();
  const auto autos = automorphisms(m);
  EXPECT_EQ(autos.size(), 24u);
  std::set<std::vector<int>> group;
  for (const auto& a : autos) group.insert(a.mapping);
  for (const auto& a : autos) {
    for (const auto& b : autos) {
      std::vector<int> c(a.mapping.size());
      for (size_t x = 0; x < c.size(); ++x) c[x] = a.mapping[b.mapping[x]];
      EXPECT_TRUE(group.count(c));
    }
  }
}

TEST(Isomorphism, EquivalenceOnPool) {
  const auto pool = enumerate_locally_orientable(complete_graph(4));
  std::vector<std::vector<int>> codes;
  for (const auto& e : pool) codes.push_back(canonical_code(e.map).code);
  for (size_t i = 0; i < pool.size(); i += 7) {
    for (size_t j = 0; j < pool.size(); j += 5) {
      const bool iso = are_isomorphic(pool[i].map, pool[j].map);
      EXPECT_EQ(iso, are_isomorphic(pool[j].map, pool[i].map));
      EXPECT_EQ(iso, codes[i] == codes[j]);
      EXPECT_EQ(iso, !isomorphisms(pool[i].map, pool[j].map, 1).empty());
    }
  }
}

TEST(MapIo, RoundTrip) {
  const CombinatorialMap m = torus_k4();
  const CombinatorialMap again = parse_map(format_map(m));
  EXPECT_EQ(again.P(), m.P());
  EXPECT_EQ(format_map(again), format_map(m));
}

TEST(MapIo, Errors) {
  EXPECT_THROW(parse_map("base: x\nP: (x,q)\n"), ParseError);
  EXPECT_THROW(parse_map("base: x\nP: (x,a.x)(x,b.x)\n"), ParseError);
  EXPECT_THROW(parse_map("P: (x)\n"), ParseError);
  EXPECT_THROW(parse_map("base: x x\n"), ParseError);
  EXPECT_THROW(parse_map("base: x(\n"), ParseError);
  EXPECT_THROW(parse_map("base: x\nQ: (x)\n"), ParseError);
  try {
    parse_map("# comment\nbase: x y\nP: (x,y)(a.x,zz)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 14);
  }
}

}  // namespace
}  // namespace mapgeom
