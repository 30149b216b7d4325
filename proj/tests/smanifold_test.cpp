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

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/error.hpp"
#include "mapgeom/fixtures.hpp"
#include "mapgeom/map_io.hpp"
#include "mapgeom/smanifold.hpp"
#include "oracles.hpp"

namespace mapgeom {
namespace {

TEST(Triangularity, Fixtures) {
  EXPECT_TRUE(is_closed_triangular(icosahedron_map()).triangular);
  EXPECT_TRUE(is_closed_triangular(octahedron_map()).triangular);
  const TriangularityReport k4 = is_closed_triangular(
      parse_map(testing::read_fixture("k4_torus.map")));
  EXPECT_FALSE(k4.triangular);
  EXPECT_NE(k4.diagnosis().find("face degree 4"), std::string::npos);
  EXPECT_TRUE(is_closed_triangular(planar_k4_map()).triangular);
}

TEST(Classify, Fixtures) {
  const auto ico = classify(icosahedron_map());
  EXPECT_EQ(ico.cls, SManifoldClass::kD1);
  EXPECT_EQ(ico.tag(), "Δ1");
  EXPECT_EQ(ico.label(), "elliptic");
  EXPECT_EQ(classify(torus_triangulation(3, 3)).cls, SManifoldClass::kD2);
  EXPECT_EQ(classify(torus_triangulation(4, 5)).cls, SManifoldClass::kD2);
  const auto mixed = classify(mixed_valency_torus());
  EXPECT_EQ(mixed.cls, SManifoldClass::kD7);
  EXPECT_EQ(mixed.valencies, (std::set<int>{5, 6, 7}));
  try {
    classify(octahedron_map());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("valency 4"), std::string::npos);
  }
  EXPECT_THROW(classify(parse_map(testing::read_fixture("k4_torus.map"))), DomainError);
}

TEST(Classify, FileFixturesMatchBuilders) {
  EXPECT_TRUE(are_isomorphic(parse_map(testing::read_fixture("icosahedron.map")),
                             icosahedron_map()));
  EXPECT_TRUE(are_isomorphic(parse_map(testing::read_fixture("torus6.map")),
                             torus_triangulation(3, 3)));
  EXPECT_TRUE(are_isomorphic(parse_map(testing::read_fixture("mixed_torus.map")),
                             mixed_valency_torus()));
}

TEST(Classify, InvariantUnderIsomorphism) {
  const CombinatorialMap m = icosahedron_map();
  // Relabel by the dual of the dual, which is isomorphic but built anew.
  EXPECT_EQ(classify(dual(dual(m))).cls, classify(m).cls);
  const CombinatorialMap t = torus_triangulation(3, 4);
  EXPECT_EQ(classify(dual(dual(t))).cls, classify(t).cls);
}

TEST(Classify, TagsAndLabels) {
  const std::pair<SManifoldClass, const char*> expected[] = {
      {SManifoldClass::kD1, "elliptic"},        {SManifoldClass::kD2, "euclidean"},
      {SManifoldClass::kD3, "hyperbolic"},      {SManifoldClass::kD4, "euclid-elliptic"},
      {SManifoldClass::kD5, "elliptic-hyperbolic"}, {SManifoldClass::kD6, "euclid-hyperbolic"},
      {SManifoldClass::kD7, "mixed"}};
  int n = 1;
  for (const auto& [cls, label] : expected) {
    SManifoldClassification c{cls, {}};
    EXPECT_EQ(c.tag(), "Δ" + std::to_string(n++));
    EXPECT_EQ(c.label(), label);
  }
}

TEST(EulerArithmetic, Relations) {
  const auto five = euler_arithmetic(5);
  EXPECT_EQ(five.vertices_for(2), 12);
  EXPECT_EQ(five.vertices_for(1), 6);
  EXPECT_EQ(five.to_string(), "nu = 6 chi");
  const auto six = euler_arithmetic(6);
  EXPECT_TRUE(six.holds(9, 0));
  EXPECT_FALSE(six.holds(9, 2));
  EXPECT_EQ(six.to_string(), "chi = 0");
  const auto seven = euler_arithmetic(7);
  EXPECT_TRUE(seven.holds(24, -4));
  EXPECT_EQ(seven.to_string(), "nu = -6 chi");
  EXPECT_THROW(euler_arithmetic(4), DomainError);
  EXPECT_THROW(euler_arithmetic(8), DomainError);
}

TEST(EulerArithmetic, HoldsOnRegularFixtures) {
  for (const CombinatorialMap& m :
       {icosahedron_map(), torus_triangulation(3, 3), torus_triangulation(5, 4)}) {
    const MapCensus c = census(m);
    const int q = c.vertex_valencies[0];
    EXPECT_TRUE(euler_arithmetic(q).holds(c.nu, c.chi));
    // Generic identity behind the relation: 3 phi = 2 eps = q nu.
    EXPECT_EQ(3 * c.phi, 2 * c.eps);
    EXPECT_EQ(q * c.nu, 2 * c.eps);
  }
}

}  // namespace
}  // namespace mapgeom
