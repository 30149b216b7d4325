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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/embedding.hpp"
#include "mapgeom/error.hpp"
#include "mapgeom/graph.hpp"
#include "mapgeom/map_geometry.hpp"
#include "mapgeom/map_io.hpp"
#include "mapgeom/permutation.hpp"
#include "mapgeom/smanifold.hpp"
#include "mapgeom/surface_word.hpp"
#include "oracles.hpp"

namespace mapgeom {
namespace {

struct Check {
  std::ostringstream failures;
  int failed = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failed++ < 5) failures << "; " << what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void criterion_1(Check& c, std::ostream& note) {
  const CombinatorialMap m = parse_map(testing::read_fixture("k4_torus.map"));
  c.expect(validate(m).ok(), "map does not validate");
  const MapCensus s = census(m);
  c.expect(s.nu == 4, "nu = " + std::to_string(s.nu));
  c.expect(s.eps == 6, "eps = " + std::to_string(s.eps));
  c.expect(s.phi == 2, "phi = " + std::to_string(s.phi));
  c.expect(s.chi == 0, "chi = " + std::to_string(s.chi));
  c.expect(s.orientable, "not orientable");
  c.expect(s.genus == 1, "genus = " + std::to_string(s.genus));
  c.expect(sorted(s.face_degrees) == std::vector<int>{4, 8}, "face degrees");
  const auto cycles = cycle_decomposition(m.P());
  c.expect(cycles.size() == 8 &&
               std::all_of(cycles.begin(), cycles.end(),
                           [](const Cycle& cy) { return cy.size() == 3; }),
           "P-cycles are not 8 of length 3");
  const std::vector<Permutation> gens = {m.alpha_beta_permutation(), m.P()};
  const size_t orbit_count = orbits(gens, *m.quadricells()).size();
  c.expect(orbit_count == 2, "<ab,P> orbits = " + std::to_string(orbit_count));
  note << "chi = " << s.nu << " - " << s.eps << " + " << s.phi << " = " << s.chi
       << ", genus " << s.genus;
}

void criterion_2(Check& c, std::ostream& note) {
  const Graph k4 = complete_graph(4);
  const size_t o = enumerate_orientable(k4).size();
  const size_t l = enumerate_locally_orientable(k4).size();
  const GenusPolynomial p = genus_polynomial(k4);
  c.expect(o == 16, "orientable = " + std::to_string(o));
  c.expect(l == 128, "locally orientable = " + std::to_string(l));
  c.expect(p.to_string() == "2 + 14x", "genus polynomial " + p.to_string());
  c.expect(p.total() == 16, "coefficient sum");
  note << o << " orientable, " << l << " locally orientable, g = " << p.to_string();
}

void criterion_3(Check& c, std::ostream& note) {
  const Graph k4 = complete_graph(4);
  const size_t aut = graph_automorphisms(k4).size();
  c.expect(aut == 24, "|Aut K4| = " + std::to_string(aut));
  const FormulaCounts plain = formula_count_without_boundary(k4);
  const FormulaCounts bounded = formula_count_with_boundary(k4);
  c.expect(plain.orientable == 27 && plain.non_orientable == 189,
           "closed form without boundary");
  c.expect(bounded.orientable == Rational(243, 4) &&
               bounded.non_orientable == Rational(1701, 4),
           "closed form with boundary");
  const BurnsideCounts b0 = burnside_counts(k4, false);
  const BurnsideCounts b1 = burnside_counts(k4, true);
  note << "formula (" << to_string(plain.orientable) << ", "
       << to_string(plain.non_orientable) << ") vs orbits (" << to_string(b0.orientable)
       << ", " << to_string(b0.non_orientable) << "); with boundary ("
       << to_string(bounded.orientable) << ", " << to_string(bounded.non_orientable)
       << ") vs orbits (" << to_string(b1.orientable) << ", "
       << to_string(b1.non_orientable) << ")";
}

void check_move(Check& c, const SurfaceWord& from, const std::function<SurfaceWord()>& f,
                size_t& applied) {
  try {
    const SurfaceWord to = f();
    ++applied;
    c.expect(euler_characteristic(to) == euler_characteristic(from) &&
                 is_orientable(to) == is_orientable(from),
             "move changed the surface of " + format_word(from));
  } catch (const std::invalid_argument&) {
  }
}

void criterion_4(Check& c, std::ostream& note) {
  std::mt19937 rng(500);
  size_t applied = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const SurfaceWord s = testing::random_word(rng, 10);
    const int n = static_cast<int>(s.size());
    for (int p = 0; p <= n; ++p) {
      check_move(c, s, [&] { return apply_O1(s, p, Direction::kForward); }, applied);
      check_move(c, s, [&] { return apply_O1(s, p, Direction::kBackward); }, applied);
    }
    for (int p = 0; p < n; ++p) {
      for (Variant v : {Variant::kI, Variant::kII}) {
        check_move(c, s, [&] { return apply_O2(s, p, 0, v, Direction::kBackward); },
                   applied);
        for (int q = 0; q < n; ++q) {
          check_move(c, s, [&] { return apply_O2(s, p, q, v, Direction::kForward); },
                     applied);
        }
      }
    }
    for (int start = 0; start < n; ++start) {
      for (int first = 0; first < n; ++first) {
        const auto [p1, p2] = s.positions(s[first].symbol);
        const int second = first == p1 ? p2 : p1;
        const Variant v = s[p1].exponent == s[p2].exponent ? Variant::kII : Variant::kI;
        for (int split = 0; split < n; ++split) {
          check_move(c, s, [&] { return apply_O3(s, {start, first, split, second}, v); },
                     applied);
        }
      }
    }
    const Canonicalization canon = canonical_form(s);
    c.expect(canon.surface == surface_of(euler_characteristic(s), is_orientable(s)),
             "canonical kind of " + format_word(s));
    c.expect(format_word(replay(s, canon.trace)) == format_word(canon.word),
             "trace replay of " + format_word(s));
  }
  note << "500 words, " << applied << " moves applied";
}

void criterion_5(Check& c, std::ostream& note) {
  const PointClass kinds[] = {PointClass::kElliptic, PointClass::kEuclidean,
                              PointClass::kHyperbolic};
  std::vector<CombinatorialMap> maps;
  for (const Graph& g : {complete_graph(4), dipole_graph(3), bouquet_graph(2),
                         bouquet_graph(4), complete_bipartite_graph(2, 2),
                         Graph::with_vertex_count(3, {{0, 1}, {1, 2}, {2, 0},
                                                      {0, 1}, {1, 2}, {2, 0}})}) {
    for (const Embedding& e : enumerate_locally_orientable(g)) {
      const std::vector<CyclePair> vs = vertices(e.map);
      if (std::all_of(vs.begin(), vs.end(),
                      [](const CyclePair& v) { return v.valency() >= 3; })) {
        maps.push_back(e.map);
      }
    }
  }
  size_t vectors = 0;
  for (const CombinatorialMap& m : maps) {
    const int nu = static_cast<int>(vertices(m).size());
    int total = 1;
    for (int i = 0; i < nu; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<PointClass> t;
      for (int i = 0, x = code; i < nu; ++i, x /= 3) t.push_back(kinds[x % 3]);
      const MapGeometry g = make_assignment(m, t);
      c.expect(classify_vertices(g) == t, "round trip");
      ++vectors;
    }
  }
  c.expect(classify_point(4, AngleFactor(Rational(1, 2))) == PointClass::kEuclidean,
           "4 * (1/2) pi is not euclidean");
  note << maps.size() << " maps, " << vectors << " target vectors";
}

void criterion_6(Check& c, std::ostream& note) {
  std::mt19937 rng(1000);
  std::uniform_int_distribution<int> sides(3, 12), valency(3, 12), den(2, 60);
  int empty = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = sides(rng);
    const int points = std::uniform_int_distribution<int>(0, k)(rng);
    std::vector<AnglePoint> h;
    // Accumulate the interior angle one point at a time, in units of pi.
    Rational accumulated = k - 2;
    for (int i = 0; i < points; ++i) {
      const int d = den(rng);
      const Rational q(std::uniform_int_distribution<int>(1, d - 1)(rng), d);
      const int rho = valency(rng);
      h.push_back({rho, AngleFactor(q)});
      accumulated += 1 - Rational(rho) * q / 2;
    }
    const Rational sum = polygon_angle_sum(k, h);
    c.expect(sum == accumulated, "k = " + std::to_string(k));
    if (h.empty()) {
      ++empty;
      c.expect(sum == k - 2, "empty H");
    }
  }
  note << "1000 instances, " << empty << " with no points";
}

void criterion_7(Check& c, std::ostream& note) {
  auto load = [](const char* name) { return parse_map(testing::read_fixture(name)); };
  c.expect(classify(load("icosahedron.map")).cls == SManifoldClass::kD1, "icosahedron");
  c.expect(classify(load("torus6.map")).cls == SManifoldClass::kD2, "6-regular torus");
  c.expect(classify(load("mixed_torus.map")).cls == SManifoldClass::kD7, "mixed torus");
  bool rejected = false;
  try {
    classify(load("octahedron.map"));
  } catch (const DomainError&) {
    rejected = true;
  }
  c.expect(rejected, "octahedron accepted");
  for (const char* name : {"icosahedron.map", "torus6.map"}) {
    const MapCensus s = census(load(name));
    c.expect(euler_arithmetic(s.vertex_valencies[0]).holds(s.nu, s.chi),
             std::string("euler arithmetic on ") + name);
  }
  c.expect(euler_arithmetic(5).vertices_for(2) == 12, "q = 5, chi = 2");
  const MapCensus mixed = census(load("mixed_torus.map"));
  int excess = 0;
  for (int v : mixed.vertex_valencies) excess += 6 - v;
  c.expect(excess == 6 * mixed.chi, "valency excess on mixed torus");
  note << "icosahedron Δ1, torus Δ2, mixed Δ7, octahedron rejected";
}

void criterion_8(Check& c, std::ostream& note) {
  const Graph k4 = complete_graph(4);
  size_t maps = 0;
  for (bool orientable_only : {true, false}) {
    const auto all = orientable_only ? enumerate_orientable(k4)
                                     : enumerate_locally_orientable(k4);
    for (const Embedding& e : all) {
      const CombinatorialMap d = dual(e.map);
      const MapCensus cm = census(e.map), cd = census(d);
      c.expect(are_isomorphic(dual(d), e.map), "dual is not an involution");
      c.expect(cd.chi == cm.chi, "chi changed under dual");
      c.expect(cd.nu == cm.phi && cd.phi == cm.nu, "nu/phi did not swap");
      c.expect(std::accumulate(cm.vertex_valencies.begin(), cm.vertex_valencies.end(),
                               0) == 2 * cm.eps,
               "valency sum");
      ++maps;
    }
    const NonIsomorphicCount n = count_nonisomorphic_maps(k4, orientable_only);
    c.expect(n.checksum_matches(), "checksum " + to_string(n.checksum) + " != " +
                                       std::to_string(n.raw_count));
    note << (orientable_only ? "" : ", ") << n.classes.size() << " classes, checksum "
         << to_string(n.checksum) << "/" << n.raw_count;
  }
  note << " over " << maps << " maps";
}

}  // namespace
}  // namespace mapgeom

int main() {
  using namespace mapgeom;
  struct Criterion {
    int id;
    double limit_seconds;
    void (*run)(Check&, std::ostream&);
  };
  const Criterion criteria[] = {
      {1, 1.0, criterion_1},  {2, 10.0, criterion_2}, {3, 0.0, criterion_3},
      {4, 30.0, criterion_4}, {5, 0.0, criterion_5},  {6, 0.0, criterion_6},
      {7, 0.0, criterion_7},  {8, 0.0, criterion_8}};
  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    std::ostringstream note;
    const auto start = Clock::now();
    try {
      cr.run(check, note);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (cr.limit_seconds > 0 && elapsed >= cr.limit_seconds) {
      check.expect(false, "took " + std::to_string(elapsed) + " s");
    }
    const bool pass = check.failed == 0;
    if (!pass) ++failures;
    std::cout << "criterion " << cr.id << ": " << (pass ? "PASS" : "FAIL") << " ("
              << std::fixed;
    std::cout.precision(3);
    std::cout << elapsed << " s) " << note.str() << check.failures.str() << "\n";
  }
  return failures == 0 ? 0 : 1;
}
