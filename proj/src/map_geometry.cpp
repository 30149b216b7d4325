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

#include "mapgeom/map_geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mapgeom/embedding.hpp"
#include "mapgeom/error.hpp"

namespace mapgeom {

AngleFactor::AngleFactor(Rational q) : q_(std::move(q)) {
  if (q_ <= 0 || q_ >= 1) {
    throw DomainError("angle factor " + mapgeom::to_string(q_) +
                      " pi is outside (0, pi)");
  }
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::kElliptic:
      return "elliptic";
    case PointClass::kEuclidean:
      return "euclidean";
    case PointClass::kHyperbolic:
      return "hyperbolic";
  }
  return "";
}

PointClass classify_point(int valency, const AngleFactor& mu) {
  const Rational total = valency * mu.q();
  if (total < 2) return PointClass::kElliptic;
  if (total == 2) return PointClass::kEuclidean;
  return PointClass::kHyperbolic;
}

MapGeometry::MapGeometry(CombinatorialMap map, std::vector<AngleFactor> mu)
    : map_(std::move(map)), mu_(std::move(mu)) {
  const MapCensus c = census(map_);
  valencies_ = c.vertex_valencies;
  num_faces_ = c.phi;
  if (mu_.size() != valencies_.size()) {
    throw DomainError("expected " + std::to_string(valencies_.size()) +
                      " angle factors, got " + std::to_string(mu_.size()));
  }
  for (size_t v = 0; v < valencies_.size(); ++v) {
    if (valencies_[v] < 3) {
      throw DomainError("vertex v" + std::to_string(v) + " has valency " +
                        std::to_string(valencies_[v]) +
                        "; map geometries need valency at least 3");
    }
  }
}

PointClass classify_vertex(const MapGeometry& g, int vertex) {
  if (vertex < 0 || static_cast<size_t>(vertex) >= g.valencies().size()) {
    throw DomainError("unknown vertex v" + std::to_string(vertex));
  }
  return classify_point(g.valencies()[vertex], g.mu()[vertex]);
}

std::vector<PointClass> classify_vertices(const MapGeometry& g) {
  std::vector<PointClass> out;
  for (size_t v = 0; v < g.valencies().size(); ++v) {
    out.push_back(classify_vertex(g, static_cast<int>(v)));
  }
  return out;
}

AngleFactor canonical_angle(int valency, PointClass target) {
  if (valency < 3) {
    throw DomainError("valency " + std::to_string(valency) +
                      " is below 3; no angle factor is prescribed");
  }
  switch (target) {
    case PointClass::kEuclidean:
      return AngleFactor(Rational(2, valency));
    case PointClass::kElliptic:
      return AngleFactor(Rational(1, valency));
    case PointClass::kHyperbolic:
      return AngleFactor(Rational(2 + valency, 2 * valency));
  }
  throw DomainError("unknown point class");
}

MapGeometry make_assignment(const CombinatorialMap& m,
                            const std::vector<PointClass>& targets) {
  const MapCensus c = census(m);
  if (targets.size() != c.vertex_valencies.size()) {
    throw DomainError("expected " + std::to_string(c.nu) +
                      " target classes, got " + std::to_string(targets.size()));
  }
  std::vector<AngleFactor> mu;
  for (size_t v = 0; v < targets.size(); ++v) {
    if (c.vertex_valencies[v] < 3) {
      throw DomainError("vertex v" + std::to_string(v) + " has valency " +
                        std::to_string(c.vertex_valencies[v]));
    }
    mu.push_back(canonical_angle(c.vertex_valencies[v], targets[v]));
  }
  return MapGeometry(m, std::move(mu));
}

namespace {

// Faces on either side of every edge.
std::vector<std::pair<int, int>> edge_sides(const CombinatorialMap& m) {
  const std::vector<int> fi = face_index(m);
  std::vector<std::pair<int, int>> sides;
  for (size_t e = 0; e < m.num_edges(); ++e) {
    const int q = static_cast<int>(4 * e);
    sides.emplace_back(fi[q], fi[alpha(q)]);
  }
  return sides;
}

// Component id per face of the face-adjacency graph restricted to kept
// faces; -1 for removed faces.
std::vector<int> kept_components(int num_faces,
                                 const std::vector<std::pair<int, int>>& sides,
                                 const std::vector<char>& removed) {
  std::vector<int> parent(num_faces);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : sides) {
    if (!removed[a] && !removed[b]) parent[find(a)] = find(b);
  }
  std::vector<int> comp(num_faces, -1);
  std::map<int, int> ids;
  for (int f = 0; f < num_faces; ++f) {
    if (removed[f]) continue;
    comp[f] = ids.emplace(find(f), static_cast<int>(ids.size())).first->second;
  }
  return comp;
}

bool remainder_connected(int num_faces,
                         const std::vector<std::pair<int, int>>& sides,
                         const std::vector<char>& removed) {
  const std::vector<int> comp = kept_components(num_faces, sides, removed);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

}  // namespace

MapGeometry with_boundary(const MapGeometry& g, std::vector<int> faces) {
  const int phi = g.num_faces();
  std::sort(faces.begin(), faces.end());
  if (faces.empty()) throw DomainError("boundary needs at least one face");
  if (std::adjacent_find(faces.begin(), faces.end()) != faces.end()) {
    throw DomainError("boundary lists a face twice");
  }
  for (int f : faces) {
    if (f < 0 || f >= phi) {
      throw DomainError("unknown face f" + std::to_string(f));
    }
  }
  if (static_cast<int>(faces.size()) > phi - 1) {
    throw DomainError("boundary of " + std::to_string(faces.size()) +
                      " faces leaves no face; at most " +
                      std::to_string(phi - 1) + " allowed");
  }
  std::vector<char> removed(phi, 0);
  for (int f : faces) removed[f] = 1;
  const auto sides = edge_sides(g.map());
  const std::vector<int> comp = kept_components(phi, sides, removed);
  const int components = *std::max_element(comp.begin(), comp.end()) + 1;
  if (components > 1) {
    // Name the removed face touching the most remaining components.
    int separator = faces.front();
    size_t best = 0;
    for (int f : faces) {
      std::set<int> touched;
      for (const auto& [a, b] : sides) {
        if (a == f && comp[b] >= 0) touched.insert(comp[b]);
        if (b == f && comp[a] >= 0) touched.insert(comp[a]);
      }
      if (touched.size() > best) {
        best = touched.size();
        separator = f;
      }
    }
    throw DomainError("removing the boundary leaves " +
                      std::to_string(components) +
                      " disconnected groups of faces; face f" +
                      std::to_string(separator) + " separates them");
  }
  MapGeometry out = g;
  out.boundary_ = std::move(faces);
  return out;
}

bool equivalent(const MapGeometry& g1, const MapGeometry& g2) {
  if (g1.map().num_quadricells() != g2.map().num_quadricells() ||
      g1.valencies().size() != g2.valencies().size() ||
      g1.boundary().size() != g2.boundary().size()) {
    return false;
  }
  const std::vector<PointClass> c1 = classify_vertices(g1);
  const std::vector<PointClass> c2 = classify_vertices(g2);
  const std::vector<CyclePair> v1 = vertices(g1.map());
  const std::vector<int> vi2 = vertex_index(g2.map());
  const std::vector<CyclePair> f1 = faces(g1.map());
  const std::vector<int> fi2 = face_index(g2.map());
  const std::set<int> boundary2(g2.boundary().begin(), g2.boundary().end());
  for (const MapIsomorphism& iso : isomorphisms(g1.map(), g2.map())) {
    bool ok = true;
    for (size_t u = 0; u < v1.size() && ok; ++u) {
      ok = c1[u] == c2[vi2[iso.mapping[v1[u].cycle[0]]]];
    }
    for (int f : g1.boundary()) {
      if (!ok) break;
      ok = boundary2.count(fi2[iso.mapping[f1[f].cycle[0]]]) > 0;
    }
    if (ok) return true;
  }
  return false;
}

GeometryCounts count_geometries_for_maps(int n, int m, const BigInt& maps) {
  if (n < 1 || m < 1 || maps < 1) {
    throw DomainError("vertex, face and map counts must be positive");
  }
  const BigInt base = power(3, n) * maps;
  return {base, base * m};
}

namespace {

void require_simple_connected(const Graph& g) {
  if (!g.is_simple()) {
    throw DomainError("the closed-form counts are stated for simple graphs");
  }
  if (!g.is_connected()) throw DomainError("graph is disconnected");
}

}  // namespace

FormulaCounts formula_count_without_boundary(const Graph& g) {
  require_simple_connected(g);
  const BigInt aut = graph_automorphisms(g).size();
  const Rational orientable(power(3, g.num_vertices()) *
                                rotation_system_count(g),
                            2 * aut);
  const Rational twist_factor = power(2, betti(g)) - 1;
  return {orientable, orientable * twist_factor};
}

FormulaCounts formula_count_with_boundary(const Graph& g) {
  require_simple_connected(g);
  const BigInt aut = graph_automorphisms(g).size();
  const GenusPolynomial poly = genus_polynomial(g);
  const BigInt bracket = BigInt(betti(g) + 1) * rotation_system_count(g) -
                         2 * BigInt(poly.derivative_at_one());
  const Rational orientable(power(3, g.num_vertices()) * bracket, 2 * aut);
  const Rational twist_factor = power(2, betti(g)) - 1;
  return {orientable, orientable * twist_factor};
}

namespace {

// Faces f whose removal alone leaves a connected remainder.
std::vector<char> admissible_boundary_faces(const CombinatorialMap& m) {
  const int phi = static_cast<int>(faces(m).size());
  const auto sides = edge_sides(m);
  std::vector<char> ok(phi, 0);
  if (phi < 2) return ok;
  for (int f = 0; f < phi; ++f) {
    std::vector<char> removed(phi, 0);
    removed[f] = 1;
    ok[f] = remainder_connected(phi, sides, removed);
  }
  return ok;
}

int cycle_count(const std::vector<int>& perm) {
  return static_cast<int>(cycles_of_images(perm).size());
}

}  // namespace

BigInt class_vector_orbits(const CombinatorialMap& m, bool with_boundary) {
  const std::vector<MapIsomorphism> autos = automorphisms(m);
  const std::vector<CyclePair> vs = vertices(m);
  const std::vector<int> vi = vertex_index(m);
  const std::vector<CyclePair> fs = faces(m);
  const std::vector<int> fi = face_index(m);
  const std::vector<char> admissible =
      with_boundary ? admissible_boundary_faces(m) : std::vector<char>();
  BigInt sum = 0;
  for (const MapIsomorphism& theta : autos) {
    std::vector<int> vperm(vs.size());
    for (size_t u = 0; u < vs.size(); ++u) {
      vperm[u] = vi[theta.mapping[vs[u].cycle[0]]];
    }
    BigInt fixed = power(3, cycle_count(vperm));
    if (with_boundary) {
      int fixed_faces = 0;
      for (size_t f = 0; f < fs.size(); ++f) {
        if (admissible[f] && fi[theta.mapping[fs[f].cycle[0]]] ==
                                 static_cast<int>(f)) {
          ++fixed_faces;
        }
      }
      fixed *= fixed_faces;
    }
    sum += fixed;
  }
  const BigInt order = autos.size();
  if (sum % order != 0) {
    throw StructureError("Burnside sum is not divisible by |Aut M|");
  }
  return sum / order;
}

BurnsideCounts burnside_counts(const Graph& g, bool with_boundary) {
  const NonIsomorphicCount classes = count_nonisomorphic_maps(g, false);
  BurnsideCounts out{0, 0};
  for (size_t c = 0; c < classes.classes.size(); ++c) {
    const BigInt n = class_vector_orbits(classes.representatives[c], with_boundary);
    (classes.classes[c].orientable ? out.orientable : out.non_orientable) += n;
  }
  return out;
}

BigInt burnside_count(const Graph& g, bool orientable_only) {
  const BurnsideCounts c = burnside_counts(g);
  return orientable_only ? c.orientable : c.orientable + c.non_orientable;
}

Rational polygon_angle_sum(int k, const std::vector<AnglePoint>& h) {
  if (k < 3) throw DomainError("a polygon needs at least 3 sides");
  if (static_cast<int>(h.size()) > k) {
    throw DomainError("at most one listed point per side: " +
                      std::to_string(h.size()) + " points for " +
                      std::to_string(k) + " sides");
  }
  Rational sum = k + static_cast<int>(h.size()) - 2;
  for (const AnglePoint& p : h) {
    if (p.valency < 3) {
      throw DomainError("point valency " + std::to_string(p.valency) +
                        " is below 3");
    }
    sum -= Rational(p.valency) * p.mu.q() / 2;
  }
  return sum;
}

std::strong_ordering triangle_class_sum(const std::vector<AnglePoint>& h) {
  const Rational s = polygon_angle_sum(3, h);
  if (s < 1) return std::strong_ordering::less;
  if (s > 1) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace mapgeom
