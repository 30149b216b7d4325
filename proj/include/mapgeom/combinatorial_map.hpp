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

#ifndef MAPGEOM_COMBINATORIAL_MAP_HPP_
#define MAPGEOM_COMBINATORIAL_MAP_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mapgeom/graph.hpp"
#include "mapgeom/permutation.hpp"

namespace mapgeom {

// Element of the Klein four-group {1, a, b, ab}. The numeric value doubles
// as a bit mask, so multiplication is XOR.
enum class Klein : std::uint8_t { kOne = 0, kAlpha = 1, kBeta = 2, kAlphaBeta = 3 };

constexpr Klein operator*(Klein a, Klein b) {
  return static_cast<Klein>(static_cast<std::uint8_t>(a) ^
                            static_cast<std::uint8_t>(b));
}

// Quadricell k.x of base element x is stored at index 4 * x + k.
constexpr int quadricell(int base, Klein k) {
  return 4 * base + static_cast<int>(k);
}
constexpr int base_of(int q) { return q >> 2; }
constexpr Klein klein_of(int q) { return static_cast<Klein>(q & 3); }
constexpr int apply_klein(Klein k, int q) { return q ^ static_cast<int>(k); }
constexpr int alpha(int q) { return q ^ 1; }
constexpr int beta(int q) { return q ^ 2; }
constexpr int alpha_beta(int q) { return q ^ 3; }

// Labels "x", "a.x", "b.x", "ab.x" for every base element x, in index order.
GroundSetPtr make_quadricell_ground(const GroundSet& base);

// M = (X_{a,b}, P). The involutions a and b are implicit in the quadricell
// numbering; only P is stored. Construction does not check the map axioms,
// see validate().
class CombinatorialMap {
 public:
  CombinatorialMap(GroundSetPtr base, std::vector<int> p_images);
  CombinatorialMap(GroundSetPtr base, Permutation p);

  const GroundSetPtr& base() const { return base_; }
  const GroundSetPtr& quadricells() const { return quadricells_; }
  const Permutation& P() const { return p_; }
  int P(int q) const { return p_(q); }
  size_t num_quadricells() const { return p_.size(); }
  size_t num_edges() const { return base_->size(); }
  const std::string& label(int q) const { return quadricells_->label(q); }

  // The permutation a*b as an explicit permutation (for generic orbit code).
  Permutation alpha_beta_permutation() const;
  Permutation alpha_permutation() const;
  Permutation beta_permutation() const;

 private:
  GroundSetPtr base_;
  GroundSetPtr quadricells_;
  Permutation p_;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::optional<int> witness;  // quadricell index
  std::string detail;
};

struct ValidationReport {
  AxiomCheck involutions;
  AxiomCheck conjugation;   // aP = P^-1 a
  AxiomCheck transitivity;  // <a, b, P> has a single orbit
  AxiomCheck basic;         // no P^k x = a x

  bool ok() const {
    return involutions.passed && conjugation.passed && transitivity.passed &&
           basic.passed;
  }
  std::vector<const AxiomCheck*> checks() const {
    return {&involutions, &conjugation, &transitivity, &basic};
  }
};

ValidationReport validate(const CombinatorialMap& m);

// Throws StructureError naming the first failing check.
void require_valid(const CombinatorialMap& m);

// A vertex (or face) is a pair {C, aC^-1a} of cycles. cycle is the member
// holding the smaller least element.
struct CyclePair {
  Cycle cycle;
  Cycle conjugate;
  size_t valency() const { return cycle.size(); }
};

// Vertices ordered by least quadricell. Throws StructureError if a P-cycle
// has no conjugate partner.
std::vector<CyclePair> vertices(const CombinatorialMap& m);

// Faces are the vertices of the dual, expressed in the quadricells of m:
// cycles of P*a*b paired as {C, bC^-1b}.
std::vector<CyclePair> faces(const CombinatorialMap& m);

// Vertex / face index of every quadricell, matching vertices() / faces().
std::vector<int> vertex_index(const CombinatorialMap& m);
std::vector<int> face_index(const CombinatorialMap& m);

// K-orbits {x, ax, bx, abx}, one per base element.
std::vector<std::array<int, 4>> edges(const CombinatorialMap& m);

// (X_{b,a}, P*a*b), relabelled so that the implicit involutions of the
// result are again the low tag bits: quadricell b.x of m becomes a.x of the
// dual and vice versa.
CombinatorialMap dual(const CombinatorialMap& m);

// Orbit count of <ab, P>.
int orientation_orbit_count(const CombinatorialMap& m);

struct MapCensus {
  int nu = 0;
  int eps = 0;
  int phi = 0;
  int chi = 0;
  bool orientable = false;
  int genus = 0;  // orientable genus, or crosscap number
  int orientation_orbits = 0;
  std::vector<int> vertex_valencies;  // in vertex order
  std::vector<int> face_degrees;      // in face order
};

MapCensus census(const CombinatorialMap& m);

// One graph vertex per map vertex, one edge per base element with endpoints
// read from the vertices containing x and bx.
Graph underlying_graph(const CombinatorialMap& m);

struct MapIsomorphism {
  std::vector<int> mapping;  // quadricell of the first map -> second map
  // Set when both maps are orientable and the bijection carries the
  // <ab, P> orbit of quadricell 0 onto the other orbit.
  bool orientation_reversing = false;
};

// All bijections commuting with a, b and P. At most limit are returned.
std::vector<MapIsomorphism> isomorphisms(
    const CombinatorialMap& m1, const CombinatorialMap& m2,
    size_t limit = std::numeric_limits<size_t>::max());

bool are_isomorphic(const CombinatorialMap& m1, const CombinatorialMap& m2);

std::vector<MapIsomorphism> automorphisms(const CombinatorialMap& m);

// Breadth-first relabelling from every root, driven by (P, a, b); the
// lexicographically least code. Equal codes iff isomorphic maps.
struct CanonicalCode {
  std::vector<int> code;
  int roots_attaining_minimum = 0;  // equals |Aut M|
};
CanonicalCode canonical_code(const CombinatorialMap& m);

}  // namespace mapgeom

#endif  // MAPGEOM_COMBINATORIAL_MAP_HPP_
