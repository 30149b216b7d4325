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

#ifndef MAPGEOM_EMBEDDING_HPP_
#define MAPGEOM_EMBEDDING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/graph.hpp"
#include "mapgeom/rational.hpp"

namespace mapgeom {

// Edge-end (dart) 2e is the end of edge e at edges()[e].first, 2e+1 the end
// at edges()[e].second.
struct RotationSystem {
  std::vector<std::vector<int>> darts;  // cyclic order of darts per vertex
};

struct Embedding {
  RotationSystem rotation;
  std::vector<bool> twisted;  // per edge
  CombinatorialMap map;
};

// Builds the map of a rotation system with twist bits. Base element e of the
// result is labelled "e<e>". The first end of edge e carries quadricell e and
// the second end carries ab.e, or b.e when the edge is twisted; each vertex
// rotation becomes the P-cycle of those quadricells and its a-conjugate.
CombinatorialMap build_map(const Graph& g, const RotationSystem& rotation,
                           const std::vector<bool>& twisted);

enum class EmbeddingKind { kOrientable, kLocallyOrientable };

inline constexpr std::uint64_t kDefaultEmbeddingBound = 5'000'000;

// Streams embeddings in a fixed order: the rotation choice vector is
// lexicographic with vertex 0 slowest, each vertex keeping its least dart
// first and permuting the rest lexicographically; for locally orientable
// enumeration every rotation system is followed by all twist masks on the
// co-tree edges, mask 0 first.
class EmbeddingEnumerator {
 public:
  // Throws DomainError for disconnected or edgeless graphs, or when the
  // total exceeds bound.
  EmbeddingEnumerator(const Graph& g, EmbeddingKind kind,
                      std::uint64_t bound = kDefaultEmbeddingBound);

  std::optional<Embedding> next();

  const BigInt& total() const { return total_; }
  const std::vector<int>& cotree_edges() const { return cotree_; }

 private:
  bool advance_rotation();

  Graph graph_;
  EmbeddingKind kind_;
  BigInt total_;
  std::vector<int> cotree_;
  std::vector<std::vector<int>> rotation_;
  std::uint64_t twist_mask_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// prod over vertices of (deg - 1)!
BigInt rotation_system_count(const Graph& g);

// 2^betti * rotation_system_count
BigInt locally_orientable_count(const Graph& g);

std::vector<Embedding> enumerate_orientable(
    const Graph& g, std::uint64_t bound = kDefaultEmbeddingBound);
std::vector<Embedding> enumerate_locally_orientable(
    const Graph& g, std::uint64_t bound = kDefaultEmbeddingBound);

class GenusPolynomial {
 public:
  explicit GenusPolynomial(std::vector<std::uint64_t> coefficients);

  // Coefficient of x^k (0 outside the stored range).
  std::uint64_t coefficient(int k) const;
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  int min_genus() const;
  int max_genus() const;
  std::uint64_t total() const;
  // Value of the derivative at x = 1, i.e. sum k g_k.
  std::uint64_t derivative_at_one() const;
  // "2 + 14x", "4 + 2x", "1 + 3x^2"; zero terms omitted.
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> coeffs_;
};

GenusPolynomial genus_polynomial(const Graph& g,
                                 std::uint64_t bound = kDefaultEmbeddingBound);

struct MapClass {
  size_t representative = 0;  // index in enumeration order
  std::uint64_t size = 0;     // embeddings in the class
  int automorphisms = 0;      // |Aut M|
  int chi = 0;
  bool orientable = true;
};

struct NonIsomorphicCount {
  std::vector<MapClass> classes;
  std::vector<CombinatorialMap> representatives;  // parallel to classes
  std::uint64_t raw_count = 0;
  BigInt graph_automorphisms = 0;  // acting on darts
  // sum over classes of 2 |Aut G| / |Aut M|
  Rational checksum = 0;
  bool checksum_matches() const { return checksum == Rational(raw_count); }
};

// Groups the enumerated maps by canonical code. The checksum uses the
// dart automorphism count, which is |Aut G| for simple graphs.
NonIsomorphicCount count_nonisomorphic_maps(
    const Graph& g, bool orientable_only,
    std::uint64_t bound = kDefaultEmbeddingBound);

}  // namespace mapgeom

#endif  // MAPGEOM_EMBEDDING_HPP_
