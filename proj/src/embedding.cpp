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

#include "mapgeom/embedding.hpp"

#include <algorithm>
#include <map>

#include "mapgeom/error.hpp"

namespace mapgeom {

CombinatorialMap build_map(const Graph& g, const RotationSystem& rotation,
                           const std::vector<bool>& twisted) {
  const size_t m = g.num_edges();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (size_t e = 0; e < m; ++e) labels.push_back("e" + std::to_string(e));
  auto quad = [&](int dart) {
    const int e = dart / 2;
    if (dart % 2 == 0) return quadricell(e, Klein::kOne);
    return quadricell(e, twisted[e] ? Klein::kBeta : Klein::kAlphaBeta);
  };
  std::vector<int> image(4 * m, -1);
  for (const std::vector<int>& cyc : rotation.darts) {
    const size_t k = cyc.size();
    for (size_t i = 0; i < k; ++i) {
      const int from = quad(cyc[i]);
      const int to = quad(cyc[(i + 1) % k]);
      image[from] = to;
      image[alpha(to)] = alpha(from);
    }
  }
  return CombinatorialMap(make_ground_set(std::move(labels)),
                          std::move(image));
}

BigInt rotation_system_count(const Graph& g) {
  BigInt total = 1;
  for (size_t v = 0; v < g.num_vertices(); ++v) {
    total *= factorial(std::max(g.degree(v) - 1, 0));
  }
  return total;
}

BigInt locally_orientable_count(const Graph& g) {
  return rotation_system_count(g) * power(2, betti(g));
}

EmbeddingEnumerator::EmbeddingEnumerator(const Graph& g, EmbeddingKind kind,
                                         std::uint64_t bound)
    : graph_(g), kind_(kind) {
  if (g.num_edges() == 0) {
    throw DomainError("graph has no edges; maps need at least one edge");
  }
  if (!g.is_connected()) throw DomainError("graph is disconnected");
  total_ = kind == EmbeddingKind::kOrientable ? rotation_system_count(g)
                                              : locally_orientable_count(g);
  if (total_ > bound) {
    throw DomainError("enumeration of " + mapgeom::to_string(total_) +
                      " embeddings exceeds the scale bound of " +
                      std::to_string(bound));
  }
  if (kind == EmbeddingKind::kLocallyOrientable) {
    const std::vector<int> tree = spanning_tree_edges(g);
    for (size_t e = 0; e < g.num_edges(); ++e) {
      if (!std::binary_search(tree.begin(), tree.end(), static_cast<int>(e))) {
        cotree_.push_back(static_cast<int>(e));
      }
    }
  }
  rotation_.assign(g.num_vertices(), {});
  for (size_t e = 0; e < g.num_edges(); ++e) {
    rotation_[g.edges()[e].first].push_back(static_cast<int>(2 * e));
    rotation_[g.edges()[e].second].push_back(static_cast<int>(2 * e + 1));
  }
  for (auto& darts : rotation_) std::sort(darts.begin(), darts.end());
}

bool EmbeddingEnumerator::advance_rotation() {
  for (size_t v = rotation_.size(); v-- > 0;) {
    auto& darts = rotation_[v];
    if (darts.size() > 2 && std::next_permutation(darts.begin() + 1, darts.end())) {
      return true;
    }
  }
  return false;
}

std::optional<Embedding> EmbeddingEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else {
    const std::uint64_t masks = std::uint64_t{1} << cotree_.size();
    if (kind_ == EmbeddingKind::kLocallyOrientable && twist_mask_ + 1 < masks) {
      ++twist_mask_;
    } else {
      twist_mask_ = 0;
      if (!advance_rotation()) {
        done_ = true;
        return std::nullopt;
      }
    }
  }
  std::vector<bool> twisted(graph_.num_edges(), false);
  for (size_t i = 0; i < cotree_.size(); ++i) {
    if ((twist_mask_ >> i) & 1) twisted[cotree_[i]] = true;
  }
  RotationSystem rotation{rotation_};
  CombinatorialMap map = build_map(graph_, rotation, twisted);
  return Embedding{std::move(rotation), std::move(twisted), std::move(map)};
}

namespace {

std::vector<Embedding> collect(const Graph& g, EmbeddingKind kind,
                               std::uint64_t bound) {
  EmbeddingEnumerator it(g, kind, bound);
  std::vector<Embedding> out;
  while (auto e = it.next()) out.push_back(std::move(*e));
  return out;
}

}  // namespace

std::vector<Embedding> enumerate_orientable(const Graph& g,
                                            std::uint64_t bound) {
  return collect(g, EmbeddingKind::kOrientable, bound);
}

std::vector<Embedding> enumerate_locally_orientable(const Graph& g,
                                                    std::uint64_t bound) {
  return collect(g, EmbeddingKind::kLocallyOrientable, bound);
}

GenusPolynomial::GenusPolynomial(std::vector<std::uint64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t GenusPolynomial::coefficient(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[k];
}

int GenusPolynomial::min_genus() const {
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return 0;
}

int GenusPolynomial::max_genus() const {
  return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

std::uint64_t GenusPolynomial::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : coeffs_) t += c;
  return t;
}

std::uint64_t GenusPolynomial::derivative_at_one() const {
  std::uint64_t t = 0;
  for (size_t k = 0; k < coeffs_.size(); ++k) t += k * coeffs_[k];
  return t;
}

std::string GenusPolynomial::to_string() const {
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || coeffs_[k] != 1) out += std::to_string(coeffs_[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

GenusPolynomial genus_polynomial(const Graph& g, std::uint64_t bound) {
  EmbeddingEnumerator it(g, EmbeddingKind::kOrientable, bound);
  std::vector<std::uint64_t> coeffs;
  while (auto e = it.next()) {
    const MapCensus c = census(e->map);
    if (static_cast<size_t>(c.genus) >= coeffs.size()) {
      coeffs.resize(c.genus + 1, 0);
    }
    ++coeffs[c.genus];
  }
  return GenusPolynomial(std::move(coeffs));
}

NonIsomorphicCount count_nonisomorphic_maps(const Graph& g,
                                            bool orientable_only,
                                            std::uint64_t bound) {
  NonIsomorphicCount result;
  result.graph_automorphisms = dart_automorphism_count(g);
  EmbeddingEnumerator it(g,
                         orientable_only ? EmbeddingKind::kOrientable
                                         : EmbeddingKind::kLocallyOrientable,
                         bound);
  std::map<std::vector<int>, size_t> class_of_code;
  size_t index = 0;
  while (auto e = it.next()) {
    CanonicalCode code = canonical_code(e->map);
    auto [pos, inserted] =
        class_of_code.emplace(std::move(code.code), result.classes.size());
    if (inserted) {
      const MapCensus c = census(e->map);
      MapClass cls;
      cls.representative = index;
      cls.automorphisms = code.roots_attaining_minimum;
      cls.chi = c.chi;
      cls.orientable = c.orientable;
      result.classes.push_back(cls);
      result.representatives.push_back(e->map);
    }
    ++result.classes[pos->second].size;
    ++index;
  }
  result.raw_count = index;
  for (const MapClass& cls : result.classes) {
    result.checksum +=
        Rational(2 * result.graph_automorphisms, BigInt(cls.automorphisms));
  }
  return result;
}

}  // namespace mapgeom
