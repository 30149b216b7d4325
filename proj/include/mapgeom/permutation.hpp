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

#ifndef MAPGEOM_PERMUTATION_HPP_
#define MAPGEOM_PERMUTATION_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mapgeom {

// A finite set of distinct string labels with stable dense indices.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  size_t size() const { return labels_.size(); }
  const std::string& label(int index) const { return labels_[index]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

GroundSetPtr make_ground_set(std::vector<std::string> labels);

// Ground set {0, 1, ..., n-1} labelled by decimal strings.
GroundSetPtr make_index_ground_set(int n);

using Cycle = std::vector<int>;

// Bijection of a ground set, stored as an index image table.
class Permutation {
 public:
  // Throws std::invalid_argument if image is not a bijection of the ground.
  Permutation(GroundSetPtr ground, std::vector<int> image);

  static Permutation identity(GroundSetPtr ground);
  // Cycles may omit fixed points. Throws std::invalid_argument on repeats.
  static Permutation from_cycles(GroundSetPtr ground,
                                 const std::vector<Cycle>& cycles);

  int operator()(int x) const { return image_[x]; }
  const std::vector<int>& images() const { return image_; }
  const GroundSetPtr& ground() const { return ground_; }
  size_t size() const { return image_.size(); }
  bool is_identity() const;

  // Equal iff same ground set object (or equal labels) and same images.
  bool operator==(const Permutation& other) const;

 private:
  GroundSetPtr ground_;
  std::vector<int> image_;
};

// Right-to-left: compose(p, q)(x) == p(q(x)). Throws std::invalid_argument
// when the ground sets differ.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// Orbits of the group generated by generators. Each orbit is ascending and
// orbits are ordered by least element. With no generators every element is
// its own orbit.
std::vector<std::vector<int>> orbits(std::span<const Permutation> generators,
                                     const GroundSet& ground);

// Same closure on raw image tables over {0..n-1}.
std::vector<std::vector<int>> orbits_of_images(
    size_t n, std::span<const std::vector<int>* const> generators);

// Orbit id per element, ids numbered by least element.
std::vector<int> orbit_ids(size_t n,
                           std::span<const std::vector<int>* const> generators);

// Disjoint cycles including fixed points, each starting at its least element,
// ordered by least element.
std::vector<Cycle> cycle_decomposition(const Permutation& p);
std::vector<Cycle> cycles_of_images(const std::vector<int>& image);

// "(a,b,c)(d,e)". Fixed points are omitted unless include_fixed is set; the
// identity prints as "()".
std::string format_cycles(const Permutation& p, bool include_fixed = false);

struct CycleToken {
  std::string label;
  int column;  // 1-based, after adding column_offset
};

// Splits "(a,b)(c)" into cycles of raw labels. Whitespace is ignored. Throws
// ParseError on unbalanced parentheses, empty labels or empty cycles.
std::vector<std::vector<CycleToken>> tokenize_cycles(std::string_view text,
                                                     int line = 0,
                                                     int column_offset = 0);

// Inverse of format_cycles. Throws ParseError on unknown or repeated labels.
Permutation parse_cycles(GroundSetPtr ground, std::string_view text,
                         int line = 0, int column_offset = 0);

}  // namespace mapgeom

#endif  // MAPGEOM_PERMUTATION_HPP_
