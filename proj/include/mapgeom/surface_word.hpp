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

#ifndef MAPGEOM_SURFACE_WORD_HPP_
#define MAPGEOM_SURFACE_WORD_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mapgeom/combinatorial_map.hpp"

namespace mapgeom {

struct Letter {
  std::string symbol;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -exponent}; }
  bool operator==(const Letter&) const = default;
};

// Cyclic word in which every symbol occurs exactly twice. Positions are
// indices into the stored linear representative; moves interpret them
// cyclically.
class SurfaceWord {
 public:
  // Throws std::invalid_argument unless every symbol occurs exactly twice
  // and the word is nonempty.
  explicit SurfaceWord(std::vector<Letter> letters);

  size_t size() const { return letters_.size(); }
  const Letter& operator[](size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  // The two positions of symbol, ascending.
  std::pair<int, int> positions(const std::string& symbol) const;
  // Smallest "_<n>" not used in the word.
  std::string fresh_symbol() const;

  bool operator==(const SurfaceWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Whitespace-separated tokens, inverse marked by a trailing apostrophe.
// Throws ParseError (column of the offending token).
SurfaceWord parse_word(std::string_view text);
std::string format_word(const SurfaceWord& w);

int euler_characteristic(const SurfaceWord& w);
bool is_orientable(const SurfaceWord& w);

enum class Direction { kForward, kBackward };
enum class Variant { kI, kII };

// Forward: deletes the cancelling pair at position, position+1. Backward:
// inserts "c c'" with a fresh c before position (position == size appends).
SurfaceWord apply_O1(const SurfaceWord& w, int position, Direction direction);

// Forward: the pair at position, position+1 and the matching pair at
// other, other+1 become a fresh c and, for variant i, c' (pattern
// "a b ... b' a'") or, for variant ii, c (pattern "a b ... a b").
// Backward: the letter at position is split into two fresh letters; other
// is ignored and the matching occurrence is rewritten per the variant.
SurfaceWord apply_O2(const SurfaceWord& w, int position, int other,
                     Variant variant, Direction direction);

// Segment boundaries for the third move. Reading the word cyclically from
// start, it splits as A a B C a^e D with a at position first and its
// partner at position second; C begins at position split. Variant i needs
// opposite exponents: A a B C a' D -> B a A D a' C. Variant ii needs equal
// ones: A a B C a D -> B a A C' a D'.
struct O3Segments {
  int start = 0;
  int first = 0;
  int split = 0;
  int second = 0;
};

SurfaceWord apply_O3(const SurfaceWord& w, const O3Segments& segments,
                     Variant variant);

enum class SurfaceKind { kSphere, kOrientable, kNonOrientable };

struct StandardSurface {
  SurfaceKind kind = SurfaceKind::kSphere;
  int n = 0;  // handles or crosscaps

  int euler_characteristic() const;
  bool orientable() const { return kind != SurfaceKind::kNonOrientable; }
  // "Sphere", "Orientable(2)", "NonOrientable(3)".
  std::string to_string() const;
  bool operator==(const StandardSurface&) const = default;
};

// The surface a (chi, orientability) pair determines.
StandardSurface surface_of(int chi, bool orientable);

// One step of a canonicalization trace. Besides the three moves, the trace
// uses "rotate" (positions = {k}: cyclic shift so that position k comes
// first) and "invert" (positions = both occurrences of a symbol, whose
// exponents are flipped) to reach the printed standard word.
struct Move {
  std::string move;     // "O1", "O2", "O3", "rotate", "invert"
  std::string variant;  // "i", "ii" or empty
  std::vector<int> positions;

  bool operator==(const Move&) const = default;
};

SurfaceWord apply_move(const SurfaceWord& w, const Move& m);
SurfaceWord replay(const SurfaceWord& w, const std::vector<Move>& trace);

// "[{\"move\":\"O3\",\"variant\":\"ii\",\"positions\":[0,0,2,2]}, ...]"
std::string trace_to_json(const std::vector<Move>& trace);

// True for aa', a a, concatenations of crosscaps x x, or concatenations of
// handles x y x' y', with positive first occurrences.
bool is_standard_word(const SurfaceWord& w);

struct Canonicalization {
  StandardSurface surface;
  SurfaceWord word;
  std::vector<Move> trace;
};

Canonicalization canonical_form(const SurfaceWord& w);

// Boundary word of a one-vertex one-face map. Symbols are the base labels.
// Throws DomainError when the map has more than one vertex or face.
SurfaceWord word_of_map(const CombinatorialMap& m);

}  // namespace mapgeom

#endif  // MAPGEOM_SURFACE_WORD_HPP_
