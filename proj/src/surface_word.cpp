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

#include "mapgeom/surface_word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "mapgeom/error.hpp"

namespace mapgeom {

namespace {

using Letters = std::vector<Letter>;

int mod(int a, int n) { return ((a % n) + n) % n; }

Letters rotated(const Letters& w, int k) {
  const int n = static_cast<int>(w.size());
  Letters out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(w[mod(k + i, n)]);
  return out;
}

Letters inverted(const Letters& segment) {
  Letters out;
  out.reserve(segment.size());
  for (auto it = segment.rbegin(); it != segment.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

std::string fresh_for(const std::set<std::string>& used) {
  for (int n = 1;; ++n) {
    std::string s = "_" + std::to_string(n);
    if (!used.count(s)) return s;
  }
}

std::set<std::string> symbols_of(const Letters& w) {
  std::set<std::string> s;
  for (const Letter& l : w) s.insert(l.symbol);
  return s;
}

}  // namespace

SurfaceWord::SurfaceWord(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty word");
  std::map<std::string, int> count;
  for (const Letter& l : letters_) {
    if (l.symbol.empty()) throw std::invalid_argument("empty symbol");
    if (l.exponent != 1 && l.exponent != -1) {
      throw std::invalid_argument("exponent must be +1 or -1");
    }
    ++count[l.symbol];
  }
  for (const auto& [symbol, c] : count) {
    if (c != 2) {
      throw std::invalid_argument("symbol '" + symbol + "' occurs " +
                                  std::to_string(c) + " times");
    }
  }
}

std::pair<int, int> SurfaceWord::positions(const std::string& symbol) const {
  int first = -1;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].symbol != symbol) continue;
    if (first < 0) {
      first = static_cast<int>(i);
    } else {
      return {first, static_cast<int>(i)};
    }
  }
  throw std::invalid_argument("symbol '" + symbol + "' not in word");
}

std::string SurfaceWord::fresh_symbol() const {
  return fresh_for(symbols_of(letters_));
}

SurfaceWord parse_word(std::string_view text) {
  Letters letters;
  std::map<std::string, std::vector<int>> columns;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::string token(text.substr(start, i - start));
    const int column = static_cast<int>(start) + 1;
    int exponent = 1;
    if (token.back() == '\'') {
      exponent = -1;
      token.pop_back();
    }
    if (token.empty()) throw ParseError("missing symbol before '", 1, column);
    for (char c : token) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw ParseError(std::string("invalid character '") + c +
                             "' in symbol",
                         1, column);
      }
    }
    columns[token].push_back(column);
    letters.push_back({token, exponent});
  }
  if (letters.empty()) throw ParseError("empty word", 1, 1);
  for (const auto& [symbol, cols] : columns) {
    if (cols.size() != 2) {
      throw ParseError("symbol '" + symbol + "' occurs " +
                           std::to_string(cols.size()) +
                           " times; each symbol must occur exactly twice",
                       1, cols.size() > 2 ? cols[2] : cols[0]);
    }
  }
  return SurfaceWord(std::move(letters));
}

std::string format_word(const SurfaceWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.symbol;
    if (l.exponent < 0) out += '\'';
  }
  return out;
}

namespace {

// Union-find over polygon corners. Corner i sits before letter i; letter i
// runs from corner i to corner i+1 when its exponent is +1.
std::vector<int> corner_classes(const Letters& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::map<std::string, std::vector<std::pair<int, int>>> ends;
  for (int i = 0; i < n; ++i) {
    const int a = i;
    const int b = mod(i + 1, n);
    ends[w[i].symbol].push_back(w[i].exponent > 0 ? std::pair{a, b}
                                                  : std::pair{b, a});
  }
  for (const auto& [symbol, e] : ends) {
    parent[find(e[0].first)] = find(e[1].first);
    parent[find(e[0].second)] = find(e[1].second);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = find(i);
  return out;
}

int chi_of(const Letters& w) {
  const std::vector<int> cls = corner_classes(w);
  const int v = static_cast<int>(std::set<int>(cls.begin(), cls.end()).size());
  return v - static_cast<int>(w.size()) / 2 + 1;
}

}  // namespace

int euler_characteristic(const SurfaceWord& w) {
  return chi_of(w.letters());
}

bool is_orientable(const SurfaceWord& w) {
  std::map<std::string, int> sum;
  for (const Letter& l : w.letters()) sum[l.symbol] += l.exponent;
  for (const auto& [symbol, s] : sum) {
    if (s != 0) return false;
  }
  return true;
}

SurfaceWord apply_O1(const SurfaceWord& w, int position, Direction direction) {
  const Letters& ls = w.letters();
  const int n = static_cast<int>(ls.size());
  if (direction == Direction::kBackward) {
    if (position < 0 || position > n) {
      throw std::invalid_argument("O1: position out of range");
    }
    const std::string c = w.fresh_symbol();
    Letters out = ls;
    out.insert(out.begin() + position, {{c, 1}, {c, -1}});
    return SurfaceWord(std::move(out));
  }
  if (position < 0 || position >= n) {
    throw std::invalid_argument("O1: position out of range");
  }
  if (n <= 2) {
    throw std::invalid_argument("O1: the sphere word cannot be reduced");
  }
  const int q = mod(position + 1, n);
  if (ls[q] != ls[position].inverse()) {
    throw std::invalid_argument("O1: no cancelling pair at position");
  }
  Letters out;
  for (int t = 0; t < n; ++t) {
    if (t != position && t != q) out.push_back(ls[t]);
  }
  return SurfaceWord(std::move(out));
}

SurfaceWord apply_O2(const SurfaceWord& w, int position, int other,
                     Variant variant, Direction direction) {
  const Letters& ls = w.letters();
  const int n = static_cast<int>(ls.size());
  if (position < 0 || position >= n) {
    throw std::invalid_argument("O2: position out of range");
  }
  if (direction == Direction::kBackward) {
    const Letter c = ls[position];
    const auto [p1, p2] = w.positions(c.symbol);
    const int partner = p1 == position ? p2 : p1;
    const bool same = ls[partner].exponent == c.exponent;
    if (same != (variant == Variant::kII)) {
      throw std::invalid_argument("O2: variant does not match the exponents");
    }
    std::set<std::string> used = symbols_of(ls);
    const std::string a = fresh_for(used);
    used.insert(a);
    const std::string b = fresh_for(used);
    const Letters split = {{a, 1}, {b, 1}};
    const Letters partner_split = same ? split : inverted(split);
    Letters out;
    for (int t = 0; t < n; ++t) {
      if (t == position) {
        out.insert(out.end(), split.begin(), split.end());
      } else if (t == partner) {
        out.insert(out.end(), partner_split.begin(), partner_split.end());
      } else {
        out.push_back(ls[t]);
      }
    }
    return SurfaceWord(std::move(out));
  }
  if (other < 0 || other >= n) {
    throw std::invalid_argument("O2: position out of range");
  }
  const int p1 = mod(position + 1, n);
  const int q1 = mod(other + 1, n);
  const std::set<int> distinct = {position, p1, other, q1};
  if (distinct.size() != 4) {
    throw std::invalid_argument("O2: the two pairs overlap");
  }
  const Letter& x = ls[position];
  const Letter& y = ls[p1];
  if (x.symbol == y.symbol) {
    throw std::invalid_argument("O2: the pair repeats one symbol");
  }
  const bool match = variant == Variant::kII
                         ? ls[other] == x && ls[q1] == y
                         : ls[other] == y.inverse() && ls[q1] == x.inverse();
  if (!match) throw std::invalid_argument("O2: pattern mismatch");
  const std::string c = w.fresh_symbol();
  Letters out;
  for (int t = 0; t < n; ++t) {
    if (t == position) {
      out.push_back({c, 1});
    } else if (t == other) {
      out.push_back({c, variant == Variant::kII ? 1 : -1});
    } else if (t != p1 && t != q1) {
      out.push_back(ls[t]);
    }
  }
  return SurfaceWord(std::move(out));
}

SurfaceWord apply_O3(const SurfaceWord& w, const O3Segments& seg,
                     Variant variant) {
  const Letters& ls = w.letters();
  const int n = static_cast<int>(ls.size());
  for (int p : {seg.start, seg.first, seg.split, seg.second}) {
    if (p < 0 || p >= n) throw std::invalid_argument("O3: position out of range");
  }
  const int i = mod(seg.first - seg.start, n);
  const int k = mod(seg.split - seg.start, n);
  const int j = mod(seg.second - seg.start, n);
  if (!(i < k && k <= j)) {
    throw std::invalid_argument("O3: segment boundaries out of order");
  }
  const Letters r = rotated(ls, seg.start);
  const Letter& a = r[i];
  const Letter& a2 = r[j];
  if (a.symbol != a2.symbol) {
    throw std::invalid_argument("O3: the marked letters differ");
  }
  const bool same = a.exponent == a2.exponent;
  if (same != (variant == Variant::kII)) {
    throw std::invalid_argument("O3: variant does not match the exponents");
  }
  const Letters A(r.begin(), r.begin() + i);
  const Letters B(r.begin() + i + 1, r.begin() + k);
  const Letters C(r.begin() + k, r.begin() + j);
  const Letters D(r.begin() + j + 1, r.end());
  Letters out;
  out.reserve(n);
  auto append = [&out](const Letters& s) {
    out.insert(out.end(), s.begin(), s.end());
  };
  append(B);
  out.push_back(a);
  append(A);
  if (variant == Variant::kI) {
    append(D);
    out.push_back(a2);
    append(C);
  } else {
    append(inverted(C));
    out.push_back(a2);
    append(inverted(D));
  }
  return SurfaceWord(std::move(out));
}

int StandardSurface::euler_characteristic() const {
  switch (kind) {
    case SurfaceKind::kSphere:
      return 2;
    case SurfaceKind::kOrientable:
      return 2 - 2 * n;
    case SurfaceKind::kNonOrientable:
      return 2 - n;
  }
  return 0;
}

std::string StandardSurface::to_string() const {
  switch (kind) {
    case SurfaceKind::kSphere:
      return "Sphere";
    case SurfaceKind::kOrientable:
      return "Orientable(" + std::to_string(n) + ")";
    case SurfaceKind::kNonOrientable:
      return "NonOrientable(" + std::to_string(n) + ")";
  }
  return "";
}

StandardSurface surface_of(int chi, bool orientable) {
  if (orientable ? (chi > 2 || chi % 2 != 0) : chi > 1) {
    throw DomainError("no closed " +
                      std::string(orientable ? "orientable" : "non-orientable") +
                      " surface has euler characteristic " + std::to_string(chi));
  }
  if (orientable) {
    if (chi == 2) return {SurfaceKind::kSphere, 0};
    return {SurfaceKind::kOrientable, (2 - chi) / 2};
  }
  return {SurfaceKind::kNonOrientable, 2 - chi};
}

namespace {

Variant parse_variant(const std::string& v) {
  if (v == "i") return Variant::kI;
  if (v == "ii") return Variant::kII;
  throw std::invalid_argument("unknown variant '" + v + "'");
}

const char* variant_name(Variant v) { return v == Variant::kI ? "i" : "ii"; }

}  // namespace

SurfaceWord apply_move(const SurfaceWord& w, const Move& m) {
  const auto& p = m.positions;
  if (m.move == "O1" && p.size() == 1) {
    return apply_O1(w, p[0], Direction::kForward);
  }
  if (m.move == "O2" && p.size() == 2) {
    return apply_O2(w, p[0], p[1], parse_variant(m.variant),
                    Direction::kForward);
  }
  if (m.move == "O3" && p.size() == 4) {
    return apply_O3(w, {p[0], p[1], p[2], p[3]}, parse_variant(m.variant));
  }
  if (m.move == "rotate" && p.size() == 1) {
    return SurfaceWord(rotated(w.letters(), p[0]));
  }
  if (m.move == "invert" && p.size() == 2) {
    Letters ls = w.letters();
    if (ls.at(p[0]).symbol != ls.at(p[1]).symbol || p[0] == p[1]) {
      throw std::invalid_argument("invert: positions hold different symbols");
    }
    ls[p[0]].exponent = -ls[p[0]].exponent;
    ls[p[1]].exponent = -ls[p[1]].exponent;
    return SurfaceWord(std::move(ls));
  }
  throw std::invalid_argument("malformed move '" + m.move + "'");
}

SurfaceWord replay(const SurfaceWord& w, const std::vector<Move>& trace) {
  SurfaceWord current = w;
  for (const Move& m : trace) current = apply_move(current, m);
  return current;
}

std::string trace_to_json(const std::vector<Move>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Move& m : trace) {
    arr.push_back(
        {{"move", m.move}, {"variant", m.variant}, {"positions", m.positions}});
  }
  return arr.dump();
}

namespace {

bool is_handle_at(const Letters& w, int t) {
  const int n = static_cast<int>(w.size());
  const Letter& p = w[mod(t, n)];
  const Letter& q = w[mod(t + 1, n)];
  return p.symbol != q.symbol && w[mod(t + 2, n)] == p.inverse() &&
         w[mod(t + 3, n)] == q.inverse();
}

struct BlockParse {
  int crosscaps = 0;
  int handles = 0;
  std::vector<std::pair<int, int>> blocks;  // (start, length)
};

// Splits the word read from offset 0 into crosscaps "x x" and handles
// "p q p' q'", ignoring exponent signs of the first occurrences.
std::optional<BlockParse> parse_blocks(const Letters& r) {
  const int n = static_cast<int>(r.size());
  BlockParse out;
  int i = 0;
  while (i < n) {
    if (i + 1 < n && r[i] == r[i + 1]) {
      ++out.crosscaps;
      out.blocks.emplace_back(i, 2);
      i += 2;
    } else if (i + 3 < n && is_handle_at(r, i)) {
      ++out.handles;
      out.blocks.emplace_back(i, 4);
      i += 4;
    } else {
      return std::nullopt;
    }
  }
  if (out.crosscaps > 0 && out.handles > 0) return std::nullopt;
  return out;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const SurfaceWord& w) : word_(w) {}

  Canonicalization run();

 private:
  const Letters& w() const { return word_.letters(); }
  int size() const { return static_cast<int>(word_.size()); }

  void apply(Move m) {
    word_ = apply_move(word_, m);
    trace_.push_back(std::move(m));
  }
  void apply_o3(int s, int i, int k, int j) {
    const Variant v = w()[i].exponent == w()[j].exponent ? Variant::kII
                                                          : Variant::kI;
    apply({"O3", variant_name(v), {s, i, k, j}});
  }
  int partner(int pos) const {
    const auto [a, b] = word_.positions(w()[pos].symbol);
    return a == pos ? b : a;
  }

  bool reduce_step();
  void reduce() {
    while (reduce_step()) {
    }
  }
  void merge_vertices();
  void gather_crosscaps();
  std::set<std::string> handle_symbols() const;
  void form_handles();
  void convert_handles();
  void normalize();

  SurfaceWord word_;
  std::vector<Move> trace_;
};

bool Canonicalizer::reduce_step() {
  const int n = size();
  if (n <= 2) return false;
  // Cancelling pair on the least symbol.
  std::optional<std::pair<std::string, int>> best;
  for (int p = 0; p < n; ++p) {
    if (w()[mod(p + 1, n)] == w()[p].inverse()) {
      std::pair<std::string, int> cand{w()[p].symbol, p};
      if (!best || cand < *best) best = cand;
    }
  }
  if (best) {
    apply({"O1", "", {best->second}});
    return true;
  }
  // Mergeable pair of pairs; least (symbol, symbol), variant i first.
  using Key = std::tuple<std::string, std::string, int, int, int>;
  std::optional<Key> merge;
  for (int p = 0; p < n; ++p) {
    const Letter& x = w()[p];
    const Letter& y = w()[mod(p + 1, n)];
    if (x.symbol == y.symbol) continue;
    for (int q = 0; q < n; ++q) {
      const int q1 = mod(q + 1, n);
      if (q == p || q == mod(p + 1, n) || q1 == p || q1 == mod(p + 1, n)) {
        continue;
      }
      const Letter& u = w()[q];
      const Letter& v = w()[q1];
      if (u == y.inverse() && v == x.inverse()) {
        Key k{x.symbol, y.symbol, 0, p, q};
        if (!merge || k < *merge) merge = k;
      }
      if (u == x && v == y) {
        Key k{x.symbol, y.symbol, 1, p, q};
        if (!merge || k < *merge) merge = k;
      }
    }
  }
  if (merge) {
    const auto& [s1, s2, variant, p, q] = *merge;
    apply({"O2", variant == 0 ? "i" : "ii", {p, q}});
    return true;
  }
  return false;
}

// Moves corners out of the smallest corner class until one class is left.
void Canonicalizer::merge_vertices() {
  while (size() > 2) {
    const int n = size();
    const std::vector<int> cls = corner_classes(w());
    std::map<int, int> count;
    for (int c : cls) ++count[c];
    if (count.size() == 1) break;
    // Smallest class; ties go to the class met first.
    int target = cls[0];
    for (int i = 0; i < n; ++i) {
      const int c = cls[i];
      if (count[c] < count[target]) target = c;
    }
    std::optional<std::pair<std::string, int>> best;
    for (int i = 0; i < n; ++i) {
      if (cls[i] == target && cls[mod(i + 1, n)] != target) {
        std::pair<std::string, int> cand{w()[mod(i - 1, n)].symbol, i};
        if (!best || cand < *best) best = cand;
      }
    }
    const int i = best->second;
    const int b = mod(i - 1, n);
    apply_o3(b, b, mod(i + 1, n), partner(b));
    reduce();
  }
}

void Canonicalizer::gather_crosscaps() {
  while (true) {
    const int n = size();
    std::optional<std::string> least;
    for (int p = 0; p < n; ++p) {
      const int q = partner(p);
      if (q <= p || w()[p] != w()[q]) continue;
      if (q - p == 1 || mod(p - q, n) == 1) continue;
      if (!least || w()[p].symbol < *least) least = w()[p].symbol;
    }
    if (!least) return;
    const auto [i, j] = word_.positions(*least);
    apply_o3(i, i, j, j);
  }
}

std::set<std::string> Canonicalizer::handle_symbols() const {
  std::set<std::string> out;
  const int n = size();
  if (n < 4) return out;
  for (int t = 0; t < n; ++t) {
    if (is_handle_at(w(), t)) {
      out.insert(w()[t].symbol);
      out.insert(w()[mod(t + 1, n)].symbol);
    }
  }
  return out;
}

// Pairs each linked mixed symbol with a partner into x y x' y'.
void Canonicalizer::form_handles() {
  while (size() > 2) {
    const int n = size();
    const std::set<std::string> in_handles = handle_symbols();
    std::optional<std::string> x;
    for (const Letter& l : w()) {
      if (in_handles.count(l.symbol)) continue;
      const auto [i, j] = word_.positions(l.symbol);
      if (w()[i].exponent == w()[j].exponent) continue;
      if (!x || l.symbol < *x) x = l.symbol;
    }
    if (!x) return;
    const auto [i, j] = word_.positions(*x);
    std::optional<std::string> y;
    for (const Letter& l : w()) {
      if (l.symbol == *x) continue;
      const auto [u, v] = word_.positions(l.symbol);
      const bool in_u = i < u && u < j;
      const bool in_v = i < v && v < j;
      if (in_u != in_v && (!y || l.symbol < *y)) y = l.symbol;
    }
    if (!y) {
      throw std::logic_error("canonical_form: unlinked mixed symbol " + *x);
    }
    const auto [u, v] = word_.positions(*y);
    const int inner = (i < u && u < j) ? u : v;
    const int outer = inner == u ? v : u;
    apply_o3(outer, i, mod(inner + 1, n), j);
    // Now some y is immediately followed by x and then by the other y.
    const auto [x1, x2] = word_.positions(*x);
    const auto [y1, y2] = word_.positions(*y);
    int yy = -1;
    for (int t : {y1, y2}) {
      const int next = mod(t + 1, n);
      if (yy < 0 && (next == x1 || next == x2)) yy = t;
    }
    const int xx = mod(yy + 1, n);
    if (yy < 0 || w()[mod(yy + 2, n)].symbol != *y) {
      throw std::logic_error("canonical_form: handle setup failed");
    }
    const int x_other = xx == x1 ? x2 : x1;
    apply_o3(x_other, yy, xx, mod(yy + 2, n));
  }
}

// Turns each handle adjacent to a crosscap into two more crosscaps.
void Canonicalizer::convert_handles() {
  while (true) {
    const int n = size();
    if (handle_symbols().empty()) return;
    int start = -1;
    for (int t = 0; t < n && start < 0; ++t) {
      if (w()[t] == w()[mod(t + 1, n)] && is_handle_at(w(), t + 2)) start = t;
    }
    if (start < 0) {
      bool any_crosscap = false;
      for (int t = 0; t < n; ++t) {
        any_crosscap = any_crosscap || w()[t] == w()[mod(t + 1, n)];
      }
      if (!any_crosscap) return;
      throw std::logic_error("canonical_form: no crosscap next to a handle");
    }
    const int m = n - 6;
    auto g = [&](int d) { return mod(start + d, n); };
    apply_o3(g(1), g(2), g(3), g(4));
    apply_o3(1, 1, 3 + m, 3 + m);
    apply_o3(mod(m + 5, n), 0, 1, m + 4);
  }
}

void Canonicalizer::normalize() {
  const int n = size();
  int offset = -1;
  if (n == 2) {
    offset = 0;
  } else {
    for (int k = 0; k < n && offset < 0; ++k) {
      if (parse_blocks(rotated(w(), k))) offset = k;
    }
  }
  if (offset < 0) throw std::logic_error("canonical_form: no block structure");
  if (offset != 0) apply({"rotate", "", {offset}});
  auto make_positive = [&](int pos) {
    if (w()[pos].exponent < 0) {
      const int other = partner(pos);
      apply({"invert", "", {std::min(pos, other), std::max(pos, other)}});
    }
  };
  if (n == 2) {
    make_positive(0);
    return;
  }
  const BlockParse blocks = *parse_blocks(w());
  for (const auto& [start, length] : blocks.blocks) {
    make_positive(start);
    if (length == 4) make_positive(start + 1);
  }
}

Canonicalization Canonicalizer::run() {
  const SurfaceWord input = word_;
  reduce();
  merge_vertices();
  gather_crosscaps();
  form_handles();
  convert_handles();
  normalize();
  Canonicalization out{surface_of(chi_of(input.letters()), is_orientable(input)),
                       word_, trace_};
  return out;
}

}  // namespace

bool is_standard_word(const SurfaceWord& w) {
  const Letters& ls = w.letters();
  if (ls.size() == 2) return ls[0].exponent > 0;
  const std::optional<BlockParse> blocks = parse_blocks(ls);
  if (!blocks) return false;
  for (const auto& [start, length] : blocks->blocks) {
    if (ls[start].exponent < 0) return false;
    if (length == 4 && ls[start + 1].exponent < 0) return false;
  }
  return true;
}

Canonicalization canonical_form(const SurfaceWord& w) {
  return Canonicalizer(w).run();
}

SurfaceWord word_of_map(const CombinatorialMap& m) {
  const std::vector<CyclePair> fs = faces(m);
  if (fs.size() != 1) {
    throw DomainError("word_of_map needs a one-face map; this map has " +
                      std::to_string(fs.size()) + " faces");
  }
  Letters letters;
  for (int q : fs[0].cycle) {
    // Tags 1 and a sit at the first end of the edge, b and ab at the second.
    const int tag = static_cast<int>(klein_of(q));
    letters.push_back({m.base()->label(base_of(q)), tag < 2 ? 1 : -1});
  }
  return SurfaceWord(std::move(letters));
}

}  // namespace mapgeom
