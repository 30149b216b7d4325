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

#include "mapgeom/permutation.hpp"

#include <algorithm>
#include <stdexcept>

#include "mapgeom/error.hpp"

namespace mapgeom {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate ground-set label '" +
                                  labels_[i] + "'");
    }
  }
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroundSetPtr make_ground_set(std::vector<std::string> labels) {
  return std::make_shared<const GroundSet>(std::move(labels));
}

GroundSetPtr make_index_ground_set(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_ground_set(std::move(labels));
}

Permutation::Permutation(GroundSetPtr ground, std::vector<int> image)
    : ground_(std::move(ground)), image_(std::move(image)) {
  if (!ground_ || image_.size() != ground_->size()) {
    throw std::invalid_argument("image size does not match ground set");
  }
  std::vector<char> seen(image_.size(), 0);
  for (int y : image_) {
    if (y < 0 || static_cast<size_t>(y) >= image_.size() || seen[y]) {
      throw std::invalid_argument("image is not a bijection");
    }
    seen[y] = 1;
  }
}

Permutation Permutation::identity(GroundSetPtr ground) {
  std::vector<int> image(ground->size());
  for (size_t i = 0; i < image.size(); ++i) image[i] = static_cast<int>(i);
  return Permutation(std::move(ground), std::move(image));
}

Permutation Permutation::from_cycles(GroundSetPtr ground,
                                     const std::vector<Cycle>& cycles) {
  const size_t n = ground->size();
  std::vector<int> image(n, -1);
  for (const Cycle& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 0 || static_cast<size_t>(x) >= n || image[x] != -1) {
        throw std::invalid_argument("element repeated or out of range");
      }
      image[x] = c[(i + 1) % c.size()];
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (image[i] == -1) image[i] = static_cast<int>(i);
  }
  return Permutation(std::move(ground), std::move(image));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::operator==(const Permutation& other) const {
  if (ground_ != other.ground_ &&
      ground_->labels() != other.ground_->labels()) {
    return false;
  }
  return image_ == other.image_;
}

namespace {

void require_same_ground(const Permutation& p, const Permutation& q) {
  if (p.ground() != q.ground() &&
      p.ground()->labels() != q.ground()->labels()) {
    throw std::invalid_argument("permutations act on different ground sets");
  }
}

}  // namespace

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_ground(p, q);
  std::vector<int> image(p.size());
  for (size_t x = 0; x < image.size(); ++x) image[x] = p(q(x));
  return Permutation(p.ground(), std::move(image));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> image(p.size());
  for (size_t x = 0; x < image.size(); ++x) image[p(x)] = static_cast<int>(x);
  return Permutation(p.ground(), std::move(image));
}

std::vector<int> orbit_ids(
    size_t n, std::span<const std::vector<int>* const> generators) {
  std::vector<int> id(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (size_t start = 0; start < n; ++start) {
    if (id[start] != -1) continue;
    id[start] = next;
    stack.push_back(static_cast<int>(start));
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const std::vector<int>* g : generators) {
        const int y = (*g)[x];
        if (id[y] == -1) {
          id[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<std::vector<int>> orbits_of_images(
    size_t n, std::span<const std::vector<int>* const> generators) {
  const std::vector<int> id = orbit_ids(n, generators);
  int count = 0;
  for (int v : id) count = std::max(count, v + 1);
  std::vector<std::vector<int>> result(count);
  for (size_t x = 0; x < n; ++x) result[id[x]].push_back(static_cast<int>(x));
  return result;
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> generators,
                                     const GroundSet& ground) {
  std::vector<const std::vector<int>*> images;
  for (const Permutation& g : generators) {
    if (g.size() != ground.size()) {
      throw std::invalid_argument("generator acts on a different ground set");
    }
    images.push_back(&g.images());
  }
  return orbits_of_images(ground.size(), images);
}

std::vector<Cycle> cycles_of_images(const std::vector<int>& image) {
  std::vector<Cycle> result;
  std::vector<char> seen(image.size(), 0);
  for (size_t start = 0; start < image.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (int x = static_cast<int>(start); !seen[x]; x = image[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    result.push_back(std::move(c));
  }
  return result;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  return cycles_of_images(p.images());
}

std::string format_cycles(const Permutation& p, bool include_fixed) {
  std::string out;
  for (const Cycle& c : cycle_decomposition(p)) {
    if (c.size() == 1 && !include_fixed) continue;
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += p.ground()->label(c[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::vector<CycleToken>> tokenize_cycles(std::string_view text,
                                                     int line,
                                                     int column_offset) {
  std::vector<std::vector<CycleToken>> cycles;
  bool open = false;
  std::string current;
  int current_column = 0;
  auto column_of = [&](size_t i) {
    return static_cast<int>(i) + 1 + column_offset;
  };
  auto flush = [&](size_t i) {
    if (current.empty()) {
      // "()" is the identity; anything else with an empty label is an error.
      if (cycles.back().empty() && text[i] == ')') return;
      throw ParseError("empty element label", line, column_of(i));
    }
    cycles.back().push_back({current, current_column});
    current.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) {
        // Labels cannot contain blanks: the next char must be a delimiter.
        size_t j = i;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
        if (j < text.size() && text[j] != ',' && text[j] != ')') {
          throw ParseError("unexpected whitespace inside label", line,
                           column_of(i));
        }
      }
      continue;
    }
    if (c == '(') {
      if (open) throw ParseError("nested '('", line, column_of(i));
      open = true;
      cycles.emplace_back();
    } else if (c == ')') {
      if (!open) throw ParseError("unmatched ')'", line, column_of(i));
      flush(i);
      open = false;
    } else if (c == ',') {
      if (!open) throw ParseError("',' outside a cycle", line, column_of(i));
      flush(i);
    } else {
      if (!open) {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line, column_of(i));
      }
      if (current.empty()) current_column = column_of(i);
      current += c;
    }
  }
  if (open) {
    throw ParseError("unterminated cycle", line,
                     column_of(text.empty() ? 0 : text.size() - 1));
  }
  std::erase_if(cycles, [](const auto& c) { return c.empty(); });
  return cycles;
}

Permutation parse_cycles(GroundSetPtr ground, std::string_view text, int line,
                         int column_offset) {
  std::vector<Cycle> cycles;
  std::vector<char> used(ground->size(), 0);
  for (const auto& tokens : tokenize_cycles(text, line, column_offset)) {
    Cycle c;
    for (const CycleToken& t : tokens) {
      const std::optional<int> x = ground->index_of(t.label);
      if (!x) {
        throw ParseError("unknown element '" + t.label + "'", line, t.column);
      }
      if (used[*x]) {
        throw ParseError("element '" + t.label + "' occurs twice", line,
                         t.column);
      }
      used[*x] = 1;
      c.push_back(*x);
    }
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(std::move(ground), cycles);
}

}  // namespace mapgeom
