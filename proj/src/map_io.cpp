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

#include "mapgeom/map_io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "mapgeom/error.hpp"

namespace mapgeom {

namespace {

struct Word {
  std::string text;
  int column;
};

std::vector<Word> split_words(std::string_view line, size_t from) {
  std::vector<Word> words;
  size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    words.push_back({std::string(line.substr(start, i - start)),
                     static_cast<int>(start) + 1});
  }
  return words;
}

struct KeyedLine {
  int number;
  std::string key;
  std::string line;
  size_t value_start;  // index just past the colon
};

// Lines of the form "key: value", skipping blanks and comments.
std::vector<KeyedLine> keyed_lines(std::string_view text) {
  std::vector<KeyedLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = 0;
    while (first < line.size() &&
           std::isspace(static_cast<unsigned char>(line[first])))
      ++first;
    if (first == line.size() || line[first] == '#') continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", number,
                       static_cast<int>(first) + 1);
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
      key.pop_back();
    out.push_back({number, key, line, colon + 1});
  }
  return out;
}

bool valid_base_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ',' || c == '.' || c == ':' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

struct ParsedMap {
  CombinatorialMap map;
  std::vector<KeyedLine> rest;  // lines other than base and P
  int last_line;
};

ParsedMap parse_map_lines(std::string_view text) {
  const std::vector<KeyedLine> lines = keyed_lines(text);
  std::vector<KeyedLine> rest;
  std::optional<std::vector<std::string>> base;
  std::vector<const KeyedLine*> p_lines;
  for (const KeyedLine& l : lines) {
    if (l.key == "base") {
      if (base) throw ParseError("second 'base:' line", l.number, 1);
      base.emplace();
      std::map<std::string, int> seen;
      for (const Word& w : split_words(l.line, l.value_start)) {
        if (!valid_base_label(w.text)) {
          throw ParseError("invalid base label '" + w.text + "'", l.number,
                           w.column);
        }
        if (!seen.emplace(w.text, w.column).second) {
          throw ParseError("duplicate base label '" + w.text + "'", l.number,
                           w.column);
        }
        base->push_back(w.text);
      }
      if (base->empty()) throw ParseError("empty base set", l.number, 1);
    } else if (l.key == "P") {
      if (!base) throw ParseError("'P:' before 'base:'", l.number, 1);
      p_lines.push_back(&l);
    } else {
      rest.push_back(l);
    }
  }
  if (!base) throw ParseError("missing 'base:' line", 1, 1);
  if (p_lines.empty()) throw ParseError("missing 'P:' line", 1, 1);
  GroundSetPtr base_set = make_ground_set(*base);
  GroundSetPtr quads = make_quadricell_ground(*base_set);
  std::vector<Cycle> cycles;
  std::vector<char> used(quads->size(), 0);
  for (const KeyedLine* l : p_lines) {
    const std::string_view value =
        std::string_view(l->line).substr(l->value_start);
    for (const auto& tokens :
         tokenize_cycles(value, l->number, static_cast<int>(l->value_start))) {
      Cycle c;
      for (const CycleToken& t : tokens) {
        const std::optional<int> q = quads->index_of(t.label);
        if (!q) {
          throw ParseError("unknown quadricell '" + t.label + "'", l->number,
                           t.column);
        }
        if (used[*q]) {
          throw ParseError("quadricell '" + t.label + "' occurs twice",
                           l->number, t.column);
        }
        used[*q] = 1;
        c.push_back(*q);
      }
      cycles.push_back(std::move(c));
    }
  }
  Permutation p = Permutation::from_cycles(quads, cycles);
  return {CombinatorialMap(base_set, std::move(p)), std::move(rest),
          lines.empty() ? 1 : lines.back().number};
}

}  // namespace

CombinatorialMap parse_map(std::string_view text) {
  ParsedMap parsed = parse_map_lines(text);
  if (!parsed.rest.empty()) {
    const KeyedLine& l = parsed.rest.front();
    throw ParseError("unexpected key '" + l.key + "'", l.number, 1);
  }
  return std::move(parsed.map);
}

std::string format_map(const CombinatorialMap& m) {
  std::string out = "base:";
  for (const std::string& x : m.base()->labels()) out += " " + x;
  out += "\nP: " + format_cycles(m.P()) + "\n";
  return out;
}

std::optional<int> resolve_vertex(const CombinatorialMap& m,
                                  std::string_view ref) {
  const std::vector<int> vi = vertex_index(m);
  int count = 0;
  for (int v : vi) count = std::max(count, v + 1);
  if (ref.size() > 1 && ref[0] == 'v') {
    bool digits = true;
    for (char c : ref.substr(1)) digits = digits && std::isdigit(c);
    if (digits && !m.quadricells()->index_of(ref)) {
      const int v = std::stoi(std::string(ref.substr(1)));
      if (v < count) return v;
      return std::nullopt;
    }
  }
  const std::optional<int> q = m.quadricells()->index_of(ref);
  if (!q) return std::nullopt;
  return vi[*q];
}

MapGeometry parse_geometry(std::string_view text) {
  ParsedMap parsed = parse_map_lines(text);
  require_valid(parsed.map);
  const int nu = static_cast<int>(vertices(parsed.map).size());
  std::vector<std::optional<Rational>> mu(nu);
  std::vector<int> mu_line(nu, 0);
  std::optional<std::vector<int>> boundary;
  for (const KeyedLine& l : parsed.rest) {
    const std::vector<Word> words = split_words(l.line, l.value_start);
    if (l.key == "mu") {
      if (words.size() != 2) {
        throw ParseError("expected 'mu: <vertex> <p>/<q>'", l.number, 1);
      }
      const std::optional<int> v = resolve_vertex(parsed.map, words[0].text);
      if (!v) {
        throw ParseError("unknown vertex '" + words[0].text + "'", l.number,
                         words[0].column);
      }
      if (mu[*v]) {
        throw ParseError("vertex v" + std::to_string(*v) +
                             " already has an angle factor (line " +
                             std::to_string(mu_line[*v]) + ")",
                         l.number, words[0].column);
      }
      Rational q = parse_rational(words[1].text, l.number, words[1].column);
      if (q <= 0 || q >= 1) {
        const std::string name = "v" + std::to_string(*v);
        throw ParseError("angle factor of vertex " + name +
                             (words[0].text == name ? "" : " (" + words[0].text + ")") +
                             " is " +
                             mapgeom::to_string(q) +
                             " pi, outside (0, pi)",
                         l.number, words[1].column);
      }
      mu[*v] = std::move(q);
      mu_line[*v] = l.number;
    } else if (l.key == "boundary") {
      if (boundary) throw ParseError("second 'boundary:' line", l.number, 1);
      boundary.emplace();
      for (const Word& w : words) {
        bool ok = w.text.size() > 1 && w.text[0] == 'f';
        for (size_t i = 1; ok && i < w.text.size(); ++i) {
          ok = std::isdigit(static_cast<unsigned char>(w.text[i]));
        }
        if (!ok) {
          throw ParseError("expected a face 'f<index>', got '" + w.text + "'",
                           l.number, w.column);
        }
        boundary->push_back(std::stoi(w.text.substr(1)));
      }
    } else {
      throw ParseError("unexpected key '" + l.key + "'", l.number, 1);
    }
  }
  std::vector<AngleFactor> factors;
  for (int v = 0; v < nu; ++v) {
    if (!mu[v]) {
      throw ParseError("vertex v" + std::to_string(v) + " has no 'mu:' line",
                       parsed.last_line + 1, 1);
    }
    factors.emplace_back(*mu[v]);
  }
  MapGeometry g(std::move(parsed.map), std::move(factors));
  if (boundary) return with_boundary(g, *boundary);
  return g;
}

std::string format_geometry(const MapGeometry& g) {
  std::string out = format_map(g.map());
  for (size_t v = 0; v < g.mu().size(); ++v) {
    out += "mu: v" + std::to_string(v) + " " + to_string(g.mu()[v].q()) + "\n";
  }
  if (!g.boundary().empty()) {
    out += "boundary:";
    for (int f : g.boundary()) out += " f" + std::to_string(f);
    out += "\n";
  }
  return out;
}

}  // namespace mapgeom
