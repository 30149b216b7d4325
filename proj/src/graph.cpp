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

#include "mapgeom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mapgeom/error.hpp"

namespace mapgeom {

Graph::Graph(std::vector<std::string> vertex_labels,
             std::vector<std::pair<int, int>> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
  const int n = static_cast<int>(labels_.size());
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate vertex label");
    }
  }
  degree_.assign(n, 0);
  multiplicity_.assign(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++degree_[u];
    ++degree_[v];
    ++multiplicity_[u][v];
    if (u != v) ++multiplicity_[v][u];
    if (u == v || multiplicity_[u][v] > 1) simple_ = false;
  }
}

Graph Graph::with_vertex_count(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph(std::move(labels), std::move(edges));
}

int Graph::multiplicity(int u, int v) const { return multiplicity_[u][v]; }

bool Graph::is_connected() const {
  const size_t n = labels_.size();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (size_t v = 0; v < n; ++v) {
      if (!seen[v] && multiplicity_[u][v] > 0) {
        seen[v] = 1;
        ++reached;
        stack.push_back(static_cast<int>(v));
      }
    }
  }
  return reached == n;
}

namespace {

std::vector<std::pair<std::string, int>> split_words(std::string_view line) {
  std::vector<std::pair<std::string, int>> words;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    words.emplace_back(std::string(line.substr(start, i - start)),
                       static_cast<int>(start) + 1);
  }
  return words;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;
  bool have_header = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0].first[0] == '#') continue;
    if (!have_header) {
      if (words[0].first != "vertices:") {
        throw ParseError("expected 'vertices:' header", line_no,
                         words[0].second);
      }
      for (size_t i = 1; i < words.size(); ++i) {
        if (!index.emplace(words[i].first, static_cast<int>(labels.size()))
                 .second) {
          throw ParseError("duplicate vertex '" + words[i].first + "'",
                           line_no, words[i].second);
        }
        labels.push_back(words[i].first);
      }
      if (labels.empty()) {
        throw ParseError("graph has no vertices", line_no, words[0].second);
      }
      have_header = true;
      continue;
    }
    if (words.size() != 2) {
      throw ParseError("edge line must name exactly two vertices", line_no,
                       words[0].second);
    }
    int ends[2];
    for (int k = 0; k < 2; ++k) {
      auto it = index.find(words[k].first);
      if (it == index.end()) {
        throw ParseError("unknown vertex '" + words[k].first + "'", line_no,
                         words[k].second);
      }
      ends[k] = it->second;
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  if (!have_header) throw ParseError("missing 'vertices:' header", 1, 1);
  return Graph(std::move(labels), std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::string out = "vertices:";
  for (const std::string& l : g.labels()) out += " " + l;
  out += "\n";
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u) + " " + g.label(v) + "\n";
  }
  return out;
}

bool same_labelled_graph(const Graph& a, const Graph& b) {
  if (a.labels() != b.labels() || a.num_edges() != b.num_edges()) return false;
  for (size_t u = 0; u < a.num_vertices(); ++u) {
    for (size_t v = 0; v < a.num_vertices(); ++v) {
      if (a.multiplicity(u, v) != b.multiplicity(u, v)) return false;
    }
  }
  return true;
}

namespace {

void extend_automorphism(const Graph& g, std::vector<int>& image,
                         std::vector<char>& used, int v,
                         std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(g.num_vertices());
  if (v == n) {
    out.push_back(image);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w] || g.degree(w) != g.degree(v) ||
        g.multiplicity(w, w) != g.multiplicity(v, v)) {
      continue;
    }
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      ok = g.multiplicity(u, v) == g.multiplicity(image[u], w);
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = 1;
    extend_automorphism(g, image, used, v + 1, out);
    used[w] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> graph_automorphisms(const Graph& g,
                                                  int vertex_bound) {
  if (static_cast<int>(g.num_vertices()) > vertex_bound) {
    throw DomainError("graph automorphism search refused: " +
                      std::to_string(g.num_vertices()) +
                      " vertices exceeds the bound of " +
                      std::to_string(vertex_bound));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> image(g.num_vertices(), -1);
  std::vector<char> used(g.num_vertices(), 0);
  extend_automorphism(g, image, used, 0, out);
  return out;
}

BigInt dart_automorphism_count(const Graph& g, int vertex_bound) {
  BigInt count = graph_automorphisms(g, vertex_bound).size();
  const int n = static_cast<int>(g.num_vertices());
  for (int u = 0; u < n; ++u) {
    const int loops = g.multiplicity(u, u);
    count *= factorial(loops) * power(2, loops);
    for (int v = u + 1; v < n; ++v) count *= factorial(g.multiplicity(u, v));
  }
  return count;
}

int betti(const Graph& g) {
  if (!g.is_connected()) {
    throw DomainError("Betti number needs a connected graph");
  }
  return static_cast<int>(g.num_edges()) - static_cast<int>(g.num_vertices()) +
         1;
}

std::vector<int> spanning_tree_edges(const Graph& g) {
  if (!g.is_connected()) throw DomainError("graph is disconnected");
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::vector<int>> incident(n);
  for (size_t e = 0; e < g.num_edges(); ++e) {
    const auto& [u, v] = g.edges()[e];
    incident[u].push_back(static_cast<int>(e));
    if (v != u) incident[v].push_back(static_cast<int>(e));
  }
  std::vector<int> tree;
  std::vector<char> seen(n, 0);
  std::deque<int> queue = {0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int e : incident[u]) {
      const auto& [a, b] = g.edges()[e];
      const int w = a == u ? b : a;
      if (seen[w]) continue;
      seen[w] = 1;
      tree.push_back(e);
      queue.push_back(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::with_vertex_count(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::with_vertex_count(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::with_vertex_count(n, std::move(edges));
}

Graph bouquet_graph(int loops) {
  return Graph::with_vertex_count(
      1, std::vector<std::pair<int, int>>(loops, {0, 0}));
}

Graph dipole_graph(int edges) {
  return Graph::with_vertex_count(
      2, std::vector<std::pair<int, int>>(edges, {0, 1}));
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::with_vertex_count(a + b, std::move(edges));
}

}  // namespace mapgeom
