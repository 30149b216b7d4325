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

#ifndef MAPGEOM_GRAPH_HPP_
#define MAPGEOM_GRAPH_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapgeom/rational.hpp"

namespace mapgeom {

// Finite multigraph. Loops and parallel edges are allowed. Edge i joins
// edges()[i].first and edges()[i].second; for loops both are equal.
class Graph {
 public:
  Graph(std::vector<std::string> vertex_labels,
        std::vector<std::pair<int, int>> edges);

  // Vertices labelled "0".."n-1".
  static Graph with_vertex_count(int n, std::vector<std::pair<int, int>> edges);

  size_t num_vertices() const { return labels_.size(); }
  size_t num_edges() const { return edges_.size(); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // A loop contributes 2.
  int degree(int v) const { return degree_[v]; }
  // Number of edges joining u and v (u == v counts loops).
  int multiplicity(int u, int v) const;
  bool is_simple() const { return simple_; }
  bool is_connected() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> multiplicity_;
  bool simple_ = true;
};

// "vertices: a b c" followed by one "u v" edge per line. Blank lines and
// lines starting with '#' are skipped. Throws ParseError.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

// Same vertex labels and the same multiset of unordered endpoint pairs.
bool same_labelled_graph(const Graph& a, const Graph& b);

inline constexpr int kDefaultAutomorphismVertexBound = 10;

// All vertex permutations preserving edge multiplicities (loops included),
// as image vectors, identity first then lexicographic. Throws DomainError
// when the graph has more than vertex_bound vertices.
std::vector<std::vector<int>> graph_automorphisms(
    const Graph& g, int vertex_bound = kDefaultAutomorphismVertexBound);

// Automorphisms of the graph acting on edge-ends: each vertex automorphism
// lifts to prod m(u,v)! * prod (m(u,u)! 2^m(u,u)) dart permutations. Equals
// the vertex automorphism count for simple graphs.
BigInt dart_automorphism_count(
    const Graph& g, int vertex_bound = kDefaultAutomorphismVertexBound);

// eps - nu + 1. Throws DomainError for a disconnected graph.
int betti(const Graph& g);

// Edge indices of the breadth-first spanning tree rooted at vertex 0,
// scanning incident edges in index order. Throws DomainError when
// disconnected.
std::vector<int> spanning_tree_edges(const Graph& g);

// Small named graphs used by tests and fixtures.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph bouquet_graph(int loops);
// Two vertices joined by the given number of parallel edges.
Graph dipole_graph(int edges);
Graph complete_bipartite_graph(int a, int b);

}  // namespace mapgeom

#endif  // MAPGEOM_GRAPH_HPP_
