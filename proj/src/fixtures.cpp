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

#include "mapgeom/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mapgeom/embedding.hpp"
#include "mapgeom/map_io.hpp"

namespace mapgeom {

CombinatorialMap map_from_triangles(int num_vertices,
                                    const std::vector<Triangle>& triangles) {
  std::map<std::pair<int, int>, int> directed;  // directed edge -> triangle
  for (size_t t = 0; t < triangles.size(); ++t) {
    const Triangle& tri = triangles[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k];
      const int b = tri[(k + 1) % 3];
      if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices || a == b) {
        throw std::invalid_argument("triangle with a bad vertex");
      }
      if (!directed.emplace(std::pair{a, b}, static_cast<int>(t)).second) {
        throw std::invalid_argument("directed edge " + std::to_string(a) +
                                    "->" + std::to_string(b) +
                                    " occurs twice");
      }
    }
  }
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<std::pair<int, int>> edges;
  for (const Triangle& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k];
      const int b = tri[(k + 1) % 3];
      if (!directed.count({b, a})) {
        throw std::invalid_argument("edge " + std::to_string(a) + "-" +
                                    std::to_string(b) +
                                    " lies on only one triangle");
      }
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      if (edge_id.emplace(key, static_cast<int>(edges.size())).second) {
        edges.emplace_back(a, b);
      }
    }
  }
  auto dart = [&](int v, int w) {
    const int e = edge_id.at({std::min(v, w), std::max(v, w)});
    return edges[e].first == v ? 2 * e : 2 * e + 1;
  };
  // Triangle (v, a, b) puts b right after a around v.
  std::vector<std::map<int, int>> successor(num_vertices);
  for (const Triangle& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      const int v = tri[k];
      successor[v][dart(v, tri[(k + 1) % 3])] = dart(v, tri[(k + 2) % 3]);
    }
  }
  RotationSystem rotation;
  for (int v = 0; v < num_vertices; ++v) {
    if (successor[v].empty()) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " lies on no triangle");
    }
    std::vector<int> cycle;
    const int first = successor[v].begin()->first;
    int d = first;
    do {
      cycle.push_back(d);
      d = successor[v].at(d);
    } while (d != first && cycle.size() <= successor[v].size());
    if (cycle.size() != successor[v].size()) {
      throw std::invalid_argument("triangles around vertex " +
                                  std::to_string(v) + " do not form a disk");
    }
    rotation.darts.push_back(std::move(cycle));
  }
  const Graph g = Graph::with_vertex_count(num_vertices, edges);
  return build_map(g, rotation, std::vector<bool>(edges.size(), false));
}

CombinatorialMap k4_torus_map() {
  return parse_map(
      "base: x y z u v w\n"
      "P: (x,y,z)(ab.x,u,w)(ab.z,ab.u,v)(ab.y,ab.v,ab.w)"
      "(a.x,a.z,a.y)(b.x,a.w,a.u)(b.z,a.v,b.u)(b.y,b.w,b.v)\n");
}

CombinatorialMap planar_k4_map() {
  return map_from_triangles(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

std::vector<Triangle> icosahedron_triangles() {
  return {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
          {1, 6, 2},  {2, 7, 3},  {3, 8, 4},  {4, 9, 5},  {5, 10, 1},
          {2, 6, 7},  {3, 7, 8},  {4, 8, 9},  {5, 9, 10}, {1, 10, 6},
          {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10}};
}

std::vector<Triangle> octahedron_triangles() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
          {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
}

std::vector<Triangle> torus_triangles(int rows, int cols) {
  if (rows < 3 || cols < 3) {
    throw std::invalid_argument("torus grid needs at least 3 x 3 vertices");
  }
  auto v = [&](int i, int j) {
    return ((i % rows + rows) % rows) * cols + ((j % cols + cols) % cols);
  };
  std::vector<Triangle> out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      out.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  }
  return out;
}

CombinatorialMap icosahedron_map() {
  return map_from_triangles(12, icosahedron_triangles());
}

CombinatorialMap octahedron_map() {
  return map_from_triangles(6, octahedron_triangles());
}

CombinatorialMap torus_triangulation(int rows, int cols) {
  return map_from_triangles(rows * cols, torus_triangles(rows, cols));
}

CombinatorialMap mixed_valency_torus() {
  constexpr int kSize = 4;
  auto v = [](int i, int j) {
    return ((i % kSize + kSize) % kSize) * kSize + ((j % kSize + kSize) % kSize);
  };
  // Flip the diagonal a-b shared by triangles (a, b, c) and (d, b, a).
  const int a = v(0, 0), b = v(1, 0), c = v(1, 1), d = v(0, -1);
  std::vector<Triangle> tris;
  for (const Triangle& t : torus_triangles(kSize, kSize)) {
    if (t == Triangle{a, b, c} || t == Triangle{d, b, a}) continue;
    tris.push_back(t);
  }
  tris.push_back({a, d, c});
  tris.push_back({d, b, c});
  return map_from_triangles(kSize * kSize, tris);
}

}  // namespace mapgeom
