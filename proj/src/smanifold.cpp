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

#include "mapgeom/smanifold.hpp"

#include "mapgeom/error.hpp"

namespace mapgeom {

std::string TriangularityReport::diagnosis() const {
  std::string out;
  for (const auto& [face, degree] : offending_faces) {
    if (!out.empty()) out += "; ";
    out += "face degree " + std::to_string(degree) + " at f" +
           std::to_string(face);
  }
  return out;
}

TriangularityReport is_closed_triangular(const CombinatorialMap& m) {
  TriangularityReport r;
  const std::vector<int> fi = face_index(m);
  const std::vector<CyclePair> fs = faces(m);
  r.faces = static_cast<int>(fs.size());
  r.edges = static_cast<int>(m.num_edges());
  for (size_t f = 0; f < fs.size(); ++f) {
    const int degree = static_cast<int>(fs[f].valency());
    if (degree != 3) r.offending_faces.emplace_back(static_cast<int>(f), degree);
  }
  // Each edge has one corner on the face through x and one on the face
  // through ax (possibly the same face twice).
  r.edges_two_sided = true;
  for (size_t e = 0; e < m.num_edges(); ++e) {
    const int q = static_cast<int>(4 * e);
    if (fi[q] != fi[beta(q)] || fi[alpha(q)] != fi[alpha_beta(q)]) {
      r.edges_two_sided = false;
    }
  }
  r.corner_count_matches = 3 * r.faces == 2 * r.edges;
  r.triangular = r.offending_faces.empty();
  return r;
}

std::string SManifoldClassification::tag() const {
  return "Δ" + std::to_string(static_cast<int>(cls) + 1);
}

std::string SManifoldClassification::label() const {
  switch (cls) {
    case SManifoldClass::kD1:
      return "elliptic";
    case SManifoldClass::kD2:
      return "euclidean";
    case SManifoldClass::kD3:
      return "hyperbolic";
    case SManifoldClass::kD4:
      return "euclid-elliptic";
    case SManifoldClass::kD5:
      return "elliptic-hyperbolic";
    case SManifoldClass::kD6:
      return "euclid-hyperbolic";
    case SManifoldClass::kD7:
      return "mixed";
  }
  return "";
}

SManifoldClassification classify(const CombinatorialMap& m) {
  const TriangularityReport tri = is_closed_triangular(m);
  if (!tri.triangular) {
    throw DomainError("not a triangular map: " + tri.diagnosis());
  }
  const std::vector<CyclePair> vs = vertices(m);
  std::set<int> present;
  for (size_t v = 0; v < vs.size(); ++v) {
    const int rho = static_cast<int>(vs[v].valency());
    if (rho < 5 || rho > 7) {
      throw DomainError("not an s-manifold: vertex v" + std::to_string(v) +
                        " has valency " + std::to_string(rho) +
                        ", outside {5, 6, 7}");
    }
    present.insert(rho);
  }
  const bool five = present.count(5);
  const bool six = present.count(6);
  const bool seven = present.count(7);
  SManifoldClass cls;
  if (five && six && seven) {
    cls = SManifoldClass::kD7;
  } else if (six && seven) {
    cls = SManifoldClass::kD6;
  } else if (five && seven) {
    cls = SManifoldClass::kD5;
  } else if (five && six) {
    cls = SManifoldClass::kD4;
  } else if (seven) {
    cls = SManifoldClass::kD3;
  } else if (six) {
    cls = SManifoldClass::kD2;
  } else {
    cls = SManifoldClass::kD1;
  }
  return {cls, present};
}

std::optional<int> RegularTriangulationRelation::vertices_for(int chi) const {
  if (chi_per_vertex == 0) return std::nullopt;
  const Rational nu = Rational(chi) / chi_per_vertex;
  if (nu <= 0 || boost::multiprecision::denominator(nu) != 1) {
    return std::nullopt;
  }
  return static_cast<int>(boost::multiprecision::numerator(nu));
}

std::string RegularTriangulationRelation::to_string() const {
  if (chi_per_vertex == 0) return "chi = 0";
  // nu = chi / chi_per_vertex
  return "nu = " + mapgeom::to_string(Rational(1) / chi_per_vertex) + " chi";
}

RegularTriangulationRelation euler_arithmetic(int q) {
  if (q < 5 || q > 7) {
    throw DomainError("regular valency " + std::to_string(q) +
                      " is outside {5, 6, 7}");
  }
  return {q, Rational(6 - q, 6)};
}

}  // namespace mapgeom
