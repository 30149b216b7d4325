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

#include "mapgeom/combinatorial_map.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "mapgeom/error.hpp"

namespace mapgeom {

GroundSetPtr make_quadricell_ground(const GroundSet& base) {
  std::vector<std::string> labels;
  labels.reserve(4 * base.size());
  for (const std::string& x : base.labels()) {
    labels.push_back(x);
    labels.push_back("a." + x);
    labels.push_back("b." + x);
    labels.push_back("ab." + x);
  }
  return make_ground_set(std::move(labels));
}

CombinatorialMap::CombinatorialMap(GroundSetPtr base,
                                   std::vector<int> p_images)
    : base_(std::move(base)),
      quadricells_(make_quadricell_ground(*base_)),
      p_(quadricells_, std::move(p_images)) {}

CombinatorialMap::CombinatorialMap(GroundSetPtr base, Permutation p)
    : base_(std::move(base)),
      quadricells_(p.ground()),
      p_(std::move(p)) {
  if (p_.size() != 4 * base_->size()) {
    throw std::invalid_argument("P must act on 4|X| quadricells");
  }
}

namespace {

Permutation klein_permutation(const GroundSetPtr& ground, Klein k) {
  std::vector<int> image(ground->size());
  for (size_t q = 0; q < image.size(); ++q) {
    image[q] = apply_klein(k, static_cast<int>(q));
  }
  return Permutation(ground, std::move(image));
}

std::vector<int> klein_images(size_t n, Klein k) {
  std::vector<int> image(n);
  for (size_t q = 0; q < n; ++q) image[q] = apply_klein(k, static_cast<int>(q));
  return image;
}

// x -> P(ab(x)), the face permutation.
std::vector<int> face_images(const CombinatorialMap& m) {
  std::vector<int> image(m.num_quadricells());
  for (size_t q = 0; q < image.size(); ++q) {
    image[q] = m.P(alpha_beta(static_cast<int>(q)));
  }
  return image;
}

}  // namespace

Permutation CombinatorialMap::alpha_beta_permutation() const {
  return klein_permutation(quadricells_, Klein::kAlphaBeta);
}
Permutation CombinatorialMap::alpha_permutation() const {
  return klein_permutation(quadricells_, Klein::kAlpha);
}
Permutation CombinatorialMap::beta_permutation() const {
  return klein_permutation(quadricells_, Klein::kBeta);
}

ValidationReport validate(const CombinatorialMap& m) {
  ValidationReport report;
  const int n = static_cast<int>(m.num_quadricells());

  report.involutions.name = "involutions";
  if (m.num_edges() == 0) {
    report.involutions.passed = false;
    report.involutions.detail = "empty base set";
  } else {
    report.involutions.detail =
        "a, b, ab are fixed-point-free involutions commuting by construction";
  }

  report.conjugation.name = "conjugation";
  for (int x = 0; x < n; ++x) {
    // aP = P^-1 a  <=>  P(a(P(x))) = a(x)
    if (m.P(alpha(m.P(x))) != alpha(x)) {
      report.conjugation.passed = false;
      report.conjugation.witness = x;
      report.conjugation.detail =
          "aP(" + m.label(x) + ") = " + m.label(alpha(m.P(x))) +
          " differs from P^-1 a(" + m.label(x) + ")";
      break;
    }
  }

  report.transitivity.name = "transitivity";
  if (n > 0) {
    const std::vector<int> a = klein_images(n, Klein::kAlpha);
    const std::vector<int> b = klein_images(n, Klein::kBeta);
    const std::vector<const std::vector<int>*> gens = {&a, &b,
                                                       &m.P().images()};
    const std::vector<int> ids = orbit_ids(n, gens);
    const int count = *std::max_element(ids.begin(), ids.end()) + 1;
    if (count > 1) {
      report.transitivity.passed = false;
      const int w = static_cast<int>(
          std::find(ids.begin(), ids.end(), 1) - ids.begin());
      report.transitivity.witness = w;
      report.transitivity.detail = std::to_string(count) +
                                   " orbits; " + m.label(w) +
                                   " is not reachable from " + m.label(0);
    }
  }

  report.basic.name = "basic";
  {
    std::vector<int> cycle_of(n, -1);
    std::vector<int> position(n, 0);
    std::vector<int> cycle_length;
    for (const Cycle& c : cycles_of_images(m.P().images())) {
      for (size_t i = 0; i < c.size(); ++i) {
        cycle_of[c[i]] = static_cast<int>(cycle_length.size());
        position[c[i]] = static_cast<int>(i);
      }
      cycle_length.push_back(static_cast<int>(c.size()));
    }
    for (int x = 0; x < n; ++x) {
      const int ax = alpha(x);
      if (cycle_of[x] != cycle_of[ax]) continue;
      const int len = cycle_length[cycle_of[x]];
      const int k = ((position[ax] - position[x]) % len + len) % len;
      report.basic.passed = false;
      report.basic.witness = x;
      report.basic.detail = "P^" + std::to_string(k) + " " + m.label(x) +
                            " = " + m.label(ax) + ", k=" + std::to_string(k);
      break;
    }
  }
  return report;
}

void require_valid(const CombinatorialMap& m) {
  const ValidationReport report = validate(m);
  for (const AxiomCheck* check : report.checks()) {
    if (!check->passed) {
      throw StructureError("map fails the " + check->name +
                           " axiom: " + check->detail);
    }
  }
}

namespace {

// Pairs each cycle of perm with the cycle through inv(first element), and
// checks that inv maps one onto the reverse of the other.
std::vector<CyclePair> pair_cycles(const CombinatorialMap& m,
                                   const std::vector<int>& perm, Klein inv,
                                   const char* what) {
  const std::vector<Cycle> cycles = cycles_of_images(perm);
  std::vector<int> cycle_of(perm.size(), -1);
  for (size_t c = 0; c < cycles.size(); ++c) {
    for (int x : cycles[c]) cycle_of[x] = static_cast<int>(c);
  }
  std::vector<char> used(cycles.size(), 0);
  std::vector<CyclePair> pairs;
  for (size_t c = 0; c < cycles.size(); ++c) {
    if (used[c]) continue;
    const Cycle& cycle = cycles[c];
    const int partner = cycle_of[apply_klein(inv, cycle[0])];
    if (static_cast<size_t>(partner) == c || used[partner]) {
      throw StructureError(std::string("unpaired ") + what + " cycle at " +
                           m.label(cycle[0]));
    }
    const size_t len = cycle.size();
    if (cycles[partner].size() != len) {
      throw StructureError(std::string("conjugate ") + what +
                           " cycles differ in length at " + m.label(cycle[0]));
    }
    for (size_t i = 0; i < len; ++i) {
      const int next = apply_klein(inv, cycle[(i + 1) % len]);
      if (perm[next] != apply_klein(inv, cycle[i])) {
        throw StructureError(std::string("conjugate ") + what +
                             " cycle is not reversed at " +
                             m.label(cycle[i]));
      }
    }
    used[c] = used[partner] = 1;
    pairs.push_back({cycle, cycles[partner]});
  }
  return pairs;
}

std::vector<int> index_of_pairs(size_t n, const std::vector<CyclePair>& ps) {
  std::vector<int> index(n, -1);
  for (size_t i = 0; i < ps.size(); ++i) {
    for (int x : ps[i].cycle) index[x] = static_cast<int>(i);
    for (int x : ps[i].conjugate) index[x] = static_cast<int>(i);
  }
  return index;
}

}  // namespace

std::vector<CyclePair> vertices(const CombinatorialMap& m) {
  require_valid(m);
  return pair_cycles(m, m.P().images(), Klein::kAlpha, "vertex");
}

std::vector<CyclePair> faces(const CombinatorialMap& m) {
  require_valid(m);
  return pair_cycles(m, face_images(m), Klein::kBeta, "face");
}

std::vector<int> vertex_index(const CombinatorialMap& m) {
  return index_of_pairs(m.num_quadricells(), vertices(m));
}

std::vector<int> face_index(const CombinatorialMap& m) {
  return index_of_pairs(m.num_quadricells(), faces(m));
}

std::vector<std::array<int, 4>> edges(const CombinatorialMap& m) {
  std::vector<std::array<int, 4>> result;
  result.reserve(m.num_edges());
  for (size_t x = 0; x < m.num_edges(); ++x) {
    const int q = static_cast<int>(4 * x);
    result.push_back({q, alpha(q), beta(q), alpha_beta(q)});
  }
  return result;
}

namespace {

// Exchanges the a and b tag bits.
int swap_tags(int q) {
  const int tag = q & 3;
  const int swapped = ((tag & 1) << 1) | ((tag & 2) >> 1);
  return (q & ~3) | swapped;
}

}  // namespace

CombinatorialMap dual(const CombinatorialMap& m) {
  require_valid(m);
  const size_t n = m.num_quadricells();
  std::vector<int> image(n);
  for (size_t q = 0; q < n; ++q) {
    const int x = static_cast<int>(q);
    image[swap_tags(x)] = swap_tags(m.P(alpha_beta(x)));
  }
  return CombinatorialMap(m.base(), std::move(image));
}

namespace {

std::vector<int> orientation_ids(const CombinatorialMap& m) {
  const std::vector<int> ab =
      klein_images(m.num_quadricells(), Klein::kAlphaBeta);
  const std::vector<const std::vector<int>*> gens = {&ab, &m.P().images()};
  return orbit_ids(m.num_quadricells(), gens);
}

}  // namespace

int orientation_orbit_count(const CombinatorialMap& m) {
  const std::vector<int> ids = orientation_ids(m);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

MapCensus census(const CombinatorialMap& m) {
  MapCensus c;
  const std::vector<CyclePair> vs = vertices(m);
  const std::vector<CyclePair> fs = faces(m);
  c.nu = static_cast<int>(vs.size());
  c.eps = static_cast<int>(m.num_edges());
  c.phi = static_cast<int>(fs.size());
  c.chi = c.nu - c.eps + c.phi;
  for (const CyclePair& v : vs) {
    c.vertex_valencies.push_back(static_cast<int>(v.valency()));
  }
  for (const CyclePair& f : fs) {
    c.face_degrees.push_back(static_cast<int>(f.valency()));
  }
  c.orientation_orbits = orientation_orbit_count(m);
  if (c.orientation_orbits == 1) {
    c.orientable = false;
    c.genus = 2 - c.chi;
  } else if (c.orientation_orbits == 2) {
    c.orientable = true;
    if (c.chi % 2 != 0) {
      throw StructureError("orientable map with odd Euler characteristic");
    }
    c.genus = (2 - c.chi) / 2;
  } else {
    throw StructureError("<ab, P> has " +
                         std::to_string(c.orientation_orbits) + " orbits");
  }
  return c;
}

Graph underlying_graph(const CombinatorialMap& m) {
  const std::vector<int> vi = vertex_index(m);
  int nv = 0;
  for (int v : vi) nv = std::max(nv, v + 1);
  std::vector<std::string> labels;
  for (int v = 0; v < nv; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<std::pair<int, int>> es;
  for (size_t x = 0; x < m.num_edges(); ++x) {
    const int q = static_cast<int>(4 * x);
    es.emplace_back(vi[q], vi[beta(q)]);
  }
  return Graph(std::move(labels), std::move(es));
}

namespace {

// Extends root1 -> root2 along P, a and b. Returns an empty vector when the
// extension is inconsistent.
std::vector<int> extend_from_root(const CombinatorialMap& m1,
                                  const CombinatorialMap& m2, int root1,
                                  int root2) {
  const size_t n = m1.num_quadricells();
  std::vector<int> theta(n, -1);
  std::vector<int> preimage(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  theta[root1] = root2;
  preimage[root2] = root1;
  queue.push_back(root1);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int q = queue[head];
    const int t = theta[q];
    const int sources[3] = {m1.P(q), alpha(q), beta(q)};
    const int targets[3] = {m2.P(t), alpha(t), beta(t)};
    for (int g = 0; g < 3; ++g) {
      const int s = sources[g];
      const int d = targets[g];
      if (theta[s] == -1) {
        if (preimage[d] != -1) return {};
        theta[s] = d;
        preimage[d] = s;
        queue.push_back(s);
      } else if (theta[s] != d) {
        return {};
      }
    }
  }
  if (queue.size() != n) return {};
  return theta;
}

}  // namespace

std::vector<MapIsomorphism> isomorphisms(const CombinatorialMap& m1,
                                         const CombinatorialMap& m2,
                                         size_t limit) {
  std::vector<MapIsomorphism> result;
  if (m1.num_quadricells() != m2.num_quadricells() ||
      m1.num_quadricells() == 0) {
    return result;
  }
  require_valid(m1);
  require_valid(m2);
  const bool both_orientable =
      orientation_orbit_count(m1) == 2 && orientation_orbit_count(m2) == 2;
  const std::vector<int> ids2 = orientation_ids(m2);
  const int n = static_cast<int>(m1.num_quadricells());
  for (int y = 0; y < n && result.size() < limit; ++y) {
    std::vector<int> theta = extend_from_root(m1, m2, 0, y);
    if (theta.empty()) continue;
    MapIsomorphism iso;
    iso.orientation_reversing = both_orientable && ids2[theta[0]] != ids2[0];
    iso.mapping = std::move(theta);
    result.push_back(std::move(iso));
  }
  return result;
}

bool are_isomorphic(const CombinatorialMap& m1, const CombinatorialMap& m2) {
  if (m1.num_quadricells() != m2.num_quadricells()) return false;
  return canonical_code(m1).code == canonical_code(m2).code;
}

std::vector<MapIsomorphism> automorphisms(const CombinatorialMap& m) {
  return isomorphisms(m, m);
}

namespace {

void code_from_root(const CombinatorialMap& m, int root,
                    std::vector<int>& label, std::vector<int>& order,
                    std::vector<int>& code) {
  const size_t n = m.num_quadricells();
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  code.clear();
  label[root] = 0;
  order.push_back(root);
  for (size_t head = 0; head < order.size(); ++head) {
    const int q = order[head];
    const int next[3] = {m.P(q), alpha(q), beta(q)};
    for (int t : next) {
      if (label[t] == -1) {
        label[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
      code.push_back(label[t]);
    }
  }
  if (order.size() != n) {
    throw StructureError("canonical code needs a transitive map");
  }
}

}  // namespace

CanonicalCode canonical_code(const CombinatorialMap& m) {
  CanonicalCode best;
  const size_t n = m.num_quadricells();
  std::vector<int> label(n);
  std::vector<int> order;
  std::vector<int> code;
  for (size_t root = 0; root < n; ++root) {
    code_from_root(m, static_cast<int>(root), label, order, code);
    if (best.code.empty() || code < best.code) {
      best.code = code;
      best.roots_attaining_minimum = 1;
    } else if (code == best.code) {
      ++best.roots_attaining_minimum;
    }
  }
  return best;
}

}  // namespace mapgeom
