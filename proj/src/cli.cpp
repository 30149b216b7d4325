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

#include "mapgeom/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapgeom/combinatorial_map.hpp"
#include "mapgeom/embedding.hpp"
#include "mapgeom/error.hpp"
#include "mapgeom/graph.hpp"
#include "mapgeom/map_geometry.hpp"
#include "mapgeom/map_io.hpp"
#include "mapgeom/smanifold.hpp"
#include "mapgeom/surface_word.hpp"

namespace mapgeom::cli {

namespace {

using Json = nlohmann::ordered_json;

// Unreadable input file; reported like a syntax failure.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* kHex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string multiset(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  std::string out = "{";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

Json sorted_array(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return Json(values);
}

// Orientable genus, or the number of crosscaps.
const char* genus_key(bool orientable) {
  return orientable ? "genus" : "nonorientable_genus";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cycle_text(const CombinatorialMap& m, const Cycle& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += m.label(c[i]);
  }
  return out + ")";
}

std::uint64_t scale_bound() {
  const char* value = std::getenv(kScaleBoundVariable);
  if (value == nullptr || *value == '\0') return kDefaultEmbeddingBound;
  std::string s(value);
  if (!std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 18) {
    throw InputError(std::string(kScaleBoundVariable) +
                     " must be a positive integer, got '" + s + "'");
  }
  return std::stoull(s);
}

class Session {
 public:
  Session(std::vector<std::string> args, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), out_(out), err_(err) {}

  int run();

 private:
  int analyze(const std::string& path);
  int enumerate(const std::string& path);
  int classify_word(const std::vector<std::string>& tokens);
  int geometry_classify(const std::string& path);
  int geometry_angle_sum(const std::string& path);
  int geometry_equivalent(const std::string& first, const std::string& second);
  int smanifold(const std::string& path);

  std::string load(const std::string& path) {
    std::string text = read_file(path);
    inputs_ += text;
    inputs_ += '\0';
    return text;
  }

  Json envelope() const {
    Json j;
    j["command"] = command_;
    j["arguments"] = args_;
    j["input_digest"] = sha256_hex(inputs_);
    return j;
  }

  int emit(const Json& result, const std::string& human, int code) {
    if (json_) {
      Json j = envelope();
      j["result"] = result;
      j["warnings"] = warnings_;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << human;
      for (const std::string& w : warnings_) out_ << "warning: " << w << "\n";
    }
    return code;
  }

  int fail(const std::string& kind, const std::string& message, int code) {
    err_ << "error: " << message << "\n";
    if (json_) {
      Json j = envelope();
      j["error"] = {{"kind", kind}, {"message", message}};
      j["warnings"] = warnings_;
      out_ << j.dump(2) << "\n";
    }
    return code;
  }

  std::vector<std::string> args_;
  std::ostream& out_;
  std::ostream& err_;
  std::string command_;
  std::string inputs_;
  std::vector<std::string> warnings_;
  bool json_ = false;

  // Options filled by CLI11.
  bool genus_polynomial_ = false;
  bool count_geometries_ = false;
  bool nonisomorphic_ = false;
  bool locally_orientable_ = false;
  bool list_ = false;
  bool trace_ = false;
  int sides_ = 0;
  std::vector<std::string> points_;
};

int Session::analyze(const std::string& path) {
  const CombinatorialMap m = parse_map(load(path));
  const ValidationReport report = validate(m);
  Json validation;
  std::string human = "map: " + path + "\n";
  for (const AxiomCheck* check : report.checks()) {
    Json c = {{"passed", check->passed}};
    if (check->witness) c["witness"] = m.label(*check->witness);
    if (!check->detail.empty() && !check->passed) c["detail"] = check->detail;
    validation[check->name] = c;
    human += "check " + check->name + ": " +
             (check->passed ? std::string("pass")
                            : "FAIL (witness " + m.label(*check->witness) +
                                  ": " + check->detail + ")") +
             "\n";
  }
  if (!report.ok()) {
    for (const AxiomCheck* check : report.checks()) {
      if (check->passed) continue;
      err_ << "error: " << check->name << " fails at "
           << (check->witness ? m.label(*check->witness) : std::string("?"))
           << ": " << check->detail << "\n";
    }
    return emit({{"validation", validation}}, human, kExitDomain);
  }
  const MapCensus c = census(m);
  const MapCensus d = census(dual(m));
  Json vs = Json::array();
  for (const CyclePair& v : vertices(m)) {
    vs.push_back({cycle_text(m, v.cycle), cycle_text(m, v.conjugate)});
  }
  Json result;
  result["validation"] = validation;
  result["census"] = {{"vertices", c.nu},
                      {"edges", c.eps},
                      {"faces", c.phi},
                      {"euler_characteristic", c.chi},
                      {"orientable", c.orientable},
                      {genus_key(c.orientable), c.genus},
                      {"orientation_orbits", c.orientation_orbits},
                      {"vertex_valencies", sorted_array(c.vertex_valencies)},
                      {"face_degrees", sorted_array(c.face_degrees)}};
  result["vertices"] = vs;
  result["dual"] = {{"vertices", d.nu},
                    {"edges", d.eps},
                    {"faces", d.phi},
                    {"euler_characteristic", d.chi}};
  std::ostringstream h;
  h << human << "vertices: " << c.nu << "\n"
    << "edges: " << c.eps << "\n"
    << "faces: " << c.phi << "\n"
    << "euler characteristic: " << c.chi << "\n"
    << "orientable: " << yes_no(c.orientable) << "\n"
    << (c.orientable ? "genus: " : "crosscap number: ") << c.genus << "\n"
    << "<ab,P> orbits: " << c.orientation_orbits << "\n"
    << "vertex valencies: " << multiset(c.vertex_valencies) << "\n"
    << "face degrees: " << multiset(c.face_degrees) << "\n";
  for (size_t v = 0; v < vs.size(); ++v) {
    h << "v" << v << ": " << vs[v][0].get<std::string>() << " "
      << vs[v][1].get<std::string>() << "\n";
  }
  h << "dual: vertices " << d.nu << ", edges " << d.eps << ", faces " << d.phi
    << ", euler characteristic " << d.chi << "\n";
  return emit(result, h.str(), kExitOk);
}

Json formula_json(const FormulaCounts& f) {
  return {{"orientable", to_string(f.orientable)},
          {"non_orientable", to_string(f.non_orientable)}};
}

Json oracle_json(const BurnsideCounts& b) {
  return {{"orientable", to_string(b.orientable)},
          {"non_orientable", to_string(b.non_orientable)}};
}

int Session::enumerate(const std::string& path) {
  const Graph g = parse_graph(load(path));
  if (!g.is_connected()) throw DomainError("graph is disconnected");
  const std::uint64_t bound = scale_bound();
  std::ostringstream h;
  Json result;
  const int b = betti(g);
  result["graph"] = {{"vertices", g.num_vertices()},
                     {"edges", g.num_edges()},
                     {"simple", g.is_simple()},
                     {"betti", b}};
  h << "graph: " << g.num_vertices() << " vertices, " << g.num_edges()
    << " edges, simple " << yes_no(g.is_simple()) << ", betti " << b << "\n";

  const EmbeddingKind list_kind = locally_orientable_
                                      ? EmbeddingKind::kLocallyOrientable
                                      : EmbeddingKind::kOrientable;
  // Counting pass (and streaming when --list is given).
  auto count = [&](EmbeddingKind kind) {
    EmbeddingEnumerator it(g, kind, bound);
    std::uint64_t n = 0;
    while (auto e = it.next()) {
      if (list_ && kind == list_kind) {
        const MapCensus c = census(e->map);
        Json twisted = Json::array();
        for (size_t i = 0; i < e->twisted.size(); ++i) {
          if (e->twisted[i]) twisted.push_back(i);
        }
        Json line = {{"index", n},
                     {"rotation", e->rotation.darts},
                     {"twisted_edges", twisted},
                     {"euler_characteristic", c.chi},
                     {"orientable", c.orientable},
                     {genus_key(c.orientable), c.genus}};
        out_ << line.dump() << "\n";
      }
      ++n;
    }
    return n;
  };
  const std::uint64_t orientable = count(EmbeddingKind::kOrientable);
  result["orientable_embeddings"] = orientable;
  h << "orientable embeddings: " << orientable << "\n";
  if (locally_orientable_) {
    const std::uint64_t all = count(EmbeddingKind::kLocallyOrientable);
    result["locally_orientable_embeddings"] = all;
    result["twisted_assignments"] = all - orientable;
    h << "locally orientable embeddings: " << all << "\n"
      << "assignments with a twist: " << all - orientable << "\n";
  }
  if (genus_polynomial_) {
    const GenusPolynomial p = genus_polynomial(g, bound);
    result["genus_polynomial"] = {{"text", p.to_string()},
                                  {"coefficients", p.coefficients()},
                                  {"minimum_genus", p.min_genus()},
                                  {"maximum_genus", p.max_genus()}};
    h << "genus polynomial: " << p.to_string() << "\n";
  }
  if (nonisomorphic_) {
    const NonIsomorphicCount n =
        count_nonisomorphic_maps(g, !locally_orientable_, bound);
    result["nonisomorphic"] = {
        {"classes", n.classes.size()},
        {"raw_count", n.raw_count},
        {"graph_automorphisms", to_string(n.graph_automorphisms)},
        {"checksum", to_string(n.checksum)},
        {"checksum_matches", n.checksum_matches()}};
    h << "non-isomorphic " << (locally_orientable_ ? "" : "orientable ")
      << "maps: " << n.classes.size() << "\n"
      << "orbit-stabilizer checksum: " << to_string(n.checksum) << " (raw "
      << n.raw_count << ", " << (n.checksum_matches() ? "matches" : "MISMATCH")
      << ")\n";
  }
  if (count_geometries_) {
    Json geometries;
    const BurnsideCounts plain = burnside_counts(g, false);
    const BurnsideCounts bounded = burnside_counts(g, true);
    Json without = {{"oracle", oracle_json(plain)}};
    Json with = {{"oracle", oracle_json(bounded)}};
    std::ostringstream formulas;
    if (g.is_simple()) {
      const FormulaCounts f0 = formula_count_without_boundary(g);
      const FormulaCounts f1 = formula_count_with_boundary(g);
      without["formula"] = formula_json(f0);
      with["formula"] = formula_json(f1);
      formulas << "formula without boundary: orientable "
               << to_string(f0.orientable) << ", non-orientable "
               << to_string(f0.non_orientable) << "\n"
               << "formula with one boundary face: orientable "
               << to_string(f1.orientable) << ", non-orientable "
               << to_string(f1.non_orientable) << "\n";
    } else {
      warnings_.push_back(
          "closed-form counts skipped: they are stated for simple graphs");
    }
    geometries["without_boundary"] = without;
    geometries["one_face_boundary"] = with;
    result["geometries"] = geometries;
    h << formulas.str() << "oracle without boundary: orientable "
      << to_string(plain.orientable) << ", non-orientable "
      << to_string(plain.non_orientable) << "\n"
      << "oracle with one boundary face: orientable "
      << to_string(bounded.orientable) << ", non-orientable "
      << to_string(bounded.non_orientable) << "\n";
  }
  if (list_) {
    // JSON lines: the summary is the final line.
    Json j = envelope();
    j["result"] = result;
    j["warnings"] = warnings_;
    out_ << j.dump() << "\n";
    return kExitOk;
  }
  return emit(result, h.str(), kExitOk);
}

Json move_json(const Move& m) {
  return {{"move", m.move}, {"variant", m.variant}, {"positions", m.positions}};
}

int Session::classify_word(const std::vector<std::string>& tokens) {
  std::string text;
  for (const std::string& t : tokens) {
    if (!text.empty()) text += ' ';
    text += t;
  }
  inputs_ = text;
  const SurfaceWord w = parse_word(text);
  const Canonicalization c = canonical_form(w);
  Json trace = Json::array();
  for (const Move& m : c.trace) trace.push_back(move_json(m));
  Json result = {{"word", format_word(w)},
                 {"euler_characteristic", euler_characteristic(w)},
                 {"orientable", is_orientable(w)},
                 {"standard_form", c.surface.to_string()},
                 {"standard_word", format_word(c.word)},
                 {"trace", trace}};
  std::ostringstream h;
  h << "word: " << format_word(w) << "\n"
    << "euler characteristic: " << euler_characteristic(w) << "\n"
    << "orientable: " << yes_no(is_orientable(w)) << "\n"
    << "standard form: " << c.surface.to_string() << "\n"
    << "standard word: " << format_word(c.word) << "\n"
    << "moves: " << c.trace.size() << "\n";
  if (trace_) {
    SurfaceWord current = w;
    for (size_t i = 0; i < c.trace.size(); ++i) {
      const Move& m = c.trace[i];
      current = apply_move(current, m);
      h << "  " << i + 1 << ". " << m.move;
      if (!m.variant.empty()) h << "(" << m.variant << ")";
      h << " at";
      for (int p : m.positions) h << " " << p;
      h << " -> " << format_word(current) << "\n";
    }
  }
  return emit(result, h.str(), kExitOk);
}

int Session::geometry_classify(const std::string& path) {
  const MapGeometry g = parse_geometry(load(path));
  const std::vector<PointClass> classes = classify_vertices(g);
  Json vs = Json::array();
  std::ostringstream h;
  h << "geometry: " << path << "\n";
  for (size_t v = 0; v < classes.size(); ++v) {
    vs.push_back({{"vertex", "v" + std::to_string(v)},
                  {"valency", g.valencies()[v]},
                  {"mu_pi", to_string(g.mu()[v].q())},
                  {"class", to_string(classes[v])}});
    h << "v" << v << ": valency " << g.valencies()[v] << ", mu "
      << to_string(g.mu()[v].q()) << " π, " << to_string(classes[v]) << "\n";
  }
  Json boundary = Json::array();
  for (int f : g.boundary()) boundary.push_back("f" + std::to_string(f));
  h << "boundary:";
  if (g.boundary().empty()) h << " none";
  for (int f : g.boundary()) h << " f" << f;
  h << "\n";
  return emit({{"vertices", vs}, {"boundary", boundary}}, h.str(), kExitOk);
}

int Session::geometry_angle_sum(const std::string& path) {
  const MapGeometry g = parse_geometry(load(path));
  std::vector<AnglePoint> points;
  Json pts = Json::array();
  for (const std::string& ref : points_) {
    const std::optional<int> v = resolve_vertex(g.map(), ref);
    if (!v) throw DomainError("unknown vertex '" + ref + "'");
    points.push_back({g.valencies()[*v], g.mu()[*v]});
    pts.push_back({{"vertex", "v" + std::to_string(*v)},
                   {"valency", g.valencies()[*v]},
                   {"mu_pi", to_string(g.mu()[*v].q())},
                   {"class", to_string(classify_vertex(g, *v))}});
  }
  const Rational sum = polygon_angle_sum(sides_, points);
  Json result = {{"sides", sides_}, {"points", pts}, {"angle_sum_pi", to_string(sum)}};
  std::ostringstream h;
  h << "sides: " << sides_ << ", points: " << points.size() << "\n"
    << "angle sum: " << to_string(sum) << " π\n";
  if (sides_ == 3) {
    const std::strong_ordering o = triangle_class_sum(points);
    const char* rel = o < 0 ? "less than" : (o > 0 ? "greater than" : "equal to");
    result["triangle_vs_pi"] = o < 0 ? "less" : (o > 0 ? "greater" : "equal");
    h << "compared with π: " << rel << "\n";
  }
  return emit(result, h.str(), kExitOk);
}

int Session::geometry_equivalent(const std::string& first,
                                 const std::string& second) {
  const MapGeometry g1 = parse_geometry(load(first));
  const MapGeometry g2 = parse_geometry(load(second));
  const bool eq = equivalent(g1, g2);
  return emit({{"equivalent", eq}}, "equivalent: " + yes_no(eq) + "\n",
              kExitOk);
}

int Session::smanifold(const std::string& path) {
  const CombinatorialMap m = parse_map(load(path));
  require_valid(m);
  const TriangularityReport tri = is_closed_triangular(m);
  if (!tri.triangular) {
    return fail("domain", "not a triangular map: " + tri.diagnosis(),
                kExitDomain);
  }
  const SManifoldClassification cls = classify(m);
  const MapCensus c = census(m);
  Json result = {{"class", cls.tag()},
                 {"label", cls.label()},
                 {"valencies", std::vector<int>(cls.valencies.begin(),
                                                cls.valencies.end())},
                 {"euler_characteristic", c.chi},
                 {"orientable", c.orientable},
                 {"vertices", c.nu}};
  std::ostringstream h;
  h << "class: " << cls.tag() << " (" << cls.label() << ")\n"
    << "valencies: "
    << multiset(std::vector<int>(cls.valencies.begin(), cls.valencies.end()))
    << "\n"
    << "vertices: " << c.nu << ", euler characteristic " << c.chi << "\n";
  if (cls.valencies.size() == 1) {
    const RegularTriangulationRelation rel =
        euler_arithmetic(*cls.valencies.begin());
    const bool holds = rel.holds(c.nu, c.chi);
    result["regular_relation"] = {{"relation", rel.to_string()},
                                  {"holds", holds}};
    h << "regular relation: " << rel.to_string() << " ("
      << (holds ? "holds" : "VIOLATED") << ")\n";
  }
  return emit(result, h.str(), kExitOk);
}

int Session::run() {
  CLI::App app{"Combinatorial maps, surface words and map geometries",
               "mapgeom"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string map_path, graph_path, geom_path, second_path;
  std::vector<std::string> word_tokens;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", json_, "machine-readable report");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "validate and census a map file");
  analyze_cmd->add_option("mapfile", map_path)->required();
  add_json(analyze_cmd);

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "enumerate embeddings of a graph file");
  enumerate_cmd->add_option("graphfile", graph_path)->required();
  enumerate_cmd->add_flag("--genus-polynomial", genus_polynomial_);
  enumerate_cmd->add_flag("--count-geometries", count_geometries_);
  enumerate_cmd->add_flag("--nonisomorphic", nonisomorphic_);
  enumerate_cmd->add_flag("--locally-orientable", locally_orientable_);
  enumerate_cmd->add_flag("--list", list_,
                          "stream every embedding as a JSON line");
  add_json(enumerate_cmd);

  CLI::App* word_cmd = app.add_subcommand("classify-word", "canonicalize a surface word");
  word_cmd->add_option("word", word_tokens)->required();
  word_cmd->add_flag("--trace", trace_, "print every move");
  add_json(word_cmd);

  CLI::App* geometry_cmd = app.add_subcommand("geometry", "map geometry queries");
  geometry_cmd->require_subcommand(1);
  CLI::App* geo_classify = geometry_cmd->add_subcommand("classify", "classify every vertex");
  geo_classify->add_option("geomfile", geom_path)->required();
  add_json(geo_classify);
  CLI::App* geo_sum = geometry_cmd->add_subcommand("angle-sum", "polygon angle sum");
  geo_sum->add_option("geomfile", geom_path)->required();
  geo_sum->add_option("--k", sides_, "number of sides")->required();
  geo_sum->add_option("--point", points_, "vertex met by a side (v<i> or quadricell)");
  add_json(geo_sum);
  CLI::App* geo_eq = geometry_cmd->add_subcommand("equivalent", "compare two geometries");
  geo_eq->add_option("first", geom_path)->required();
  geo_eq->add_option("second", second_path)->required();
  add_json(geo_eq);

  CLI::App* sman_cmd = app.add_subcommand("smanifold", "classify a triangular map");
  sman_cmd->add_option("mapfile", map_path)->required();
  add_json(sman_cmd);

  std::vector<const char*> argv = {"mapgeom"};
  for (const std::string& a : args_) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitSyntax;
  }

  try {
    if (analyze_cmd->parsed()) {
      command_ = "analyze";
      return analyze(map_path);
    }
    if (enumerate_cmd->parsed()) {
      command_ = "enumerate";
      return enumerate(graph_path);
    }
    if (word_cmd->parsed()) {
      command_ = "classify-word";
      return classify_word(word_tokens);
    }
    if (geo_classify->parsed()) {
      command_ = "geometry classify";
      return geometry_classify(geom_path);
    }
    if (geo_sum->parsed()) {
      command_ = "geometry angle-sum";
      return geometry_angle_sum(geom_path);
    }
    if (geo_eq->parsed()) {
      command_ = "geometry equivalent";
      return geometry_equivalent(geom_path, second_path);
    }
    if (sman_cmd->parsed()) {
      command_ = "smanifold";
      return smanifold(map_path);
    }
  } catch (const ParseError& e) {
    return fail("syntax", e.what(), kExitSyntax);
  } catch (const InputError& e) {
    return fail("input", e.what(), kExitSyntax);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), kExitDomain);
  } catch (const StructureError& e) {
    return fail("structure", e.what(), kExitDomain);
  }
  err_ << "error: no command\n";
  return kExitSyntax;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return Session(args, out, err).run();
}

}  // namespace mapgeom::cli
