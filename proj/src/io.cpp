#include "sunchaser/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sunchaser {

namespace {

Json chords_to_json(const std::vector<Chord>& chords) {
  Json out = Json::array();
  for (const Chord& c : chords) out.push_back(Json::array({c.a, c.b}));
  return out;
}

std::vector<Chord> chords_from_json(const Json& j, const char* where) {
  if (!j.is_array()) fail(Errc::bad_format, std::string(where) + " must be an array of pairs");
  std::vector<Chord> chords;
  chords.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      fail(Errc::bad_format, std::string(where) + " entries must be [i, j] integer pairs");
    chords.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return chords;
}

int order_from_json(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    fail(Errc::bad_format, "missing integer field \"n\"");
  return j["n"].get<int>();
}

}  // namespace

Json to_json(const OuterplanarTriangulation& g) {
  Json j;
  j["kind"] = "outerplanar";
  j["n"] = g.order();
  j["chords"] = chords_to_json(g.chords());
  return j;
}

Json to_json(const HamiltonianTriangulation& g) {
  Json j;
  j["kind"] = "hamiltonian";
  j["n"] = g.order();
  j["inner"] = chords_to_json(g.inner().chords());
  j["outer"] = chords_to_json(g.outer().chords());
  return j;
}

Json to_json(const GraphVariant& g) {
  return std::visit([](const auto& graph) { return to_json(graph); }, g);
}

Json to_json(const Coloring& c) {
  Json j;
  j["k"] = c.k;
  Json colors = Json::array();
  for (std::uint8_t col : c.colors) colors.push_back(static_cast<int>(col));
  j["colors"] = std::move(colors);
  return j;
}

Json to_json(const SunVerdict& v) {
  Json j;
  j["is_generalized_sun"] = v.is_generalized_sun;
  j["n_mod_4"] = v.n_mod_4;
  j["degree_two"] = v.degree_two;
  j["central"] = v.central;
  if (v.special_parity) j["special_parity"] = *v.special_parity;
  return j;
}

Json to_json(const CouponVerdict& v) {
  Json j;
  j["valid"] = v.valid;
  Json violations = Json::array();
  for (const CouponViolation& violation : v.violations) {
    Json item;
    item["vertex"] = violation.vertex;
    item["missing_classes"] = violation.missing_classes;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["n"] = r.n;
  j["total"] = r.total;
  j["generalized_suns"] = r.generalized_suns;
  j["colorable"] = r.colorable;
  j["discrepancies"] = r.discrepancies;
  return j;
}

Json to_json(const Augmentation& a) {
  Json j;
  j["added_edge"] = Json::array({a.added_edge.a, a.added_edge.b});
  j["exchanged"] = to_json(a.exchanged);
  j["coloring"] = to_json(a.coloring);
  return j;
}

GraphVariant graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Errc::bad_format, "graph document must be an object with a \"kind\" field");
  const std::string kind = j["kind"].get<std::string>();
  const int n = order_from_json(j);
  if (kind == "outerplanar") {
    if (!j.contains("chords")) fail(Errc::bad_format, "missing \"chords\"");
    return OuterplanarTriangulation::make(n, chords_from_json(j["chords"], "chords"));
  }
  if (kind == "hamiltonian") {
    if (!j.contains("inner") || !j.contains("outer"))
      fail(Errc::bad_format, "missing \"inner\" or \"outer\"");
    return HamiltonianTriangulation::make(n, chords_from_json(j["inner"], "inner"),
                                          chords_from_json(j["outer"], "outer"));
  }
  fail(Errc::bad_format, "unknown kind \"" + kind + "\"");
}

Coloring coloring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer() || !j.contains("colors") ||
      !j["colors"].is_array())
    fail(Errc::bad_format, "coloring document needs integer \"k\" and array \"colors\"");
  Coloring c;
  c.k = j["k"].get<int>();
  if (c.k < 1 || c.k > 64) fail(Errc::bad_format, "k outside 1..64");
  c.colors.reserve(j["colors"].size());
  for (const Json& item : j["colors"]) {
    if (!item.is_number_integer()) fail(Errc::bad_format, "colors entries must be integers");
    const int col = item.get<int>();
    if (col < 0 || col >= c.k) fail(Errc::bad_format, "color value outside 0..k-1");
    c.colors.push_back(static_cast<std::uint8_t>(col));
  }
  return c;
}

namespace {

Json parse_document(std::istream& in, const std::string& what) {
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Errc::bad_format, "invalid JSON in " + what);
  return j;
}

Json load_document(const std::string& path) {
  if (path == "-") return parse_document(std::cin, "stdin");
  std::ifstream in(path);
  if (!in.is_open()) fail(Errc::bad_format, "cannot open " + path);
  return parse_document(in, path);
}

}  // namespace

GraphVariant load_graph(const std::string& path) { return graph_from_json(load_document(path)); }

Coloring load_coloring(const std::string& path) {
  return coloring_from_json(load_document(path));
}

namespace {

struct DotEdge {
  Chord edge;
  const char* style;  // nullptr for solid cycle edges
};

std::string render_dot(int n, std::vector<DotEdge> edges, const Coloring* coloring) {
  if (coloring && static_cast<int>(coloring->colors.size()) != n)
    fail(Errc::length_mismatch, "coloring length does not match graph order");
  std::sort(edges.begin(), edges.end(),
            [](const DotEdge& l, const DotEdge& r) { return l.edge < r.edge; });
  std::ostringstream out;
  out << "graph sunchaser {\n";
  out << "  node [shape=circle style=filled fillcolor=white];\n";
  if (coloring) {
    for (int v = 0; v < n; ++v) {
      if (coloring->colors[v] == 0)
        out << "  " << v << " [fillcolor=white];\n";
      else
        out << "  " << v << " [fillcolor=black fontcolor=white];\n";
    }
  } else {
    for (int v = 0; v < n; ++v) out << "  " << v << ";\n";
  }
  for (const DotEdge& e : edges) {
    out << "  " << e.edge.a << " -- " << e.edge.b;
    if (e.style) out << " [style=" << e.style << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

void push_cycle_edges(int n, std::vector<DotEdge>& edges) {
  for (int i = 0; i < n; ++i) edges.push_back({Chord(i, (i + 1) % n), nullptr});
}

}  // namespace

std::string to_dot(const OuterplanarTriangulation& g, const Coloring* coloring) {
  std::vector<DotEdge> edges;
  push_cycle_edges(g.order(), edges);
  for (const Chord& c : g.chords()) edges.push_back({c, "dashed"});
  return render_dot(g.order(), std::move(edges), coloring);
}

std::string to_dot(const HamiltonianTriangulation& g, const Coloring* coloring) {
  std::vector<DotEdge> edges;
  push_cycle_edges(g.order(), edges);
  for (const Chord& c : g.inner().chords()) edges.push_back({c, "dashed"});
  for (const Chord& c : g.outer().chords()) edges.push_back({c, "dotted"});
  return render_dot(g.order(), std::move(edges), coloring);
}

std::string to_dot(const GraphVariant& g, const Coloring* coloring) {
  return std::visit([coloring](const auto& graph) { return to_dot(graph, coloring); }, g);
}

}  // namespace sunchaser
