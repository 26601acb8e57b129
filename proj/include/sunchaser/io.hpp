#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "sunchaser/color.hpp"
#include "sunchaser/graph.hpp"
#include "sunchaser/oracle.hpp"
#include "sunchaser/recognize.hpp"

namespace sunchaser {

// Insertion-ordered JSON keeps the wire format bit-exact: fixed key order,
// chords already sorted.
using Json = nlohmann::ordered_json;

using GraphVariant = std::variant<OuterplanarTriangulation, HamiltonianTriangulation>;

Json to_json(const OuterplanarTriangulation& g);
Json to_json(const HamiltonianTriangulation& g);
Json to_json(const GraphVariant& g);
Json to_json(const Coloring& c);
Json to_json(const SunVerdict& v);
Json to_json(const CouponVerdict& v);
Json to_json(const CheckReport& r);
Json to_json(const Augmentation& a);

GraphVariant graph_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);

/// Reads a graph or coloring document from a file, or from stdin when the
/// path is "-".
GraphVariant load_graph(const std::string& path);
Coloring load_coloring(const std::string& path);

/// Deterministic DOT: vertices in index order, edges sorted, cycle edges
/// solid. Outerplanar chords are dashed; for Hamiltonian graphs inner chords
/// are dashed and outer chords dotted. With a coloring, vertices are filled
/// white/black by class.
std::string to_dot(const OuterplanarTriangulation& g, const Coloring* coloring = nullptr);
std::string to_dot(const HamiltonianTriangulation& g, const Coloring* coloring = nullptr);
std::string to_dot(const GraphVariant& g, const Coloring* coloring = nullptr);

}  // namespace sunchaser
