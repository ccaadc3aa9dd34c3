#pragma once

#include "transversal/birkhoff.hpp"
#include "transversal/core.hpp"
#include "transversal/graphs.hpp"
#include "transversal/groups.hpp"
#include "transversal/hypersdr.hpp"
#include "transversal/latin.hpp"
#include "transversal/matroids.hpp"
#include "transversal/posets.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace transversal::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file. Unreadable files and syntax errors throw
/// InvalidInput naming the path.
Json read_json(const std::string& path);

/// Field access that reports the dotted path of the first offending field.
const Json& field(const Json& object, const std::string& key, const std::string& where);
std::string as_string(const Json& value, const std::string& where);
std::size_t as_index(const Json& value, const std::string& where);
std::int64_t as_integer(const Json& value, const std::string& where);
std::vector<std::string> as_strings(const Json& value, const std::string& where);

/// {"ground": [...], "sets": [[...], ...]}
SetFamily parse_family(const Json& j);
Json family_to_json(const SetFamily& family);

/// {"ground": [...], "grid": [[[...], ...], ...]}
ArrayFamily parse_array(const Json& j);

/// {"partA": [...], "partB": [...], "edges": [[a, b], ...]}
BipartiteGraph parse_bipartite(const Json& j);

/// Simple graph, {"vertices": [...], "edges": [[u, v], ...]}, optionally with
/// "source", "sink" and "mode" ("edge" or "vertex") for Menger queries.
/// A bipartite "partA"/"partB" file is accepted as the union of its parts.
struct GraphInput {
    Graph graph;
    std::optional<std::size_t> source;
    std::optional<std::size_t> sink;
    DisjointMode mode = DisjointMode::vertex;
};
GraphInput parse_graph(const Json& j);

/// {"vertices": [...]?, "edges": [[u, v], ...], "capacity": [...], "source", "sink"}.
/// Without "vertices" the vertex order is first appearance in "edges".
FlowNetwork parse_network(const Json& j);

/// {"elements": [...], "less_than": [[x, y], ...]}
Poset parse_poset(const Json& j);

/// {"n": 3, "entries": [["1/3", ...], ...]}; bare integers are accepted too.
RationalMatrix parse_matrix(const Json& j);
Json matrix_to_json(const RationalMatrix& m);

/// {"n": 4, "rows": [[1, 2, 3, 4], ...]}, or with "symbols": [...] naming the
/// alphabet in order, in which case rows hold symbol names.
struct RectangleInput {
    LatinRectangle rectangle;
    std::vector<std::string> symbols;  // symbols[k] names symbol k + 1
};
RectangleInput parse_rectangle(const Json& j);
Json rectangle_to_json(const LatinRectangle& rect, const std::vector<std::string>& symbols);

/// {"points": [...], "blocks": [[...], ...]}
BlockDesign parse_design(const Json& j);

/// {"kind": "free" | "uniform" | "partition" | "graphic" | "linear" | "explicit", ...}
MatroidOracle parse_matroid(const Json& j);

/// {"elements": [...], "table": [[...]]} or {"permutations": [[...]], "degree": d},
/// with an optional "subgroup" list of generator names.
struct GroupInput {
    FiniteGroup group;
    std::vector<std::size_t> generators;
};
GroupInput parse_group(const Json& j);

/// {"vertices": [...], "hypergraphs": [[[...], ...], ...]}
HypergraphFamily parse_hypergraphs(const Json& j);

} // namespace transversal::io
