#include "transversal/io.hpp"

#include "transversal/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace transversal::io {

namespace {

std::string at(const std::string& where, std::size_t k) {
    return where + "[" + std::to_string(k) + "]";
}

std::string dot(const std::string& where, const std::string& key) {
    return where.empty() ? key : where + "." + key;
}

const Json& array_field(const Json& object, const std::string& key, const std::string& where) {
    const Json& value = field(object, key, where);
    if (!value.is_array()) {
        throw InvalidInput("field \"" + dot(where, key) + "\" must be an array");
    }
    return value;
}

const Json& as_array(const Json& value, const std::string& where) {
    if (!value.is_array()) {
        throw InvalidInput("field \"" + where + "\" must be an array");
    }
    return value;
}

std::map<std::string, std::size_t> positions(const std::vector<std::string>& names, const std::string& where) {
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (!index.emplace(names[k], k).second) {
            throw InvalidInput("field \"" + at(where, k) + "\" repeats \"" + names[k] + "\"");
        }
    }
    return index;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const Json& value, const std::string& where) {
    const std::string name = as_string(value, where);
    auto it = index.find(name);
    if (it == index.end()) {
        throw InvalidInput("field \"" + where + "\" names unknown element \"" + name + "\"");
    }
    return it->second;
}

std::vector<std::pair<std::string, std::string>> string_pairs(const Json& list, const std::string& where) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const Json& pair = as_array(list[k], at(where, k));
        if (pair.size() != 2) {
            throw InvalidInput("field \"" + at(where, k) + "\" must have two entries");
        }
        pairs.emplace_back(as_string(pair[0], at(at(where, k), 0)), as_string(pair[1], at(at(where, k), 1)));
    }
    return pairs;
}

// Vertex names plus edge list from {"vertices", "edges"}.
Graph parse_simple_graph(const Json& j, const std::string& where) {
    std::vector<std::string> names;
    if (j.contains("vertices")) {
        names = as_strings(j["vertices"], dot(where, "vertices"));
    } else if (j.contains("partA") || j.contains("partB")) {
        names = as_strings(field(j, "partA", where), dot(where, "partA"));
        const auto b = as_strings(field(j, "partB", where), dot(where, "partB"));
        names.insert(names.end(), b.begin(), b.end());
    } else {
        throw InvalidInput("missing field \"" + dot(where, "vertices") + "\"");
    }
    positions(names, dot(where, "vertices"));
    return Graph(names, string_pairs(array_field(j, "edges", where), dot(where, "edges")));
}

} // namespace

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read file \"" + path + "\"");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw InvalidInput("\"" + path + "\" is not valid JSON: " + e.what());
    }
}

const Json& field(const Json& object, const std::string& key, const std::string& where) {
    if (!object.is_object()) {
        throw InvalidInput("field \"" + (where.empty() ? std::string("(top level)") : where) +
                           "\" must be an object");
    }
    auto it = object.find(key);
    if (it == object.end()) {
        throw InvalidInput("missing field \"" + dot(where, key) + "\"");
    }
    return *it;
}

std::string as_string(const Json& value, const std::string& where) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    // Element ids are opaque strings, but bare integers are a common shorthand.
    if (value.is_number_integer()) {
        return std::to_string(value.get<std::int64_t>());
    }
    throw InvalidInput("field \"" + where + "\" must be a string");
}

std::size_t as_index(const Json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw InvalidInput("field \"" + where + "\" must be a nonnegative integer");
    }
    return value.get<std::size_t>();
}

std::int64_t as_integer(const Json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw InvalidInput("field \"" + where + "\" must be an integer");
    }
    return value.get<std::int64_t>();
}

std::vector<std::string> as_strings(const Json& value, const std::string& where) {
    as_array(value, where);
    std::vector<std::string> out;
    for (std::size_t k = 0; k < value.size(); ++k) {
        out.push_back(as_string(value[k], at(where, k)));
    }
    return out;
}

SetFamily parse_family(const Json& j) {
    auto ground = as_strings(field(j, "ground", ""), "ground");
    positions(ground, "ground");
    const Json& sets = array_field(j, "sets", "");
    std::vector<std::vector<std::string>> named;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        named.push_back(as_strings(sets[i], at("sets", i)));
    }
    return SetFamily(std::move(ground), named);
}

Json family_to_json(const SetFamily& family) {
    Json sets = Json::array();
    for (const auto& s : family.sets()) {
        Json members = Json::array();
        for (std::size_t x : s) {
            members.push_back(family.ground()[x]);
        }
        sets.push_back(std::move(members));
    }
    return {{"ground", family.ground()}, {"sets", std::move(sets)}};
}

ArrayFamily parse_array(const Json& j) {
    auto ground = as_strings(field(j, "ground", ""), "ground");
    positions(ground, "ground");
    const Json& grid = array_field(j, "grid", "");
    std::vector<std::vector<std::vector<std::string>>> named;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const Json& row = as_array(grid[r], at("grid", r));
        if (row.size() != as_array(grid[0], at("grid", 0)).size()) {
            throw InvalidInput("field \"" + at("grid", r) + "\" has a different length from grid[0]");
        }
        named.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            named.back().push_back(as_strings(row[c], at(at("grid", r), c)));
        }
    }
    return ArrayFamily(std::move(ground), named);
}

BipartiteGraph parse_bipartite(const Json& j) {
    auto a = as_strings(field(j, "partA", ""), "partA");
    auto b = as_strings(field(j, "partB", ""), "partB");
    positions(a, "partA");
    positions(b, "partB");
    return BipartiteGraph(std::move(a), std::move(b), string_pairs(array_field(j, "edges", ""), "edges"));
}

GraphInput parse_graph(const Json& j) {
    GraphInput input;
    input.graph = parse_simple_graph(j, "");
    auto vertex = [&](const char* key) -> std::optional<std::size_t> {
        if (!j.contains(key)) {
            return std::nullopt;
        }
        const std::string name = as_string(j[key], key);
        auto v = input.graph.index_of(name);
        if (!v) {
            throw InvalidInput(std::string("field \"") + key + "\" names unknown vertex \"" + name + "\"");
        }
        return v;
    };
    input.source = vertex("source");
    input.sink = vertex("sink");
    if (j.contains("mode")) {
        const std::string mode = as_string(j["mode"], "mode");
        if (mode == "edge") {
            input.mode = DisjointMode::edge;
        } else if (mode == "vertex") {
            input.mode = DisjointMode::vertex;
        } else {
            throw InvalidInput("field \"mode\" must be \"edge\" or \"vertex\"");
        }
    }
    return input;
}

FlowNetwork parse_network(const Json& j) {
    const auto edges = string_pairs(array_field(j, "edges", ""), "edges");
    const Json& capacity = array_field(j, "capacity", "");
    if (capacity.size() != edges.size()) {
        throw InvalidInput("field \"capacity\" must have one entry per edge");
    }
    std::vector<std::string> names;
    if (j.contains("vertices")) {
        names = as_strings(j["vertices"], "vertices");
    } else {
        for (const auto& [u, v] : edges) {
            for (const auto& name : {u, v}) {
                if (std::find(names.begin(), names.end(), name) == names.end()) {
                    names.push_back(name);
                }
            }
        }
        for (const char* key : {"source", "sink"}) {
            const std::string name = as_string(field(j, key, ""), key);
            if (std::find(names.begin(), names.end(), name) == names.end()) {
                names.push_back(name);
            }
        }
    }
    const auto index = positions(names, "vertices");
    std::vector<FlowNetwork::Arc> arcs;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::int64_t cap = as_integer(capacity[k], at("capacity", k));
        if (cap < 0) {
            throw InvalidInput("field \"" + at("capacity", k) + "\" is negative");
        }
        arcs.push_back({lookup(index, edges[k].first, at(at("edges", k), 0)),
                        lookup(index, edges[k].second, at(at("edges", k), 1)), cap});
    }
    const std::size_t source = lookup(index, field(j, "source", ""), "source");
    const std::size_t sink = lookup(index, field(j, "sink", ""), "sink");
    return FlowNetwork(std::move(names), std::move(arcs), source, sink);
}

Poset parse_poset(const Json& j) {
    auto elements = as_strings(field(j, "elements", ""), "elements");
    positions(elements, "elements");
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("less_than")) {
        pairs = string_pairs(as_array(j["less_than"], "less_than"), "less_than");
    }
    return Poset(std::move(elements), pairs);
}

RationalMatrix parse_matrix(const Json& j) {
    const std::size_t n = as_index(field(j, "n", ""), "n");
    const Json& entries = array_field(j, "entries", "");
    if (entries.size() != n) {
        throw InvalidInput("field \"entries\" must have n rows");
    }
    RationalMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = as_array(entries[r], at("entries", r));
        if (row.size() != n) {
            throw InvalidInput("field \"" + at("entries", r) + "\" must have n entries");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::string where = at(at("entries", r), c);
            try {
                m(r, c) = parse_rational(as_string(row[c], where));
            } catch (const InvalidInput& e) {
                throw InvalidInput("field \"" + where + "\": " + e.what());
            }
        }
    }
    return m;
}

Json matrix_to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size(); ++c) {
            row.push_back(to_string(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"entries", std::move(rows)}};
}

RectangleInput parse_rectangle(const Json& j) {
    RectangleInput input;
    const std::size_t n = as_index(field(j, "n", ""), "n");
    std::map<std::string, std::size_t> alphabet;
    if (j.contains("symbols")) {
        input.symbols = as_strings(j["symbols"], "symbols");
        if (input.symbols.size() != n) {
            throw InvalidInput("field \"symbols\" must list n symbols");
        }
        alphabet = positions(input.symbols, "symbols");
    }
    std::vector<std::vector<int>> rows;
    const Json& list = array_field(j, "rows", "");
    for (std::size_t r = 0; r < list.size(); ++r) {
        const Json& row = as_array(list[r], at("rows", r));
        rows.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string where = at(at("rows", r), c);
            if (input.symbols.empty()) {
                const std::int64_t symbol = as_integer(row[c], where);
                if (symbol < 1 || symbol > static_cast<std::int64_t>(n)) {
                    throw InvalidInput("field \"" + where + "\" must be a symbol in 1..n");
                }
                rows.back().push_back(static_cast<int>(symbol));
            } else {
                rows.back().push_back(static_cast<int>(lookup(alphabet, row[c], where) + 1));
            }
        }
    }
    input.rectangle = LatinRectangle(n, std::move(rows));
    return input;
}

Json rectangle_to_json(const LatinRectangle& rect, const std::vector<std::string>& symbols) {
    Json rows = Json::array();
    for (const auto& row : rect.cells()) {
        Json out = Json::array();
        for (int symbol : row) {
            if (symbols.empty()) {
                out.push_back(symbol);
            } else {
                out.push_back(symbols[static_cast<std::size_t>(symbol - 1)]);
            }
        }
        rows.push_back(std::move(out));
    }
    Json j = {{"n", rect.order()}, {"rows", std::move(rows)}};
    if (!symbols.empty()) {
        j["symbols"] = symbols;
    }
    return j;
}

BlockDesign parse_design(const Json& j) {
    auto points = as_strings(field(j, "points", ""), "points");
    positions(points, "points");
    const Json& blocks = array_field(j, "blocks", "");
    std::vector<std::vector<std::string>> named;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        named.push_back(as_strings(blocks[b], at("blocks", b)));
    }
    return BlockDesign(std::move(points), named);
}

MatroidOracle parse_matroid(const Json& j) {
    const std::string kind = as_string(field(j, "kind", ""), "kind");
    if (kind == "free" || kind == "uniform" || kind == "partition" || kind == "explicit") {
        auto ground = as_strings(field(j, "ground", ""), "ground");
        const auto index = positions(ground, "ground");
        if (kind == "free") {
            return matroid::free(std::move(ground));
        }
        if (kind == "uniform") {
            return matroid::uniform(std::move(ground), as_index(field(j, "rank", ""), "rank"));
        }
        auto subsets = [&](const char* key) {
            const Json& list = array_field(j, key, "");
            std::vector<std::vector<std::size_t>> out;
            for (std::size_t b = 0; b < list.size(); ++b) {
                const Json& members = as_array(list[b], at(key, b));
                out.emplace_back();
                for (std::size_t k = 0; k < members.size(); ++k) {
                    out.back().push_back(lookup(index, members[k], at(at(key, b), k)));
                }
            }
            return out;
        };
        if (kind == "partition") {
            auto blocks = subsets("blocks");
            const Json& caps_json = array_field(j, "caps", "");
            std::vector<std::size_t> caps;
            for (std::size_t b = 0; b < caps_json.size(); ++b) {
                caps.push_back(as_index(caps_json[b], at("caps", b)));
            }
            return matroid::partition(std::move(ground), std::move(blocks), std::move(caps));
        }
        return matroid::explicit_sets(std::move(ground), subsets("independent"));
    }
    if (kind == "graphic") {
        const Json& graph = field(j, "graph", "");
        const Graph g = parse_simple_graph(graph, "graph");
        const auto pairs = string_pairs(array_field(graph, "edges", "graph"), "graph.edges");
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& [u, v] : pairs) {
            edges.emplace_back(*g.index_of(u), *g.index_of(v));
        }
        std::vector<std::string> names;
        if (j.contains("names")) {
            names = as_strings(j["names"], "names");
        }
        return matroid::graphic(g.size(), std::move(edges), std::move(names));
    }
    if (kind == "linear") {
        const std::int64_t prime = as_integer(field(j, "prime", ""), "prime");
        if (prime < 2) {
            throw InvalidInput("field \"prime\" must be a prime");
        }
        const Json& cols = array_field(j, "columns", "");
        std::vector<std::vector<std::int64_t>> columns;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Json& col = as_array(cols[c], at("columns", c));
            columns.emplace_back();
            for (std::size_t r = 0; r < col.size(); ++r) {
                columns.back().push_back(as_integer(col[r], at(at("columns", c), r)));
            }
        }
        std::vector<std::string> names;
        if (j.contains("names")) {
            names = as_strings(j["names"], "names");
        }
        return matroid::linear(static_cast<std::uint64_t>(prime), std::move(columns), std::move(names));
    }
    throw InvalidInput("field \"kind\" must be one of free, uniform, partition, graphic, linear, explicit");
}

GroupInput parse_group(const Json& j) {
    GroupInput input;
    if (j.contains("permutations")) {
        const std::size_t degree = as_index(field(j, "degree", ""), "degree");
        const Json& list = as_array(j["permutations"], "permutations");
        std::vector<std::vector<std::size_t>> generators;
        for (std::size_t g = 0; g < list.size(); ++g) {
            const Json& perm = as_array(list[g], at("permutations", g));
            generators.emplace_back();
            for (std::size_t k = 0; k < perm.size(); ++k) {
                generators.back().push_back(as_index(perm[k], at(at("permutations", g), k)));
            }
        }
        input.group = FiniteGroup::from_permutations(generators, degree);
    } else {
        auto elements = as_strings(field(j, "elements", ""), "elements");
        positions(elements, "elements");
        const Json& rows = array_field(j, "table", "");
        std::vector<std::vector<std::size_t>> table;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Json& row = as_array(rows[r], at("table", r));
            table.emplace_back();
            for (std::size_t c = 0; c < row.size(); ++c) {
                table.back().push_back(as_index(row[c], at(at("table", r), c)));
            }
        }
        input.group = FiniteGroup(std::move(elements), std::move(table));
    }
    if (j.contains("subgroup")) {
        const auto names = as_strings(j["subgroup"], "subgroup");
        for (std::size_t k = 0; k < names.size(); ++k) {
            auto g = input.group.index_of(names[k]);
            if (!g) {
                throw InvalidInput("field \"" + at("subgroup", k) + "\" names unknown element \"" + names[k] + "\"");
            }
            input.generators.push_back(*g);
        }
    }
    return input;
}

HypergraphFamily parse_hypergraphs(const Json& j) {
    auto vertices = as_strings(field(j, "vertices", ""), "vertices");
    positions(vertices, "vertices");
    const Json& list = array_field(j, "hypergraphs", "");
    std::vector<std::vector<std::vector<std::string>>> named;
    for (std::size_t h = 0; h < list.size(); ++h) {
        const Json& edges = as_array(list[h], at("hypergraphs", h));
        named.emplace_back();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            named.back().push_back(as_strings(edges[e], at(at("hypergraphs", h), e)));
        }
    }
    return HypergraphFamily(std::move(vertices), named);
}

} // namespace transversal::io
