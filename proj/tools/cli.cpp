#include "cli.hpp"

#include "transversal/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace transversal::cli {

namespace {

using io::Json;

struct Context {
    std::vector<std::string> files;
    std::optional<std::size_t> ceiling;
    std::optional<Json> certificate;

    std::size_t ceiling_or(std::size_t fallback) const { return ceiling.value_or(fallback); }
};

Outcome envelope(const char* status, int code, Json payload, std::string diagnostics) {
    Outcome out;
    out.envelope = {{"status", status}, {"payload", std::move(payload)}, {"diagnostics", std::move(diagnostics)}};
    out.exit_code = code;
    return out;
}

Outcome success(Json payload, std::string diagnostics = "") {
    return envelope("found", found, std::move(payload), std::move(diagnostics));
}

Outcome failure(Json payload, std::string diagnostics) {
    return envelope("not-found", not_found, std::move(payload), std::move(diagnostics));
}

Outcome verdict(bool valid, const std::string& what) {
    const std::string reason = valid ? what + " is valid" : what + " does not validate";
    Json payload = {{"valid", valid}, {"reason", reason}};
    return valid ? success(std::move(payload), reason) : failure(std::move(payload), reason);
}

// Certificates may be given as a bare payload or as a whole envelope.
const Json& payload_of(const Json& certificate) {
    if (certificate.is_object() && certificate.contains("status") && certificate.contains("payload")) {
        return certificate["payload"];
    }
    return certificate;
}

Json names(const std::vector<std::string>& universe, const std::vector<std::size_t>& positions) {
    Json out = Json::array();
    for (std::size_t p : positions) {
        out.push_back(universe[p]);
    }
    return out;
}

Json nested_names(const std::vector<std::string>& universe, const std::vector<std::vector<std::size_t>>& lists) {
    Json out = Json::array();
    for (const auto& list : lists) {
        out.push_back(names(universe, list));
    }
    return out;
}

std::size_t position(const std::vector<std::string>& universe, const Json& value, const std::string& where) {
    const std::string name = io::as_string(value, where);
    auto it = std::find(universe.begin(), universe.end(), name);
    if (it == universe.end()) {
        throw InvalidInput("certificate field \"" + where + "\" names unknown element \"" + name + "\"");
    }
    return static_cast<std::size_t>(it - universe.begin());
}

std::vector<std::size_t> positions(const std::vector<std::string>& universe, const Json& list,
                                   const std::string& where) {
    if (!list.is_array()) {
        throw InvalidInput("certificate field \"" + where + "\" must be an array");
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        out.push_back(position(universe, list[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

std::vector<std::vector<std::size_t>> nested_positions(const std::vector<std::string>& universe, const Json& list,
                                                       const std::string& where) {
    if (!list.is_array()) {
        throw InvalidInput("certificate field \"" + where + "\" must be an array");
    }
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        out.push_back(positions(universe, list[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

std::vector<std::size_t> indices(const Json& list, const std::string& where) {
    if (!list.is_array()) {
        throw InvalidInput("certificate field \"" + where + "\" must be an array");
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
        out.push_back(io::as_index(list[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

// Checks a certificate; malformed certificate content counts as a failed check.
Outcome check(const std::string& what, const std::function<bool()>& validator) {
    try {
        return verdict(validator(), what);
    } catch (const InvalidInput& e) {
        Json payload = {{"valid", false}, {"reason", e.what()}};
        return failure(std::move(payload), what + " is malformed: " + e.what());
    }
}

Json load(const Context& ctx, std::size_t k) {
    return io::read_json(ctx.files.at(k));
}

// --- core -------------------------------------------------------------------

Json violator_json(const SetFamily& family, const HallViolator& v) {
    return {{"indices", v.indices}, {"union", names(family.ground(), v.union_elements)}};
}

Outcome cmd_sdr(const Context& ctx) {
    const SetFamily family = io::parse_family(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        if (cert.contains("sdr")) {
            return check("SDR", [&] {
                const auto reps = positions(family.ground(), cert["sdr"], "sdr");
                return validate_sdr(family, reps).ok;
            });
        }
        return check("Hall violator", [&] {
            const Json& v = io::field(cert, "violator", "");
            HallViolator violator{indices(io::field(v, "indices", "violator"), "violator.indices"),
                                  positions(family.ground(), io::field(v, "union", "violator"), "violator.union")};
            std::sort(violator.union_elements.begin(), violator.union_elements.end());
            return validate_violator(family, violator);
        });
    }
    const HallResult result = hall_check(family);
    if (const auto* sdr = std::get_if<Sdr>(&result)) {
        return success({{"sdr", names(family.ground(), sdr->reps)}},
                       "SDR found for " + std::to_string(family.size()) + " sets");
    }
    const auto& v = std::get<HallViolator>(result);
    return failure({{"violator", violator_json(family, v)}},
                   "Hall's condition fails: " + std::to_string(v.indices.size()) + " sets cover only " +
                       std::to_string(v.union_elements.size()) +
                       (v.union_elements.size() == 1 ? " element" : " elements"));
}

Outcome cmd_defect(const Context& ctx) {
    const SetFamily family = io::parse_family(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("defect report", [&] {
            DefectReport report;
            report.defect = io::as_index(io::field(cert, "defect", ""), "defect");
            const Json& partial = io::field(cert, "partial", "");
            if (!partial.is_array()) {
                throw InvalidInput("certificate field \"partial\" must be an array");
            }
            for (std::size_t k = 0; k < partial.size(); ++k) {
                const std::string where = "partial[" + std::to_string(k) + "]";
                report.partial.emplace_back(io::as_index(io::field(partial[k], "set", where), where + ".set"),
                                            position(family.ground(), io::field(partial[k], "element", where),
                                                     where + ".element"));
            }
            report.witness = indices(io::field(cert, "witness", ""), "witness");
            return validate_defect_report(family, report);
        });
    }
    const DefectReport report = partial_sdr(family);
    Json partial = Json::array();
    for (const auto& [set, element] : report.partial) {
        partial.push_back({{"set", set}, {"element", family.ground()[element]}});
    }
    return success({{"defect", report.defect}, {"partial", std::move(partial)}, {"witness", report.witness}},
                   "defect " + std::to_string(report.defect) + ", partial SDR of size " +
                       std::to_string(report.partial.size()));
}

Outcome cmd_count_sdr(const Context& ctx) {
    const SetFamily family = io::parse_family(load(ctx, 0));
    const BigInt count = count_sdrs(family, ctx.ceiling_or(kDefaultCountCeiling));
    return success(to_string(count), to_string(count) + " SDRs");
}

Outcome cmd_array_sdr(const Context& ctx) {
    const ArrayFamily arr = io::parse_array(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("array of representatives", [&] {
            return validate_array_sdr(arr, nested_positions(arr.ground(), io::field(cert, "grid", ""), "grid"));
        });
    }
    const auto grid = array_sdr(arr, ctx.ceiling_or(kDefaultArrayCeiling));
    if (!grid) {
        return failure(Json::object(), "no array of distinct representatives exists (exhaustive search)");
    }
    return success({{"grid", nested_names(arr.ground(), *grid)}}, "array of distinct representatives found");
}

// --- graphs -----------------------------------------------------------------

Json matching_json(const BipartiteGraph& g, const Matching& m) {
    Json edges = Json::array();
    for (const auto& [a, b] : m.edges) {
        edges.push_back({g.part_a()[a], g.part_b()[b]});
    }
    return edges;
}

Matching matching_from(const BipartiteGraph& g, const Json& list) {
    Matching m;
    if (!list.is_array()) {
        throw InvalidInput("certificate field \"matching\" must be an array");
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = "matching[" + std::to_string(k) + "]";
        if (!list[k].is_array() || list[k].size() != 2) {
            throw InvalidInput("certificate field \"" + where + "\" must be a pair");
        }
        m.edges.emplace_back(position(g.part_a(), list[k][0], where + "[0]"),
                             position(g.part_b(), list[k][1], where + "[1]"));
    }
    return m;
}

Outcome cmd_matching(const Context& ctx) {
    const BipartiteGraph g = io::parse_bipartite(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("matching", [&] { return is_matching(g, matching_from(g, io::field(cert, "matching", ""))); });
    }
    const Matching m = max_matching(g);
    return success({{"matching", matching_json(g, m)}, {"size", m.size()}},
                   "maximum matching of size " + std::to_string(m.size()));
}

Outcome cmd_cover(const Context& ctx) {
    const BipartiteGraph g = io::parse_bipartite(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("matching and vertex cover", [&] {
            const Matching m = matching_from(g, io::field(cert, "matching", ""));
            const Json& c = io::field(cert, "cover", "");
            const VertexCover cover{positions(g.part_a(), io::field(c, "partA", "cover"), "cover.partA"),
                                    positions(g.part_b(), io::field(c, "partB", "cover"), "cover.partB")};
            return is_matching(g, m) && is_vertex_cover(g, cover) && cover.size() == m.size();
        });
    }
    const KonigResult r = konig_cover(g);
    return success({{"matching", matching_json(g, r.matching)},
                    {"cover", {{"partA", names(g.part_a(), r.cover.a_side)}, {"partB", names(g.part_b(), r.cover.b_side)}}},
                    {"size", r.cover.size()}},
                   "matching and vertex cover of size " + std::to_string(r.cover.size()));
}

Outcome cmd_menger(const Context& ctx) {
    const io::GraphInput input = io::parse_graph(load(ctx, 0));
    if (!input.source || !input.sink) {
        throw InvalidInput(input.source ? "missing field \"sink\"" : "missing field \"source\"");
    }
    const Graph& g = input.graph;
    const bool edge_mode = input.mode == DisjointMode::edge;
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("path system and cut", [&] {
            MengerResult r;
            r.paths = nested_positions(g.names(), io::field(cert, "paths", ""), "paths");
            const Json& cut = io::field(cert, "cut", "");
            if (edge_mode) {
                for (const auto& pair : nested_positions(g.names(), cut, "cut")) {
                    if (pair.size() != 2) {
                        throw InvalidInput("certificate field \"cut\" must hold vertex pairs");
                    }
                    r.edge_cut.emplace_back(std::min(pair[0], pair[1]), std::max(pair[0], pair[1]));
                }
            } else {
                r.vertex_cut = positions(g.names(), cut, "cut");
            }
            return validate_menger(g, *input.source, *input.sink, input.mode, r);
        });
    }
    const MengerResult r = menger_paths(g, *input.source, *input.sink, input.mode);
    Json cut = Json::array();
    if (edge_mode) {
        for (const auto& [u, v] : r.edge_cut) {
            cut.push_back({g.names()[u], g.names()[v]});
        }
    } else {
        cut = names(g.names(), r.vertex_cut);
    }
    return success({{"mode", edge_mode ? "edge" : "vertex"},
                    {"paths", nested_names(g.names(), r.paths)},
                    {"cut", std::move(cut)},
                    {"size", r.paths.size()}},
                   std::to_string(r.paths.size()) + " disjoint paths and a cut of the same size");
}

Outcome cmd_maxflow(const Context& ctx) {
    const FlowNetwork net = io::parse_network(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("flow and cut", [&] {
            FlowResult r;
            r.value = io::as_integer(io::field(cert, "value", ""), "value");
            const Json& flow = io::field(cert, "flow", "");
            if (!flow.is_array()) {
                throw InvalidInput("certificate field \"flow\" must be an array");
            }
            for (std::size_t k = 0; k < flow.size(); ++k) {
                r.flow.push_back(io::as_integer(flow[k], "flow[" + std::to_string(k) + "]"));
            }
            r.cut_arcs = indices(io::field(cert, "cut", ""), "cut");
            r.source_side.assign(net.size(), false);
            for (std::size_t v : positions(net.names(), io::field(cert, "source_side", ""), "source_side")) {
                r.source_side[v] = true;
            }
            return validate_flow(net, r);
        });
    }
    const FlowResult r = max_flow_min_cut(net);
    std::vector<std::size_t> side;
    for (std::size_t v = 0; v < net.size(); ++v) {
        if (r.source_side[v]) {
            side.push_back(v);
        }
    }
    return success({{"value", r.value}, {"flow", r.flow}, {"cut", r.cut_arcs}, {"source_side", names(net.names(), side)}},
                   "maximum flow " + std::to_string(r.value) + " equals the cut capacity");
}

// --- posets -----------------------------------------------------------------

Outcome cmd_dilworth(const Context& ctx) {
    const Poset p = io::parse_poset(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("chain partition and antichain", [&] {
            const ChainPartition chains{nested_positions(p.names(), io::field(cert, "chains", ""), "chains")};
            const auto antichain = positions(p.names(), io::field(cert, "antichain", ""), "antichain");
            return is_chain_partition(p, chains) && is_antichain(p, antichain) &&
                   chains.chains.size() == antichain.size();
        });
    }
    const DilworthResult r = dilworth(p);
    return success({{"chains", nested_names(p.names(), r.partition.chains)},
                    {"antichain", names(p.names(), r.antichain)},
                    {"width", r.antichain.size()}},
                   "width " + std::to_string(r.antichain.size()));
}

Outcome cmd_mirsky(const Context& ctx) {
    const Poset p = io::parse_poset(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("antichain partition and chain", [&] {
            const AntichainPartition levels{
                nested_positions(p.names(), io::field(cert, "antichains", ""), "antichains")};
            const auto chain = positions(p.names(), io::field(cert, "chain", ""), "chain");
            return is_antichain_partition(p, levels) && is_chain(p, chain) &&
                   levels.antichains.size() == chain.size();
        });
    }
    const MirskyResult r = mirsky(p);
    return success({{"antichains", nested_names(p.names(), r.partition.antichains)},
                    {"chain", names(p.names(), r.chain)},
                    {"height", r.chain.size()}},
                   "height " + std::to_string(r.chain.size()));
}

Outcome cmd_perfect(const Context& ctx) {
    const Json j = load(ctx, 0);
    Graph g;
    if (j.is_object() && j.contains("elements")) {
        const bool complement = j.contains("complement") && j["complement"].is_boolean() && j["complement"].get<bool>();
        g = comparability_graph(io::parse_poset(j), complement);
    } else {
        g = io::parse_graph(j).graph;
    }
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        const Json& perfect = io::field(cert, "perfect", "");
        if (!perfect.is_boolean() || perfect.get<bool>()) {
            throw InvalidInput("only an imperfection witness can be verified");
        }
        return check("imperfection witness", [&] {
            auto witness = positions(g.names(), io::field(cert, "witness", ""), "witness");
            std::sort(witness.begin(), witness.end());
            if (std::adjacent_find(witness.begin(), witness.end()) != witness.end()) {
                return false;
            }
            return clique_number(g, witness) != chromatic_number(g, witness);
        });
    }
    const std::size_t ceiling = ctx.ceiling_or(kPerfectCeiling);
    const PerfectResult r = is_perfect(g, ceiling);
    const BergeResult b = berge_check(g, ceiling);
    Json payload = {{"perfect", r.perfect}, {"berge", b.berge}};
    if (!r.perfect) {
        payload["witness"] = names(g.names(), r.witness);
        payload["clique_number"] = r.clique_number;
        payload["chromatic_number"] = r.chromatic_number;
    }
    if (!b.berge) {
        payload[b.antihole ? "odd_antihole" : "odd_hole"] = names(g.names(), b.witness);
    }
    if (r.perfect) {
        return success(std::move(payload), "perfect");
    }
    return failure(std::move(payload), "not perfect: induced subgraph with clique number " +
                                           std::to_string(r.clique_number) + " and chromatic number " +
                                           std::to_string(r.chromatic_number));
}

// --- birkhoff ---------------------------------------------------------------

Outcome cmd_birkhoff(const Context& ctx) {
    const RationalMatrix m = io::parse_matrix(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("Birkhoff decomposition", [&] {
            BirkhoffDecomposition d;
            const Json& terms = io::field(cert, "terms", "");
            if (!terms.is_array()) {
                throw InvalidInput("certificate field \"terms\" must be an array");
            }
            for (std::size_t k = 0; k < terms.size(); ++k) {
                const std::string where = "terms[" + std::to_string(k) + "]";
                d.terms.push_back({parse_rational(io::as_string(io::field(terms[k], "coefficient", where),
                                                                where + ".coefficient")),
                                   indices(io::field(terms[k], "permutation", where), where + ".permutation")});
            }
            return validate_decomposition(m, d);
        });
    }
    const BirkhoffDecomposition d = birkhoff_decompose(m);
    Json terms = Json::array();
    for (const auto& term : d.terms) {
        terms.push_back({{"coefficient", to_string(term.coefficient)}, {"permutation", term.permutation}});
    }
    return success({{"terms", std::move(terms)}}, std::to_string(d.terms.size()) + " permutation matrices");
}

Outcome cmd_permanent(const Context& ctx) {
    const RationalMatrix m = io::parse_matrix(load(ctx, 0));
    const std::string value = to_string(permanent(m, ctx.ceiling_or(kPermanentCeiling)));
    return success(value, "permanent " + value);
}

Outcome cmd_bounds(const Context& ctx) {
    const Json j = load(ctx, 0);
    const std::size_t n = io::as_index(io::field(j, "n", ""), "n");
    if (n < 1 || n > 1000) {
        throw InvalidInput("field \"n\" must lie in 1..1000");
    }
    const auto order = static_cast<unsigned>(n);
    Json payload = {{"n", n}, {"van_der_waerden", to_string(vdw_bound(order))},
                    {"latin_squares", to_string(latin_lower_bound(order))}};
    if (j.contains("r")) {
        const std::size_t r = io::as_index(j["r"], "r");
        if (r < 1 || r > n) {
            throw InvalidInput("field \"r\" must lie in 1..n");
        }
        payload["r"] = r;
        payload["regular_matchings"] = to_string(regular_matching_bound(order, static_cast<unsigned>(r)));
    }
    return success(std::move(payload));
}

// --- latin ------------------------------------------------------------------

Outcome check_rows(const io::RectangleInput& input, const Json& cert, bool square) {
    return check(square ? "Latin square" : "extended rectangle", [&] {
        Json j = cert;
        if (!input.symbols.empty() && !j.contains("symbols")) {
            j["symbols"] = input.symbols;
        }
        const LatinRectangle out = io::parse_rectangle(j).rectangle;
        const auto& before = input.rectangle.cells();
        const auto& after = out.cells();
        const bool size_ok = square ? out.is_square() : after.size() == before.size() + 1;
        return out.order() == input.rectangle.order() && size_ok && after.size() >= before.size() &&
               std::equal(before.begin(), before.end(), after.begin());
    });
}

Outcome cmd_latin_extend(const Context& ctx) {
    const io::RectangleInput input = io::parse_rectangle(load(ctx, 0));
    if (ctx.certificate) {
        return check_rows(input, payload_of(*ctx.certificate), false);
    }
    const LatinRectangle out = extend_row(input.rectangle);
    return success(io::rectangle_to_json(out, input.symbols),
                   "extended to " + std::to_string(out.rows()) + " rows");
}

Outcome cmd_latin_complete(const Context& ctx) {
    const io::RectangleInput input = io::parse_rectangle(load(ctx, 0));
    if (ctx.certificate) {
        return check_rows(input, payload_of(*ctx.certificate), true);
    }
    return success(io::rectangle_to_json(complete(input.rectangle), input.symbols), "completed to a Latin square");
}

Outcome cmd_latin_count(const Context& ctx) {
    const Json j = load(ctx, 0);
    if (j.is_object() && j.contains("rows")) {
        const io::RectangleInput input = io::parse_rectangle(j);
        const BigInt count = count_extensions(input.rectangle, ctx.ceiling_or(kExtensionCeiling));
        return success(to_string(count), to_string(count) + " valid next rows");
    }
    const std::size_t n = io::as_index(io::field(j, "n", ""), "n");
    const BigInt count = count_latin_squares(n, ctx.ceiling_or(kLatinCountCeiling));
    return success(to_string(count), to_string(count) + " Latin squares of order " + std::to_string(n));
}

Outcome cmd_youden(const Context& ctx) {
    const BlockDesign design = io::parse_design(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("Youden array", [&] {
            return validate_youden(design, nested_positions(design.points(), io::field(cert, "rows", ""), "rows"));
        });
    }
    const auto rows = youden_from_design(design);
    return success({{"rows", nested_names(design.points(), rows)}},
                   std::to_string(rows.size()) + " x " + std::to_string(design.block_count()) + " array");
}

// --- matroids ---------------------------------------------------------------

Outcome cmd_rado(const Context& ctx) {
    const MatroidOracle m = io::parse_matroid(load(ctx, 0));
    const SetFamily family = io::parse_family(load(ctx, 1));
    if (m.kind() == "explicit") {
        const MatroidCheck axioms = validate_matroid(m);
        if (!axioms.ok) {
            throw InvalidInput("the explicit independent sets do not form a matroid");
        }
    }
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        if (cert.contains("sir")) {
            return check("system of independent representatives", [&] {
                return validate_sir(family, m, Sir{positions(family.ground(), cert["sir"], "sir")});
            });
        }
        return check("Rado violator", [&] {
            const Json& v = io::field(cert, "violator", "");
            RadoViolator violator{indices(io::field(v, "indices", "violator"), "violator.indices"),
                                  positions(family.ground(), io::field(v, "union", "violator"), "violator.union"),
                                  io::as_index(io::field(v, "rank", "violator"), "violator.rank")};
            std::sort(violator.union_elements.begin(), violator.union_elements.end());
            return validate_rado_violator(family, m, violator);
        });
    }
    const RadoResult result = rado_check(family, m);
    if (const auto* sir = std::get_if<Sir>(&result)) {
        return success({{"sir", names(family.ground(), sir->reps)}}, "independent transversal found");
    }
    const auto& v = std::get<RadoViolator>(result);
    return failure({{"violator", {{"indices", v.indices},
                                  {"union", names(family.ground(), v.union_elements)},
                                  {"rank", v.rank}}}},
                   "Rado's condition fails: " + std::to_string(v.indices.size()) + " sets whose union has rank " +
                       std::to_string(v.rank));
}

// --- groups -----------------------------------------------------------------

Outcome cmd_cosets(const Context& ctx) {
    const io::GroupInput input = io::parse_group(load(ctx, 0));
    const FiniteGroup& g = input.group;
    const auto h = subgroup_closure(g, input.generators);
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("coset representatives", [&] {
            auto claimed = positions(g.names(), io::field(cert, "subgroup", ""), "subgroup");
            std::sort(claimed.begin(), claimed.end());
            const auto reps = positions(g.names(), io::field(cert, "reps", ""), "reps");
            return claimed == h && validate_reps(g, h, reps);
        });
    }
    const CosetSystem system = cosets(g, h);
    const auto reps = simultaneous_reps(g, h);
    return success({{"subgroup", names(g.names(), h)},
                    {"left", nested_names(g.names(), system.left)},
                    {"right", nested_names(g.names(), system.right)},
                    {"family", io::family_to_json(coset_family(g, h))},
                    {"reps", names(g.names(), reps)}},
                   std::to_string(system.index()) + " simultaneous left and right coset representatives");
}

// --- hypergraphs ------------------------------------------------------------

Outcome cmd_hyper_sdr(const Context& ctx) {
    const HypergraphFamily family = io::parse_hypergraphs(load(ctx, 0));
    if (ctx.certificate) {
        const Json& cert = payload_of(*ctx.certificate);
        return check("hypergraph SDR", [&] {
            return validate_hyper_sdr(family, HyperSdr{indices(io::field(cert, "selection", ""), "selection")});
        });
    }
    const std::size_t edge_ceiling = ctx.ceiling_or(kHyperEdgeCeiling);
    const AhResult ah = ah_condition(family, kHyperFamilyCeiling, edge_ceiling);
    const auto sdr = find_hyper_sdr(family, kHyperFamilyCeiling, edge_ceiling);
    Json payload = {{"ah_condition", ah.holds}};
    if (!ah.holds) {
        payload["witness"] = ah.witness;
    }
    if (!sdr) {
        return failure(std::move(payload), "no hypergraph SDR exists");
    }
    Json edges = Json::array();
    for (std::size_t h = 0; h < family.size(); ++h) {
        edges.push_back(names(family.vertices(), family.hypergraphs()[h][sdr->selection[h]]));
    }
    payload["selection"] = sdr->selection;
    payload["edges"] = std::move(edges);
    return success(std::move(payload), "hypergraph SDR found");
}

struct Command {
    const char* name;
    const char* help;
    int files;
    bool verifiable;
    Outcome (*handler)(const Context&);
};

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {"sdr", "SDR or Hall violator of a set family", 1, true, cmd_sdr},
        {"defect", "largest partial SDR and the defect", 1, true, cmd_defect},
        {"count-sdr", "exact number of SDRs", 1, false, cmd_count_sdr},
        {"array-sdr", "two-dimensional array of distinct representatives", 1, true, cmd_array_sdr},
        {"matching", "maximum matching of a bipartite graph", 1, true, cmd_matching},
        {"cover", "maximum matching with a vertex cover of equal size", 1, true, cmd_cover},
        {"menger", "disjoint s-t paths and a cut of equal size", 1, true, cmd_menger},
        {"maxflow", "maximum flow and minimum cut", 1, true, cmd_maxflow},
        {"dilworth", "minimum chain partition and maximum antichain", 1, true, cmd_dilworth},
        {"mirsky", "minimum antichain partition and longest chain", 1, true, cmd_mirsky},
        {"perfect", "perfection check of a graph or comparability graph", 1, true, cmd_perfect},
        {"birkhoff", "decomposition into permutation matrices", 1, true, cmd_birkhoff},
        {"permanent", "exact permanent", 1, false, cmd_permanent},
        {"bounds", "van der Waerden, regular-family and Latin square bounds", 1, false, cmd_bounds},
        {"latin-extend", "add one row to a Latin rectangle", 1, true, cmd_latin_extend},
        {"latin-complete", "complete a Latin rectangle to a square", 1, true, cmd_latin_complete},
        {"latin-count", "count next rows of a rectangle, or Latin squares of order n", 1, false, cmd_latin_count},
        {"youden", "Youden array from a block design", 1, true, cmd_youden},
        {"rado", "independent transversal or Rado violator (matroid file, family file)", 2, true, cmd_rado},
        {"cosets", "simultaneous left and right coset representatives", 1, true, cmd_cosets},
        {"hyper-sdr", "hypergraph SDR and the sufficient condition", 1, true, cmd_hyper_sdr},
    };
    return table;
}

} // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Transversal toolkit: systems of distinct representatives and their relatives", "transversal"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::size_t> ceiling;
    std::string verify;
    std::string format = "json";
    app.add_option("--ceiling", ceiling, "override the desk-scale size limit of exponential operations");
    app.add_option("--verify", verify, "check a certificate file against the input instead of solving");
    app.add_option("--format", format, "output format (json only)")->check(CLI::IsMember({"json"}));

    std::vector<std::string> files;
    std::map<CLI::App*, const Command*> by_app;
    for (const auto& command : commands()) {
        CLI::App* sub = app.add_subcommand(command.name, command.help);
        sub->add_option("inputs", files, "input JSON file(s)")->required()->expected(command.files);
        by_app[sub] = &command;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return Outcome{nullptr, found, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return Outcome{nullptr, found, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return envelope("invalid-input", invalid_input, Json::object(), e.what());
    }

    const Command* command = nullptr;
    for (const auto& [sub, cmd] : by_app) {
        if (sub->parsed()) {
            command = cmd;
        }
    }
    try {
        Context ctx;
        ctx.files = files;
        ctx.ceiling = ceiling;
        if (!verify.empty()) {
            if (!command->verifiable) {
                throw InvalidInput(std::string("\"") + command->name + "\" emits no certificate to verify");
            }
            ctx.certificate = io::read_json(verify);
        }
        return command->handler(ctx);
    } catch (const ResourceLimit& e) {
        return envelope("resource-limit", resource_limit, Json::object(), e.what());
    } catch (const InvalidInput& e) {
        return envelope("invalid-input", invalid_input, Json::object(), e.what());
    } catch (const Json::exception& e) {
        return envelope("invalid-input", invalid_input, Json::object(), e.what());
    } catch (const std::exception& e) {
        return envelope("invalid-input", invalid_input, Json::object(), e.what());
    }
}

} // namespace transversal::cli
