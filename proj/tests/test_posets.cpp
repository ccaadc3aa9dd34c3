#include "oracles.hpp"

#include "transversal/errors.hpp"

#include <doctest.h>

using namespace transversal;

namespace {

Poset divisibility(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t a = 1; a <= n; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = a + 1; b <= n; ++b) {
            if (b % a == 0) {
                pairs.emplace_back(std::to_string(a), std::to_string(b));
            }
        }
    }
    return Poset(names, pairs);
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

} // namespace

TEST_CASE("poset construction closes transitively and rejects cycles") {
    const Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.less(0, 2));
    CHECK_FALSE(p.less(2, 0));
    CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
    CHECK_THROWS_AS(Poset({"a"}, {{"a", "a"}}), InvalidInput);
    CHECK_THROWS_AS(Poset({"a"}, {{"a", "z"}}), InvalidInput);
}

TEST_CASE("dilworth examples") {
    SUBCASE("antichain") {
        const auto r = dilworth(Poset::indexed(3, {}));
        CHECK(r.partition.chains.size() == 3);
        CHECK(r.antichain.size() == 3);
    }
    SUBCASE("total order") {
        const Poset p = Poset::indexed(3, {{0, 1}, {1, 2}});
        const auto r = dilworth(p);
        CHECK(r.partition.chains.size() == 1);
        CHECK(r.partition.chains[0] == std::vector<std::size_t>{0, 1, 2});
        CHECK(r.antichain.size() == 1);
    }
    SUBCASE("divisibility on 1..6") {
        const Poset p = divisibility(6);
        const auto r = dilworth(p);
        CHECK(r.partition.chains.size() == 3);
        CHECK(oracle::max_antichain(p) == 3);
        CHECK(is_chain_partition(p, r.partition));
        CHECK(is_antichain(p, r.antichain));
        CHECK(r.antichain.size() == 3);
    }
}

TEST_CASE("mirsky examples") {
    const auto chain = mirsky(Poset::indexed(3, {{0, 1}, {1, 2}}));
    CHECK(chain.partition.antichains.size() == 3);
    CHECK(mirsky(Poset::indexed(4, {})).partition.antichains.size() == 1);
    const Poset p = divisibility(6);
    const auto r = mirsky(p);
    CHECK(r.partition.antichains.size() == 3);
    CHECK(oracle::longest_chain(p) == 3);
    CHECK(is_chain(p, r.chain));
    CHECK(r.chain.size() == 3);
    CHECK(is_antichain_partition(p, r.partition));
}

TEST_CASE("partition validators") {
    const Poset p = Poset::indexed(3, {{0, 1}});
    CHECK_FALSE(is_chain_partition(p, ChainPartition{{{0, 2}, {1}}}));
    CHECK_FALSE(is_chain_partition(p, ChainPartition{{{0, 1}}}));
    CHECK_FALSE(is_chain_partition(p, ChainPartition{{{0, 1}, {2}, {2}}}));
    CHECK(is_chain_partition(p, ChainPartition{{{0, 1}, {2}}}));
    CHECK_FALSE(is_antichain_partition(p, AntichainPartition{{{0, 1, 2}}}));
    CHECK(is_antichain_partition(p, AntichainPartition{{{0, 2}, {1}}}));
}

TEST_CASE("dilworth and mirsky agree with brute force on all labelled posets of four elements") {
    for (const Poset& p : oracle::all_posets(4)) {
        const auto d = dilworth(p);
        CHECK(d.partition.chains.size() == oracle::max_antichain(p));
        CHECK(is_chain_partition(p, d.partition));
        CHECK(is_antichain(p, d.antichain));
        const auto m = mirsky(p);
        CHECK(m.partition.antichains.size() == oracle::longest_chain(p));
        CHECK(is_antichain_partition(p, m.partition));
        CHECK(is_chain(p, m.chain));
    }
}

TEST_CASE("hall_from_dilworth examples") {
    const SetFamily tri({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}});
    const auto r = hall_from_dilworth(tri);
    REQUIRE(std::holds_alternative<Sdr>(r));
    CHECK(validate_sdr(tri, std::get<Sdr>(r).reps).ok);

    const SetFamily two({"1", "2"}, {{"1"}, {"2"}});
    const auto s = hall_from_dilworth(two);
    REQUIRE(std::holds_alternative<Sdr>(s));
    CHECK(std::get<Sdr>(s).reps == std::vector<std::size_t>{0, 1});

    CHECK(std::holds_alternative<HallViolator>(hall_from_dilworth(SetFamily({"1"}, {{"1"}, {"1"}}))));

    const SetFamily empty_set({"1"}, {{"1"}, {}});
    const auto e = hall_from_dilworth(empty_set);
    REQUIRE(std::holds_alternative<HallViolator>(e));
    CHECK(validate_violator(empty_set, std::get<HallViolator>(e)));
}

TEST_CASE("hall_from_dilworth agrees with hall_check on families with nonempty sets") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (3 * n)); ++code) {
            const SetFamily f = oracle::family_from_code(n, 3, code);
            const auto direct = hall_check(f);
            const auto via = hall_from_dilworth(f);
            REQUIRE(direct.index() == via.index());
            if (const auto* sdr = std::get_if<Sdr>(&via)) {
                CHECK(validate_sdr(f, sdr->reps).ok);
            } else {
                CHECK(validate_violator(f, std::get<HallViolator>(via)));
            }
        }
    }
}

TEST_CASE("comparability graphs") {
    CHECK(comparability_graph(Poset::indexed(3, {{0, 1}, {1, 2}})).edge_count() == 3);
    const Poset anti = Poset::indexed(3, {});
    CHECK(comparability_graph(anti).edge_count() == 0);
    CHECK(comparability_graph(anti, true).edge_count() == 3);
    const Graph g = comparability_graph(divisibility(6));
    CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 5}});
}

TEST_CASE("perfection examples") {
    const auto c5 = is_perfect(cycle(5));
    CHECK_FALSE(c5.perfect);
    CHECK(c5.witness.size() == 5);
    CHECK(c5.clique_number == 2);
    CHECK(c5.chromatic_number == 3);
    CHECK(is_perfect(cycle(4)).perfect);
    CHECK_FALSE(berge_check(cycle(5)).berge);
    const auto anti = berge_check(cycle(7).complement());
    CHECK_FALSE(anti.berge);
    CHECK(anti.antihole);
    CHECK_FALSE(is_perfect(cycle(7).complement()).perfect);
    CHECK_THROWS_AS(is_perfect(Graph(11)), ResourceLimit);
    CHECK_THROWS_AS(berge_check(Graph(11)), ResourceLimit);
}

TEST_CASE("random bipartite graphs on eight vertices are Berge and perfect") {
    std::mt19937 rng(17);
    std::bernoulli_distribution edge(0.5);
    for (int round = 0; round < 100; ++round) {
        Graph g(8);
        for (std::size_t u = 0; u < 4; ++u) {
            for (std::size_t v = 4; v < 8; ++v) {
                if (edge(rng)) {
                    g.add_edge(u, v);
                }
            }
        }
        CHECK(berge_check(g).berge);
        CHECK(is_perfect(g).perfect);
    }
}

TEST_CASE("clique and chromatic numbers agree with brute force") {
    std::mt19937 rng(23);
    std::bernoulli_distribution edge(0.5);
    for (int round = 0; round < 100; ++round) {
        Graph g(6);
        for (std::size_t u = 0; u < 6; ++u) {
            for (std::size_t v = u + 1; v < 6; ++v) {
                if (edge(rng)) {
                    g.add_edge(u, v);
                }
            }
        }
        const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
        CHECK(clique_number(g, all) == oracle::clique_number(g));
        CHECK(chromatic_number(g, all) == oracle::chromatic_number(g));
    }
}
