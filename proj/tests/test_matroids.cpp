#include "oracles.hpp"

#include "transversal/errors.hpp"

#include <doctest.h>

using namespace transversal;

namespace {

std::vector<std::string> letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(std::string(1, static_cast<char>('a' + k)));
    }
    return out;
}

MatroidOracle triangle() {
    return matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}});
}

} // namespace

TEST_CASE("matroid kinds") {
    const auto u = matroid::uniform(letters(4), 2);
    const std::vector<std::size_t> two{0, 1}, three{0, 1, 2};
    CHECK(u.independent(two));
    CHECK_FALSE(u.independent(three));

    const auto g = triangle();
    CHECK(g.ground() == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(g.independent(two));
    CHECK_FALSE(g.independent(three));

    const auto l = matroid::linear(5, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(l.independent(two));
    const std::vector<std::size_t> pair13{0, 2};
    CHECK(l.independent(pair13));
    CHECK_FALSE(l.independent(three));

    const auto p = matroid::partition(letters(4), {{0, 1}, {2, 3}}, {1, 2});
    CHECK_FALSE(p.independent(two));
    const std::vector<std::size_t> spread{0, 2, 3};
    CHECK(p.independent(spread));

    const auto f = matroid::free(letters(3));
    CHECK(f.independent(three));
}

TEST_CASE("malformed matroid parameters") {
    CHECK_THROWS_AS(matroid::linear(4, {{1}}), InvalidInput);
    CHECK_THROWS_AS(matroid::linear(5, {{1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(matroid::partition(letters(2), {{0}}, {1}), InvalidInput);
    CHECK_THROWS_AS(matroid::partition(letters(2), {{0}, {1}}, {1}), InvalidInput);
    CHECK_THROWS_AS(matroid::graphic(2, {{0, 1}, {1, 0}}), InvalidInput);
    CHECK_THROWS_AS(matroid::graphic(2, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(matroid::graphic(2, {{0, 2}}), InvalidInput);
}

TEST_CASE("rank examples") {
    const auto u = matroid::uniform(letters(4), 2);
    CHECK(rank(u, std::vector<std::size_t>{}) == 0);
    CHECK(rank(u, std::vector<std::size_t>{0, 1, 2, 3}) == 2);
    CHECK(rank(triangle(), std::vector<std::size_t>{0, 1, 2}) == 2);
    CHECK_THROWS_AS(rank(u, std::vector<std::size_t>{9}), InvalidInput);
}

TEST_CASE("rank is monotone and submodular for the built-in kinds") {
    const std::vector<MatroidOracle> kinds = {
        matroid::uniform(letters(6), 3),
        matroid::partition(letters(6), {{0, 1, 2}, {3, 4}, {5}}, {2, 1, 0}),
        matroid::graphic(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}, {1, 3}}),
        matroid::linear(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 1}, {2, 2, 2}}),
    };
    auto subset = [](std::uint32_t mask) {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < 6; ++e) {
            if (mask >> e & 1U) {
                out.push_back(e);
            }
        }
        return out;
    };
    for (const auto& m : kinds) {
        std::vector<std::size_t> r(64);
        for (std::uint32_t a = 0; a < 64; ++a) {
            r[a] = rank(m, subset(a));
            CHECK(r[a] == oracle::rank(m, subset(a)));
        }
        for (std::uint32_t a = 0; a < 64; ++a) {
            for (std::uint32_t b = 0; b < 64; ++b) {
                if ((a & b) == a) {
                    CHECK(r[a] <= r[b]);
                }
                CHECK(r[a | b] + r[a & b] <= r[a] + r[b]);
            }
        }
        CHECK(validate_matroid(m).ok);
    }
}

TEST_CASE("validate_matroid examples") {
    CHECK(validate_matroid(matroid::uniform(letters(4), 2)).ok);
    CHECK(validate_matroid(matroid::free(letters(3))).ok);
    // {}, {a}, {b}, {a,b}, {c}: exchange fails between {c} and {a,b}.
    const auto bad = matroid::explicit_sets(letters(3), {{}, {0}, {1}, {0, 1}, {2}});
    const auto check = validate_matroid(bad);
    CHECK_FALSE(check.ok);
    CHECK(check.axiom == MatroidCheck::Axiom::exchange);
    CHECK(check.a == std::vector<std::size_t>{2});
    CHECK(check.b == std::vector<std::size_t>{0, 1});
    const auto not_closed = matroid::explicit_sets(letters(2), {{}, {0, 1}});
    CHECK(validate_matroid(not_closed).axiom == MatroidCheck::Axiom::downward_closure);
    const auto empty = matroid::explicit_sets(letters(2), {});
    CHECK(validate_matroid(empty).axiom == MatroidCheck::Axiom::empty_collection);
    CHECK_THROWS_AS(validate_matroid(matroid::free(letters(11))), ResourceLimit);
}

TEST_CASE("rado examples") {
    SUBCASE("free matroid") {
        const SetFamily f({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}});
        const auto r = rado_check(f, matroid::free({"1", "2", "3"}));
        REQUIRE(std::holds_alternative<Sir>(r));
        CHECK(validate_sdr(f, std::get<Sir>(r).reps).ok);
    }
    SUBCASE("three copies of a triangle") {
        const SetFamily f({"e1", "e2", "e3"}, {{"e1", "e2", "e3"}, {"e1", "e2", "e3"}, {"e1", "e2", "e3"}});
        const auto r = rado_check(f, triangle());
        REQUIRE(std::holds_alternative<RadoViolator>(r));
        const auto& v = std::get<RadoViolator>(r);
        CHECK(v.indices == std::vector<std::size_t>{0, 1, 2});
        CHECK(v.rank == 2);
        CHECK(validate_rado_violator(f, triangle(), v));
    }
    SUBCASE("two copies of a triangle") {
        const SetFamily f({"e1", "e2", "e3"}, {{"e1", "e2", "e3"}, {"e1", "e2", "e3"}});
        const auto r = rado_check(f, triangle());
        REQUIRE(std::holds_alternative<Sir>(r));
        CHECK(validate_sir(f, triangle(), std::get<Sir>(r)));
    }
    SUBCASE("ground mismatch") {
        const SetFamily f({"zz"}, {{"zz"}});
        CHECK_THROWS_AS(rado_check(f, triangle()), InvalidInput);
    }
}

TEST_CASE("rado certificates are checked through the oracle") {
    const SetFamily f({"e1", "e2", "e3"}, {{"e1", "e2"}, {"e3"}});
    CHECK_FALSE(validate_sir(f, triangle(), Sir{{0, 0}}));
    CHECK_FALSE(validate_sir(f, triangle(), Sir{{2, 2}}));
    CHECK_FALSE(validate_rado_violator(f, triangle(), RadoViolator{{0, 1}, {0, 1, 2}, 1}));
}

TEST_CASE("exhaustive fallback agrees with matroid intersection") {
    std::mt19937 rng(37);
    std::bernoulli_distribution bit(0.4);
    const auto m = matroid::uniform(letters(5), 2);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::vector<std::string>> sets(1 + round % 4);
        for (auto& s : sets) {
            for (const auto& x : letters(5)) {
                if (bit(rng)) {
                    s.push_back(x);
                }
            }
        }
        const SetFamily f(letters(5), sets);
        const auto fast = rado_check(f, m);
        const auto slow = rado_check(f, m, RadoOptions{100});
        CHECK(fast.index() == slow.index());
        CHECK(std::holds_alternative<Sir>(fast) == oracle::has_sir(f, m));
        if (const auto* v = std::get_if<RadoViolator>(&slow)) {
            CHECK(validate_rado_violator(f, m, *v));
        }
    }
}
