#include "oracles.hpp"

#include "transversal/errors.hpp"

#include <doctest.h>

using namespace transversal;

namespace {

FiniteGroup s3() {
    return FiniteGroup::from_permutations({{2, 1, 3}, {2, 3, 1}}, 3);
}

FiniteGroup d4() {
    // Rotation and a reflection of the square with corners 1..4.
    return FiniteGroup::from_permutations({{2, 3, 4, 1}, {4, 3, 2, 1}}, 4);
}

std::size_t element(const FiniteGroup& g, const std::string& name) {
    auto k = g.index_of(name);
    REQUIRE(k);
    return *k;
}

} // namespace

TEST_CASE("group construction") {
    CHECK(s3().order() == 6);
    CHECK(d4().order() == 8);
    CHECK(s3().names()[s3().identity()] == "()");
    CHECK(FiniteGroup::cyclic(5).order() == 5);
    CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {{0, 1}, {1, 1}}), InvalidInput);
    CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {{0, 1}, {1, 2}}), InvalidInput);
    // Closed with identity and inverses but not associative.
    CHECK_THROWS_AS(FiniteGroup({"e", "a", "b"}, {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), InvalidInput);
    CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 1, 2}}, 3), InvalidInput);
}

TEST_CASE("subgroup_closure examples") {
    const FiniteGroup g = s3();
    CHECK(subgroup_closure(g, std::vector<std::size_t>{}) == std::vector<std::size_t>{g.identity()});
    const std::vector<std::size_t> swap{element(g, "(1 2)")};
    CHECK(subgroup_closure(g, swap).size() == 2);
    const std::vector<std::size_t> both{element(g, "(1 2)"), element(g, "(1 2 3)")};
    CHECK(subgroup_closure(g, both).size() == 6);
    const std::vector<std::size_t> unknown{99};
    CHECK_THROWS_AS(subgroup_closure(g, unknown), InvalidInput);
}

TEST_CASE("coset_family examples") {
    const FiniteGroup g = s3();
    SUBCASE("normal subgroup gives singletons") {
        const std::vector<std::size_t> gen{element(g, "(1 2 3)")};
        const auto h = subgroup_closure(g, gen);
        const SetFamily f = coset_family(g, h);
        CHECK(f.size() == 2);
        for (const auto& s : f.sets()) {
            CHECK(s.size() == 1);
        }
    }
    SUBCASE("non-normal subgroup of order two") {
        const std::vector<std::size_t> gen{element(g, "(1 2)")};
        const auto h = subgroup_closure(g, gen);
        const SetFamily f = coset_family(g, h);
        CHECK(f.size() == 3);
        CHECK(f.ground() == std::vector<std::string>{"1", "2", "3"});
        CHECK(std::holds_alternative<Sdr>(hall_check(f)));
    }
    SUBCASE("trivial subgroup") {
        const std::vector<std::size_t> h{g.identity()};
        const SetFamily f = coset_family(g, h);
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f.set(i) == std::vector<std::size_t>{i});
        }
    }
    SUBCASE("rejects a non-subgroup") {
        const std::vector<std::size_t> h{element(g, "(1 2)")};
        CHECK_THROWS_AS(coset_family(g, h), InvalidInput);
    }
}

TEST_CASE("simultaneous_reps examples") {
    const FiniteGroup g = s3();
    const std::vector<std::size_t> gen{element(g, "(1 2)")};
    const auto h = subgroup_closure(g, gen);
    const auto reps = simultaneous_reps(g, h);
    CHECK(reps.size() == 3);
    CHECK(validate_reps(g, h, reps));
    CHECK(oracle::has_simultaneous_reps(g, h));

    const FiniteGroup d = d4();
    const std::vector<std::size_t> reflection{element(d, "(1 4)(2 3)")};
    const auto k = subgroup_closure(d, reflection);
    CHECK(k.size() == 2);
    const auto d_reps = simultaneous_reps(d, k);
    CHECK(d_reps.size() == 4);
    CHECK(validate_reps(d, k, d_reps));
}

TEST_CASE("validate_reps rejects two picks from one coset") {
    const FiniteGroup g = s3();
    const std::vector<std::size_t> gen{element(g, "(1 2)")};
    const auto h = subgroup_closure(g, gen);
    auto reps = simultaneous_reps(g, h);
    reps[1] = g.product(reps[0], h.back() == reps[0] ? h.front() : h.back());
    CHECK_FALSE(validate_reps(g, h, reps));
    reps.pop_back();
    CHECK_FALSE(validate_reps(g, h, reps));
}

TEST_CASE("cyclic group cosets are all normal") {
    const FiniteGroup g = FiniteGroup::cyclic(12);
    for (std::size_t d : {1, 2, 3, 4, 6, 12}) {
        const std::vector<std::size_t> gen{12 / d % 12};
        const auto h = subgroup_closure(g, gen);
        CHECK(h.size() == d);
        const CosetSystem system = cosets(g, h);
        CHECK(system.left == system.right);
        CHECK(validate_reps(g, h, simultaneous_reps(g, h)));
    }
}
