#include "oracles.hpp"

#include "transversal/errors.hpp"

#include <doctest.h>

using namespace transversal;

namespace {

BlockDesign fano() {
    return BlockDesign::indexed(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

} // namespace

TEST_CASE("rectangle validation") {
    CHECK_THROWS_AS(LatinRectangle(3, {{1, 2, 2}}), InvalidInput);
    CHECK_THROWS_AS(LatinRectangle(3, {{1, 2, 3}, {1, 3, 2}}), InvalidInput);
    CHECK_THROWS_AS(LatinRectangle(3, {{1, 2, 4}}), InvalidInput);
    CHECK_THROWS_AS(LatinRectangle(2, {{1, 2}, {2, 1}, {1, 2}}), InvalidInput);
    CHECK(latin_violation(2, {{1, 2}, {2, 1}}).empty());
}

TEST_CASE("extend_row examples") {
    SUBCASE("forced row") {
        const auto r = extend_row(LatinRectangle(3, {{1, 2, 3}, {2, 3, 1}}));
        CHECK(r.cells().back() == std::vector<int>{3, 1, 2});
    }
    SUBCASE("one row") {
        const LatinRectangle rect(3, {{1, 2, 3}});
        const auto r = extend_row(rect);
        CHECK(r.rows() == 2);
        CHECK(latin_violation(3, r.cells()).empty());
        CHECK(oracle::count_next_rows(rect.cells(), 3) == 2);
        CHECK(r.cells().back() == std::vector<int>{2, 3, 1});
    }
    SUBCASE("empty rectangle") {
        CHECK(extend_row(LatinRectangle(4, {})).cells()[0] == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("already a square") {
        CHECK_THROWS_AS(extend_row(LatinRectangle(2, {{1, 2}, {2, 1}})), AlreadyComplete);
    }
}

TEST_CASE("complete examples") {
    const std::vector<std::vector<int>> expected{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    CHECK(complete(LatinRectangle(3, {{1, 2, 3}, {2, 3, 1}})).cells() == expected);
    CHECK(complete(LatinRectangle(3, {})).cells() == expected);
    const auto square = complete(LatinRectangle(2, {{2, 1}, {1, 2}}));
    CHECK(square.is_square());
}

TEST_CASE("every three by four rectangle completes") {
    // All 3 x 4 rectangles, built from permutations row by row.
    std::vector<std::vector<int>> perms;
    std::vector<int> perm{1, 2, 3, 4};
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t completed = 0;
    for (const auto& a : perms) {
        for (const auto& b : perms) {
            for (const auto& c : perms) {
                if (!latin_violation(4, {a, b, c}).empty()) {
                    continue;
                }
                const auto square = complete(LatinRectangle(4, {a, b, c}));
                CHECK(square.is_square());
                CHECK(latin_violation(4, square.cells()).empty());
                ++completed;
            }
        }
    }
    // The fourth row of a 4 x 4 square is forced, so rectangles and squares pair up.
    CHECK(completed == 576);
}

TEST_CASE("count_extensions examples and ceiling") {
    CHECK(count_extensions(LatinRectangle(3, {{1, 2, 3}, {2, 3, 1}})) == 1);
    CHECK(count_extensions(LatinRectangle(3, {{1, 2, 3}})) == 2);
    CHECK(count_extensions(LatinRectangle(3, {})) == 6);
    CHECK_THROWS_AS(count_extensions(LatinRectangle(9, {})), ResourceLimit);
    CHECK_THROWS_AS(count_extensions(LatinRectangle(2, {{1, 2}, {2, 1}})), AlreadyComplete);
}

TEST_CASE("count_extensions equals row enumeration on all rectangles of order four") {
    std::vector<std::vector<int>> perms;
    std::vector<int> perm{1, 2, 3, 4};
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> rows;
    auto go = [&](auto&& self) -> void {
        if (rows.size() == 4) {
            return;
        }
        CHECK(count_extensions(LatinRectangle(4, rows)) == oracle::count_next_rows(rows, 4));
        for (const auto& p : perms) {
            rows.push_back(p);
            if (latin_violation(4, rows).empty()) {
                self(self);
            }
            rows.pop_back();
        }
    };
    go(go);
}

TEST_CASE("latin square counts and the lower bound") {
    CHECK(count_latin_squares(1) == 1);
    CHECK(count_latin_squares(2) == 2);
    CHECK(count_latin_squares(3) == 12);
    CHECK(count_latin_squares(4) == 576);
    CHECK_THROWS_AS(count_latin_squares(6), ResourceLimit);
    CHECK(latin_lower_bound(1) == 1);
    CHECK(to_string(latin_lower_bound(3)) == "64/27");  // 46656/19683 reduced
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(Rational(count_latin_squares(n)) >= latin_lower_bound(n));
    }
}

TEST_CASE("block designs") {
    CHECK(fano().is_symmetric_bibd());
    CHECK(fano().block_size() == 3);
    CHECK(fano().replication() == 3);
    const BlockDesign cyclic = BlockDesign::indexed(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(cyclic.is_symmetric_bibd());
    CHECK(cyclic.replication() == 2);
    CHECK_THROWS_AS(BlockDesign({"1"}, {{"2"}}), InvalidInput);
}

TEST_CASE("youden examples") {
    SUBCASE("singleton blocks") {
        const BlockDesign d = BlockDesign::indexed(3, {{0}, {1}, {2}});
        const auto rows = youden_from_design(d);
        CHECK(rows == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    }
    SUBCASE("fano plane") {
        const auto rows = youden_from_design(fano());
        CHECK(rows.size() == 3);
        CHECK(validate_youden(fano(), rows));
    }
    SUBCASE("cyclic design without balance") {
        const BlockDesign d = BlockDesign::indexed(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        const auto rows = youden_from_design(d);
        CHECK(rows.size() == 2);
        CHECK(validate_youden(d, rows));
    }
    SUBCASE("rejected designs") {
        CHECK_THROWS_AS(youden_from_design(BlockDesign::indexed(3, {{0, 1}, {1, 2}})), InvalidInput);
        CHECK_THROWS_AS(youden_from_design(BlockDesign::indexed(3, {{0, 1}, {0, 2}, {0}})), InvalidInput);
        CHECK_THROWS_AS(youden_from_design(BlockDesign::indexed(3, {{0, 1}, {0, 2}, {0, 1}})), InvalidInput);
    }
}

TEST_CASE("validate_youden rejects broken arrays") {
    auto rows = youden_from_design(fano());
    std::swap(rows[0][0], rows[0][1]);
    CHECK_FALSE(validate_youden(fano(), rows));
    rows = youden_from_design(fano());
    rows.pop_back();
    CHECK_FALSE(validate_youden(fano(), rows));
}
