#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mlr/partitions.hpp"

using namespace mlr;

TEST_CASE("construction and parsing") {
    CHECK(Partition({3, 2, 0, 0}).parts() == std::vector<int>{3, 2});
    CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidPartition);
    CHECK(parse_partition("5,4,4,3") == Partition{5, 4, 4, 3});
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("0").empty());
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
    CHECK_THROWS_AS(parse_partition("a"), ParseError);
    CHECK_THROWS_AS(parse_composition("1,,2"), ParseError);
    CHECK(parse_composition("1,0,3") == Composition{1, 0, 3});
    CHECK(Partition{5, 4, 4, 3}.to_string() == "5,4,4,3");
}

TEST_CASE("conjugate") {
    CHECK(conjugate({3, 2}) == Partition{2, 2, 1});
    CHECK(conjugate({}).empty());
    CHECK(conjugate({4, 4, 4}) == Partition{3, 3, 3, 3});
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("arm and leg") {
    auto al = arm_leg({3, 2}, {1, 1});
    CHECK(al.arm == 2);
    CHECK(al.leg == 1);
    al = arm_leg({3, 2}, {2, 2});
    CHECK(al.arm == 0);
    CHECK(al.leg == 0);
    al = arm_leg({5, 4, 4, 3}, {1, 1});
    CHECK(al.arm == 4);
    CHECK(al.leg == 3);
    CHECK_THROWS_AS(arm_leg({3, 2}, {2, 3}), CellOutsideShape);
    // leg agrees with the conjugate definition
    for (const auto& p : partitions_of(9))
        for (Cell s : cells(p)) CHECK(arm_leg(p, s).leg == conjugate(p)[s.col] - s.row);
}

TEST_CASE("dominance") {
    CHECK(dominance_leq({2, 2}, {3, 1}));
    CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
    CHECK(dominance_leq({3, 1}, {3, 1}));
    CHECK_THROWS_AS(dominance_leq({2}, {1}), SizeMismatch);
    for (int n = 0; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
    }
}

TEST_CASE("partitions_of lists reverse lexicographic order") {
    auto ps = partitions_of(6);
    CHECK(ps.size() == 11);
    CHECK(ps.front() == Partition{6});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1, 1});
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(dominance_leq(ps[i], ps[j]));
    CHECK(partitions_in_box(4, 4).size() == 70);
    CHECK(compositions_of(3, 3).size() == 10);
}

TEST_CASE("strips") {
    CHECK(strip_type({1}, {2, 1}) == StripType::both);
    CHECK(strip_type({1, 1}, {2, 2}) == StripType::vertical);
    CHECK(strip_type({2}, {1}) == StripType::not_contained);
    CHECK(strip_type({1}, {3}) == StripType::horizontal);
    CHECK(strip_type({}, {2, 2}) == StripType::neither);
    CHECK(strip_type({2}, {2}) == StripType::both);
    auto box = partitions_in_box(4, 4);
    for (const auto& a : box)
        for (const auto& b : box) {
            CHECK(is_vertical_strip(a, b) == is_horizontal_strip(conjugate(a), conjugate(b)));
            // direct cell-based definitions
            if (!contains(b, a)) continue;
            auto cs = skew_cells(a, b);
            bool same_row = false, same_col = false;
            for (std::size_t i = 0; i < cs.size(); ++i)
                for (std::size_t j = i + 1; j < cs.size(); ++j) {
                    same_row |= cs[i].row == cs[j].row;
                    same_col |= cs[i].col == cs[j].col;
                }
            CHECK(is_vertical_strip(a, b) == !same_row);
            CHECK(is_horizontal_strip(a, b) == !same_col);
        }
}

TEST_CASE("sums and differences") {
    CHECK(sum_is_partition({3, 2, 1, 1}, {2, 2, 3, 2}));
    CHECK(add({3, 2, 1, 1}, {2, 2, 3, 2}) == Partition{5, 4, 4, 3});
    CHECK_FALSE(sum_is_partition({1}, {0, 2}));
    CHECK(difference({5, 4, 4, 3}, {3, 2, 1, 1}, 4) == Composition{2, 2, 3, 2});
}
