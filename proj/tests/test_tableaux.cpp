#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "mlr/tableaux.hpp"

using namespace mlr;

namespace {

// Oracle: try every filling with values 1..n and keep the semistandard ones.
long kostka_by_filling(const Partition& mu, const Composition& chi) {
    const int n = static_cast<int>(chi.size());
    auto cs = cells(mu);
    std::vector<int> values(cs.size(), 1);
    long count = 0;
    if (std::accumulate(chi.begin(), chi.end(), 0) != mu.size()) return 0;
    if (cs.empty()) return 1;
    for (;;) {
        std::map<std::pair<int, int>, int> at;
        for (std::size_t i = 0; i < cs.size(); ++i) at[{cs[i].row, cs[i].col}] = values[i];
        bool ok = true;
        Composition w(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < cs.size() && ok; ++i) {
            auto [r, c] = cs[i];
            ++w[static_cast<std::size_t>(values[i] - 1)];
            if (c > 1 && at[{r, c - 1}] > values[i]) ok = false;
            if (r > 1 && at[{r - 1, c}] >= values[i]) ok = false;
        }
        if (ok && w == chi) ++count;
        std::size_t k = 0;
        while (k < values.size() && values[k] == n) values[k++] = 1;
        if (k == values.size()) break;
        ++values[k];
    }
    return count;
}

// Number of standard tableaux by the hook length formula.
long standard_count(const Partition& p) {
    long double num = 1;
    for (int i = 1; i <= p.size(); ++i) num *= i;
    for (Cell s : cells(p)) {
        auto al = arm_leg(p, s);
        num /= (al.arm + al.leg + 1);
    }
    return static_cast<long>(num + 0.5L);
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("tableau construction") {
    auto T = Tableau::from_rows({{1, 2, 3}, {3, 3}});
    CHECK(T.shape() == Partition{3, 2});
    CHECK(T.columns() == std::vector<std::vector<int>>{{1, 3}, {2, 3}, {3}});
    CHECK(T.weight() == Composition{1, 1, 3});
    CHECK(T.rows() == std::vector<std::vector<int>>{{1, 2, 3}, {3, 3}});
    CHECK_THROWS_AS(Tableau::from_rows({{2, 1}}), InvalidTableau);
    CHECK_THROWS_AS(Tableau::from_rows({{1, 1}, {1}}), InvalidTableau);
    CHECK_THROWS_AS(Tableau::from_rows({{1}, {2, 3}}), InvalidTableau);
    CHECK(T.render() == "1 2 3\n3 3\n");
}

TEST_CASE("enumeration") {
    auto ts = enumerate_ssyt({3, 2}, {1, 1, 3});
    REQUIRE(ts.size() == 1);
    CHECK(ts[0] == Tableau::from_rows({{1, 2, 3}, {3, 3}}));

    ts = enumerate_ssyt({2, 1}, {1, 1, 1});
    REQUIRE(ts.size() == 2);
    CHECK(ts[0] == Tableau::from_rows({{1, 3}, {2}}));
    CHECK(ts[1] == Tableau::from_rows({{1, 2}, {3}}));

    ts = enumerate_ssyt({1}, {0, 1});
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].columns() == std::vector<std::vector<int>>{{2}});

    CHECK_THROWS_AS(enumerate_ssyt({2}, {3}), SizeMismatch);
    CHECK(enumerate_ssyt({2, 2, 1}, {1, 1, 1, 1, 1}, 1).size() == 2);
}

TEST_CASE("kostka numbers") {
    CHECK(kostka({3, 2}, {1, 1, 3}) == 1);
    CHECK(kostka({3, 3, 3}, {2, 2, 3, 2}) == 1);
    CHECK(kostka({2}, {3}) == 0);
    for (int n = 0; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(kostka(mu, mu.parts()) == 1);
    for (int n = 0; n <= 5; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& chi : compositions_of(n, 3)) CHECK(kostka(mu, chi) == kostka_by_filling(mu, chi));
    // symmetric in the order of the weight
    for (const auto& mu : partitions_of(6))
        for (auto chi : compositions_of(6, 3)) {
            long k = kostka(mu, chi);
            std::sort(chi.begin(), chi.end());
            do {
                CHECK(kostka(mu, chi) == k);
            } while (std::next_permutation(chi.begin(), chi.end()));
        }
}

TEST_CASE("unique_ssyt") {
    auto r = unique_ssyt({3, 2}, {1, 1, 3});
    CHECK(r.status == UniqueResult::Status::one);
    CHECK(*r.tableau == Tableau::from_rows({{1, 2, 3}, {3, 3}}));
    CHECK(unique_ssyt({2, 1}, {1, 1, 1}).status == UniqueResult::Status::many);
    CHECK(unique_ssyt({2}, {3}).status == UniqueResult::Status::zero);
    CHECK(unique_ssyt({2, 2}, {4}).status == UniqueResult::Status::zero);
}

TEST_CASE("column criterion") {
    CHECK(is_unique_by_columns(Tableau::from_rows({{1, 2, 3}, {3, 3}})));
    // third column {2} is not contained in the first column {1,3}
    auto T = Tableau::from_rows({{1, 2, 2}, {3, 3}});
    CHECK_FALSE(is_unique_by_columns(T));
    CHECK(kostka(T.shape(), T.weight()) == 2);
    CHECK(is_unique_by_columns(Tableau::from_rows({{1}, {3}, {4}})));
    // both directions on a moderate range
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& chi : compositions_of(n, 4)) {
                auto ts = enumerate_ssyt(mu, chi);
                for (const auto& t : ts) CHECK(is_unique_by_columns(t) == (ts.size() == 1));
            }
}

TEST_CASE("block classification") {
    CHECK(classify_block({{1, 2}, {1, 2}, {1, 2}}) == std::set<BlockKind>{BlockKind::first});
    CHECK(classify_block({{1, 3}, {2, 3}}) == std::set<BlockKind>{BlockKind::second, BlockKind::third});
    CHECK(classify_block({{1, 2}, {1, 3}, {1, 4}}) == std::set<BlockKind>{BlockKind::second});
    CHECK(classify_block({{1, 2, 3}, {1, 3, 4}, {2, 3, 4}}) == std::set<BlockKind>{BlockKind::third});
    CHECK_THROWS_AS(classify_block({{1, 2}, {3, 4}}), NotUniqueBlock);
    // never empty on blocks of unique tableaux
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n, 4))
            for (const auto& chi : compositions_of(n, 5)) {
                auto r = unique_ssyt(mu, chi);
                if (r.status != UniqueResult::Status::one) continue;
                for (const auto& block : rectangular_blocks(*r.tableau)) CHECK_FALSE(classify_block(block.columns()).empty());
            }
}

TEST_CASE("intrinsic, complement, reversal") {
    auto T = Tableau::from_rows({{1, 1, 2}, {2, 2, 3}, {3, 4, 4}});
    CHECK(intrinsic(T) == Tableau::from_rows({{1, 1, 3}, {3, 4, 4}}));
    CHECK(intrinsic(Tableau::from_rows({{1, 1}, {2, 2}})).empty());
    CHECK_THROWS_AS(intrinsic(Tableau::from_rows({{1, 1}, {2}})), NotRectangular);

    CHECK(complement(Tableau::from_columns({{1, 2}, {1, 3}})) == Tableau::from_rows({{1, 2}}));
    CHECK_THROWS_AS(complement(Tableau::from_columns({{1, 2}})), WrongKind);
    auto third = Tableau::from_rows({{1, 1, 2}, {2, 3, 3}, {3, 4, 4}});
    CHECK(complement(third) == Tableau::from_rows({{1, 3, 4}}));

    CHECK(reversal({2, 1}, 2, 3) == Partition{2, 1});
    CHECK(reversal({3}, 2, 4) == Partition{4, 1});
    CHECK(reversal({}, 1, 1) == Partition{1});
    CHECK_THROWS_AS(reversal({3}, 2, 3), NTooSmall);

    // intrinsic tableaux of unique rectangles are unique
    for (int n = 1; n <= 9; ++n)
        for (const auto& mu : partitions_of(n, 4))
            for (const auto& chi : compositions_of(n, 5)) {
                auto r = unique_ssyt(mu, chi);
                if (r.status != UniqueResult::Status::one || !r.tableau->is_rectangular()) continue;
                Tableau I = intrinsic(*r.tableau);
                if (I.empty()) continue;
                CHECK(kostka(I.shape(), I.weight()) == 1);
            }
}

TEST_CASE("Littlewood-Richardson coefficients") {
    CHECK(lr_coefficient_schur({1}, {1}, {2, 1}) == 0);
    CHECK(lr_coefficient_schur({1}, {1}, {2}) == 1);
    CHECK(lr_coefficient_schur({1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient_schur({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coefficient_schur({1, 1}, {2}, {2, 2}) == 0);
    CHECK(lr_coefficient_schur({3, 2, 1, 1}, {3, 3, 3}, {5, 4, 4, 3}) == 1);

    // sum_nu c * f^nu = binom(|nu|, |lambda|) f^lambda f^mu
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (const auto& lambda : partitions_of(a))
                for (const auto& mu : partitions_of(b)) {
                    long total = 0;
                    for (const auto& nu : partitions_of(a + b)) {
                        long c = lr_coefficient_schur(lambda, mu, nu);
                        CHECK(c == lr_coefficient_schur(mu, lambda, nu));
                        CHECK(c == lr_coefficient_schur(conjugate(lambda), conjugate(mu), conjugate(nu)));
                        total += c * standard_count(nu);
                    }
                    CHECK(total == binomial(a + b, a) * standard_count(lambda) * standard_count(mu));
                }
}

TEST_CASE("Gelfand-Tsetlin map") {
    SkewTableau T{{14, 9, 5, 2}, {10, 6, 3}, {{1, 1, 1, 1}, {1, 2, 2}, {2, 2}, {2, 3}}};
    auto lr = lr_tableaux(T.inner, {5, 5, 1}, T.outer);
    CHECK(std::find(lr.begin(), lr.end(), T) != lr.end());
    auto g = lr_to_gt(T);
    CHECK(g.rows == std::vector<std::vector<int>>{{4}, {5, 2}, {5, 4, 0}, {5, 5, 1, 0}});
    CHECK(g.interlaces());

    SkewTableau single{{1}, {}, {{1}}};
    CHECK(lr_to_gt(single).rows == std::vector<std::vector<int>>{{1}});
    SkewTableau bad{{2}, {}, {{2, 2}}};
    CHECK_THROWS_AS(lr_to_gt(bad), NotLatticeWord);

    // injective, interlacing, row sums track nu - lambda
    for (const auto& nu : partitions_in_box(4, 4)) {
        for (const auto& lambda : partitions_in_box(4, 4)) {
            if (!contains(nu, lambda)) continue;
            int r = nu.size() - lambda.size();
            for (const auto& mu : partitions_of(r)) {
                auto ts = lr_tableaux(lambda, mu, nu);
                std::set<GTPattern> images;
                for (const auto& t : ts) {
                    auto p = lr_to_gt(t);
                    CHECK(p.interlaces());
                    if (!nu.empty()) CHECK(p.rows.back() == mu.padded(nu.length()));
                    for (int j = 1; j <= nu.length(); ++j) {
                        int prev = j > 1 ? std::accumulate(p.rows[static_cast<std::size_t>(j - 2)].begin(), p.rows[static_cast<std::size_t>(j - 2)].end(), 0) : 0;
                        int cur = std::accumulate(p.rows[static_cast<std::size_t>(j - 1)].begin(), p.rows[static_cast<std::size_t>(j - 1)].end(), 0);
                        CHECK(cur - prev == nu[j] - lambda[j]);
                    }
                    images.insert(p);
                }
                CHECK(images.size() == ts.size());
                // c <= K, with a bijection onto SSYT(mu, nu - lambda) for horizontal strips
                Composition chi = difference(nu, lambda, nu.length());
                long k = kostka(mu, chi);
                CHECK(static_cast<long>(ts.size()) <= k);
                if (is_horizontal_strip(lambda, nu)) {
                    CHECK(static_cast<long>(ts.size()) == k);
                    std::set<Tableau> ssyt;
                    for (const auto& p : images) ssyt.insert(gt_to_tableau(p));
                    auto all = enumerate_ssyt(mu, chi);
                    CHECK(ssyt == std::set<Tableau>(all.begin(), all.end()));
                }
            }
        }
    }
}
