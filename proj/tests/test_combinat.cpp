#include "qcoinv/combinat.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qcoinv;

TEST_SUITE_BEGIN("combinat");

TEST_CASE("partitions and stirling numbers") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(0).size() == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    for (int n = 1; n <= 8; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(6, 0) == 0);
    CHECK(factorial(5) == 120);
}

TEST_CASE("t-analogs") {
    CHECK(gaussian_binomial(3, 2) == t_integer(3));  // 1 + t + t^2
    CHECK(gaussian_binomial(3, 2).str() == "1 + t + t^2");
    CHECK(gaussian_binomial(7, 0) == TPoly(1));
    CHECK(gaussian_binomial(2, 3).is_zero());
    CHECK(gaussian_binomial(5, -1).is_zero());
    CHECK(t_factorial(3).str() == "1 + 2t + 2t^2 + t^3");
    // at t = 1 the Gaussian binomial is the binomial coefficient
    long long binom[9][9] = {};
    for (int a = 0; a <= 8; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b) CHECK(gaussian_binomial(a, b).at_one() == binom[a][b]);
}

TEST_CASE("standard Young tableaux") {
    CHECK(enumerate_syt(1).size() == 1);
    CHECK(enumerate_syt(3).size() == 4);
    long long sum_sq = 0;
    for (const Partition& shape : partitions(4)) {
        long long f = syt_count(shape);
        sum_sq += f * f;
    }
    CHECK(sum_sq == 24);
    // row and column validity of every enumerated tableau
    for (const SYTableau& t : enumerate_syt(5)) {
        for (const auto& row : t.rows) CHECK(std::is_sorted(row.begin(), row.end()));
        for (size_t r = 1; r < t.rows.size(); ++r)
            for (size_t c = 0; c < t.rows[r].size(); ++c) CHECK(t.rows[r][c] > t.rows[r - 1][c]);
    }
}

TEST_CASE("descents and major index") {
    SYTableau row{{{1, 2, 3, 4}}};
    CHECK(des_maj(row).descents.empty());
    CHECK(des_maj(row).maj == 0);
    SYTableau column{{{1}, {2}, {3}}};
    CHECK(des_maj(column).descents == std::vector<int>{1, 2});
    CHECK(des_maj(column).maj == 3);
    std::set<int> majs;
    for (const SYTableau& t : syt_of_shape(Partition({2, 1}))) majs.insert(des_maj(t).maj);
    CHECK(majs == std::set<int>{1, 2});
}

TEST_CASE("staircases") {
    auto s53 = staircases(5, 3);
    std::set<std::vector<int>> expected = {{2, 2, 2, 1, 0}, {2, 2, 1, 2, 0}, {2, 2, 1, 0, 2},
                                           {2, 1, 2, 2, 0}, {2, 1, 2, 0, 2}, {2, 1, 0, 2, 2}};
    CHECK(std::set<std::vector<int>>(s53.begin(), s53.end()) == expected);
    auto s44 = staircases(4, 4);
    CHECK(s44.size() == 1);
    CHECK(s44[0] == std::vector<int>{3, 2, 1, 0});
    CHECK(staircases(4, 2).size() == 3);
}

TEST_CASE("box monomials under staircases") {
    CHECK(artin_monomials(3, 2).size() == 6);
    CHECK(artin_monomials(1, 1).size() == 1);
    CHECK(artin_monomials(1, 1)[0].is_one());
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(artin_monomials(n, n).size()) == factorial(n));
}

TEST_CASE("descent monomials") {
    CHECK(descent_monomial({1, 2, 3}).is_one());
    // w = 3 1 2 has one descent, at position 1: monomial x3
    CHECK(descent_monomial({3, 1, 2}) == Monomial({0, 0, 1}));
    // w = 2 3 1: descent at 2: x2 x3
    CHECK(descent_monomial({2, 3, 1}) == Monomial({0, 1, 1}));
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(gs_monomials(n, n).size()) == factorial(n));
    CHECK(gs_monomials(4, 2).size() == 14);
}

TEST_CASE("counting chain at desk scale") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            long long expected = factorial(k) * stirling2(n, k);
            CHECK(static_cast<long long>(artin_monomials(n, k).size()) == expected);
            CHECK(static_cast<long long>(gs_monomials(n, k).size()) == expected);
        }
}

TEST_CASE("permutation helpers") {
    CHECK(permutations(3).size() == 6);
    CHECK(inversions({1, 2, 3}) == 0);
    CHECK(inversions({3, 2, 1}) == 3);
    CHECK(descent_positions({2, 1, 3}) == std::vector<int>{1});
}

TEST_SUITE_END();
