#include "qcoinv/repn.hpp"

#include "qcoinv/symfunc.hpp"

#include <doctest.h>

using namespace qcoinv;

namespace {

GroebnerBasis quotient(int n, int k) { return buchberger(coinvariant_ideal(n, k), TermOrder::neglex()); }

}  // namespace

TEST_SUITE_BEGIN("repn");

TEST_CASE("graded character formula, worked instance") {
    GradedSchurExpansion e = graded_frobenius_formula(4, 2);
    CHECK(e.coeffs.size() == 3);
    CHECK(e.coeffs.at(Partition({4})) == gaussian_binomial(3, 2));               // 1 + t + t^2
    CHECK(e.coeffs.at(Partition({3, 1})) ==
          TPoly::t_power(1) + TPoly::t_power(2) + TPoly::t_power(3));            // t + t^2 + t^3
    CHECK(e.coeffs.at(Partition({2, 2})) == TPoly::t_power(2));                  // t^2
}

TEST_CASE("graded character formula, edge cases") {
    GradedSchurExpansion e11 = graded_frobenius_formula(1, 1);
    CHECK(e11.coeffs.size() == 1);
    CHECK(e11.coeffs.at(Partition({1})) == TPoly(1));
    // k = n: multiplicity of each shape is the maj generating polynomial
    for (int n = 2; n <= 5; ++n) {
        GradedSchurExpansion e = graded_frobenius_formula(n, n);
        for (const auto& [shape, c] : e.coeffs) {
            TPoly expected;
            for (const SYTableau& t : syt_of_shape(shape)) expected += TPoly::t_power(des_maj(t).maj);
            CHECK(c == expected);
        }
        CHECK(hilbert_from_frobenius(e) == t_factorial(n));
    }
}

TEST_CASE("graded dimensions from the formula") {
    TPoly h42 = hilbert_from_frobenius(graded_frobenius_formula(4, 2));
    CHECK(h42.str() == "1 + 4t + 6t^2 + 3t^3");
    CHECK(h42.at_one() == 14);
    CHECK(hilbert_from_frobenius(graded_frobenius_formula(1, 1)) == TPoly(1));
    CHECK(hilbert_from_frobenius(graded_frobenius_formula(3, 3)).str() == "1 + 2t + 2t^2 + t^3");
}

TEST_CASE("multiplicities are non-negative integers") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& [shape, c] : graded_frobenius_formula(n, k).coeffs)
                for (int d = 0; d <= c.degree(); ++d) CHECK(c.coeff(d) >= 0);
}

TEST_CASE("formula matches the standard monomial count") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            GroebnerBasis basis(n, hl_demazure_basis(n, k), TermOrder::neglex(), false);
            CHECK(hilbert_from_frobenius(graded_frobenius_formula(n, k)) == hilbert_function(basis));
        }
}

TEST_CASE("border strip character values") {
    for (const Partition& lambda : partitions(5)) {
        Partition ones(std::vector<int>(5, 1));
        CHECK(murnaghan_nakayama(lambda, ones) == syt_count(lambda));
    }
    for (const Partition& mu : partitions(4)) CHECK(murnaghan_nakayama(Partition({4}), mu) == 1);
    CHECK(murnaghan_nakayama(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    // sign character on a class of cycle type mu is (-1)^(n - #cycles)
    for (const Partition& mu : partitions(4)) {
        long long sign = ((4 - mu.length()) % 2 == 0) ? 1 : -1;
        CHECK(murnaghan_nakayama(Partition({1, 1, 1, 1}), mu) == sign);
    }
    CHECK_THROWS_AS(murnaghan_nakayama(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("matrix action blocks") {
    GroebnerBasis g = quotient(3, 2);
    GradedMatrixAction action = build_matrix_action(3, 2, g);
    // degree 0: every generator acts as multiplication by q on constants
    for (const auto& m : action.gens[0]) {
        CHECK(m.size() == 1);
        CHECK(m[0][0] == QRat::q());
    }
    CHECK(check_matrix_relations(action).pass());
    // block sizes reproduce the graded dimension
    TPoly h = hilbert_function(g);
    for (size_t d = 0; d < action.basis.size(); ++d)
        CHECK(static_cast<long long>(action.basis[d].size()) == h.coeff(static_cast<int>(d)));
}

TEST_CASE("matrix relations at (4,2)") {
    GradedMatrixAction action = build_matrix_action(4, 2, quotient(4, 2));
    CHECK(check_matrix_relations(action).pass());
}

TEST_CASE("characters at q = 1") {
    GradedMatrixAction action = build_matrix_action(3, 2, quotient(3, 2));
    // identity trace per degree is the Hilbert function
    std::vector<int> id{1, 2, 3};
    CHECK(character_at_q1(action, id) == hilbert_function(quotient(3, 2)));
    // any class: trace equals the Schur expansion against border strip values
    GradedSchurExpansion e = graded_frobenius_formula(3, 2);
    for (const Partition& mu : partitions(3)) {
        TPoly expected;
        for (const auto& [shape, c] : e.coeffs) expected += c * TPoly(murnaghan_nakayama(shape, mu));
        CHECK(character_at_q1(action, class_representative(mu)) == expected);
    }
}

TEST_CASE("characters are class functions") {
    GradedMatrixAction action = build_matrix_action(4, 2, quotient(4, 2));
    // conjugate permutations of cycle type (2,1,1): adjacent transpositions
    TPoly a = character_at_q1(action, {2, 1, 3, 4});
    TPoly b = character_at_q1(action, {1, 3, 2, 4});
    TPoly c = character_at_q1(action, {1, 2, 4, 3});
    CHECK(a == b);
    CHECK(b == c);
    // two type-(2,2) elements
    CHECK(character_at_q1(action, {2, 1, 4, 3}) == character_at_q1(action, {3, 4, 1, 2}));
}

TEST_CASE("fixed ordered set partitions") {
    CHECK(permutation_character_osp(3, 2, {1, 2, 3}) == 6);
    // a transposition fixes exactly the partitions keeping the pair together
    CHECK(permutation_character_osp(3, 2, {2, 1, 3}) == 2);
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(permutation_character_osp(n, k, class_representative(Partition(std::vector<int>(
                      static_cast<size_t>(n), 1)))) == factorial(k) * stirling2(n, k));
}

TEST_CASE("class representatives have the right cycle type") {
    CHECK(class_representative(Partition({3, 2})) == std::vector<int>{2, 3, 1, 5, 4});
    CHECK(class_representative(Partition({1, 1, 1})) == std::vector<int>{1, 2, 3});
    CHECK(class_representative(Partition({4})) == std::vector<int>{2, 3, 4, 1});
}

TEST_SUITE_END();
