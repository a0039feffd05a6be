#include "qcoinv/groebner.hpp"

#include "qcoinv/symfunc.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qcoinv;

namespace {

MPoly x(int i, int n) { return MPoly::variable(i, n); }

std::vector<mpq_class> alpha_list(int k) {
    std::vector<mpq_class> out;
    for (int r = 1; r <= k; ++r) out.emplace_back(r);
    return out;
}

std::set<std::vector<int>> exponent_set(const std::vector<Monomial>& ms) {
    std::set<std::vector<int>> s;
    for (const auto& m : ms) s.insert(m.exponents());
    return s;
}

MPoly random_poly(std::mt19937_64& rng, int n, int max_deg) {
    int nterms = 1 + static_cast<int>(rng() % 3);
    std::vector<MPoly::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        for (int u = 0; u < deg; ++u) ++e[rng() % static_cast<unsigned>(n)];
        terms.emplace_back(Monomial(std::move(e)), QRat(static_cast<long>(rng() % 5) - 2));
    }
    return MPoly::from_terms(n, std::move(terms));
}

}  // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("buchberger on principal and tiny ideals") {
    Ideal principal{1, {x(1, 1)}};
    GroebnerBasis g = buchberger(principal, TermOrder::neglex());
    CHECK(g.elements().size() == 1);
    CHECK(g.elements()[0] == x(1, 1));

    // k = 1, n = 2: generators already contain x1 and x1 + x2
    GroebnerBasis g21 = buchberger(coinvariant_ideal(2, 1), TermOrder::neglex());
    auto stds = standard_monomials(g21);
    CHECK(stds.size() == 1);
    CHECK(stds[0].is_one());
}

TEST_CASE("buchberger output passes the S-pair verifier") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        GroebnerBasis g = buchberger(coinvariant_ideal(n, k), TermOrder::neglex());
        GroebnerCheck chk = is_groebner(g.elements(), TermOrder::neglex());
        CHECK(chk.groebner);
        CHECK(chk.minimal);  // reduced bases are minimal
        CHECK(static_cast<long long>(standard_monomials(g).size()) ==
              factorial(k) * stirling2(n, k));
    }
}

TEST_CASE("normal forms") {
    GroebnerBasis g = buchberger(coinvariant_ideal(3, 2), TermOrder::neglex());
    for (const auto& gen : coinvariant_ideal(3, 2).gens) CHECK(normal_form(gen, g).is_zero());
    MPoly one = MPoly::constant(3, QRat(1));
    CHECK(normal_form(one, g) == one);  // the ideal is proper
    std::mt19937_64 rng(101);
    for (int t = 0; t < 15; ++t) {
        MPoly f = random_poly(rng, 3, 4), h = random_poly(rng, 3, 4);
        CHECK(normal_form(f + h, g) == normal_form(f, g) + normal_form(h, g));
    }
}

TEST_CASE("is_groebner detects failures") {
    std::vector<MPoly> good = {x(1, 2), x(2, 2)};
    GroebnerCheck chk = is_groebner(good, TermOrder::neglex());
    CHECK(chk.groebner);
    CHECK(chk.minimal);
    // S-pair of {x2^2, x1 x2 + x1^2} reduces to x1^3 != 0 under neglex
    std::vector<MPoly> bad = {MPoly::monomial(Monomial({0, 2})),
                              MPoly::monomial(Monomial({1, 1})) + MPoly::monomial(Monomial({2, 0}))};
    CHECK(!is_groebner(bad, TermOrder::neglex()).groebner);
}

TEST_CASE("standard monomials under caps and error paths") {
    std::vector<MPoly> vars;
    for (int i = 1; i <= 3; ++i) vars.push_back(x(i, 3));
    GroebnerBasis g(3, vars, TermOrder::neglex(), true);
    auto stds = standard_monomials(g);
    CHECK(stds.size() == 1);

    // not zero-dimensional: x1 alone in two variables
    GroebnerBasis partial(2, {x(1, 2)}, TermOrder::neglex(), true);
    CHECK_THROWS_AS(standard_monomials(partial), std::invalid_argument);
    auto capped = standard_monomials(partial, 2);
    // 1, x2, x2^2 survive the cap
    CHECK(exponent_set(capped) == std::set<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("hilbert functions") {
    std::vector<MPoly> vars;
    for (int i = 1; i <= 3; ++i) vars.push_back(x(i, 3));
    CHECK(hilbert_function(GroebnerBasis(3, vars, TermOrder::neglex(), true)) == TPoly(1));
    GroebnerBasis g33 = buchberger(coinvariant_ideal(3, 3), TermOrder::neglex());
    CHECK(hilbert_function(g33) == t_factorial(3));  // 1 + 2t + 2t^2 + t^3
    // inhomogeneous elements are rejected
    GroebnerBasis in(1, {x(1, 1) - MPoly::constant(1, QRat(1))}, TermOrder::deg_neglex(), true);
    CHECK_THROWS_AS(hilbert_function(in), std::invalid_argument);
}

TEST_CASE("vanishing ideals of explicit points") {
    QPoint p{QRat(3)};
    GroebnerBasis g = vanishing_ideal(std::vector<QPoint>{p});
    CHECK(g.elements().size() == 1);
    CHECK(g.elements()[0] == x(1, 1) - MPoly::constant(1, QRat(3)));

    std::vector<QPoint> two = {{QRat(1)}, {QRat(2)}};
    GroebnerBasis g2 = vanishing_ideal(two);
    CHECK(g2.elements().size() == 1);
    MPoly expected = (x(1, 1) - MPoly::constant(1, QRat(1))) * (x(1, 1) - MPoly::constant(1, QRat(2)));
    CHECK(g2.elements()[0] == expected);

    auto a = alpha_list(2);
    auto pts = generate_Y(3, 2, a);
    GroebnerBasis gy = vanishing_ideal(pts);
    CHECK(standard_monomials(gy).size() == 6);
    for (const auto& f : gy.elements())
        for (const auto& pt : pts) CHECK(f.evaluate(pt).is_zero());

    CHECK_THROWS_AS(vanishing_ideal(std::vector<QPoint>{p, p}), std::invalid_argument);
}

TEST_CASE("top-component ideals") {
    QPoint p{QRat(5)};
    GroebnerBasis g = top_component_ideal(std::vector<QPoint>{p});
    CHECK(g.elements().size() == 1);
    CHECK(g.elements()[0] == x(1, 1));

    // T(Y) for the full orbit at k = n = 2 is the classical invariant ideal
    auto a = alpha_list(2);
    auto pts = generate_Y(2, 2, a);
    GroebnerBasis top = top_component_ideal(pts);
    GroebnerBasis quotient = buchberger(coinvariant_ideal(2, 2), TermOrder::neglex());
    CHECK(ideal_equal(top, quotient));
}

TEST_CASE("ideal equality") {
    GroebnerBasis a(2, {x(1, 2)}, TermOrder::neglex(), true);
    GroebnerBasis b(2, {x(1, 2) * x(1, 2)}, TermOrder::neglex(), true);
    CHECK(ideal_equal(a, a));
    CHECK(!ideal_equal(a, b));
}

TEST_CASE("top-component ideal does not depend on the labels") {
    std::vector<mpq_class> other = {mpq_class(7), mpq_class(1, 3), mpq_class(-2), mpq_class(5)};
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {4, 4}}) {
        std::vector<mpq_class> alt(other.begin(), other.begin() + k);
        GroebnerBasis first = top_component_ideal(generate_Y(n, k, alpha_list(k)));
        GroebnerBasis second = top_component_ideal(generate_Y(n, k, alt));
        CHECK(ideal_equal(first, second));
    }
}

TEST_CASE("stability of symmetric generators") {
    GroebnerBasis g = buchberger(coinvariant_ideal(3, 2), TermOrder::neglex());
    std::vector<MPoly> elementary = {elementary_sym(2, 3), elementary_sym(3, 3)};
    CHECK(check_stability(g, elementary).pass());
    CHECK(check_stability(g, coinvariant_ideal(3, 2).gens).pass());
}

TEST_CASE("candidate basis leading monomials") {
    // Hall-Littlewood leading monomials are the pure powers x_i^k
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}}) {
        for (int i = 1; i <= n; ++i) {
            CHECK(hall_littlewood_p(k, i, n).leading_monomial(TermOrder::neglex()) ==
                  Monomial::var(i, n, k));
        }
        auto cand = hl_demazure_basis(n, k);
        GroebnerCheck chk = is_groebner(cand, TermOrder::neglex());
        CHECK(chk.groebner);
        if (k < n) CHECK(chk.minimal);
        GroebnerBasis basis(n, cand, TermOrder::neglex(), false);
        CHECK(exponent_set(standard_monomials(basis)) == exponent_set(artin_monomials(n, k)));
    }
}

TEST_CASE("pair budget aborts with a resource error") {
    CHECK_THROWS_AS(buchberger(coinvariant_ideal(4, 3), TermOrder::neglex(), {.pair_budget = 1}),
                    resource_error);
}

TEST_CASE("matrix rank over the field") {
    std::vector<std::vector<QRat>> rows = {{QRat(1), QRat::q()}, {QRat::q(), QRat::q() * QRat::q()}};
    CHECK(matrix_rank(rows) == 1);  // second row is q times the first
    rows[1][1] = QRat(7);
    CHECK(matrix_rank(rows) == 2);
    CHECK(matrix_rank({}) == 0);
}

TEST_SUITE_END();
