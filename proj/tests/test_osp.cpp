#include "qcoinv/osp.hpp"

#include "qcoinv/combinat.hpp"

#include <doctest.h>

#include <set>

using namespace qcoinv;

namespace {

OrderedSetPartition osp(std::string_view s) { return OrderedSetPartition::parse(s); }

std::vector<mpq_class> rationals(std::initializer_list<long> vals) {
    std::vector<mpq_class> out;
    for (long v : vals) out.emplace_back(v);
    return out;
}

std::vector<mpq_class> default_alpha_list(int k) {
    std::vector<mpq_class> out;
    for (int r = 1; r <= k; ++r) out.emplace_back(r);
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("osp");

TEST_CASE("construction and canonical form") {
    OrderedSetPartition s({{5, 2}, {1}, {4, 3}});
    CHECK(s.n() == 5);
    CHECK(s.k() == 3);
    CHECK(s.str() == "(25|1|34)");
    CHECK(s.block_of(5) == 1);
    CHECK(s.block_of(4) == 3);
    CHECK_THROWS_AS(OrderedSetPartition({{1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSetPartition({{1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedSetPartition({{1}, {3}}), std::invalid_argument);
}

TEST_CASE("string round trip, including n > 9") {
    CHECK(osp("(25|1|34)").str() == "(25|1|34)");
    std::vector<std::vector<int>> blocks{{1, 10, 2}, {3, 4, 5, 6, 7, 8, 9}};
    OrderedSetPartition big(std::move(blocks));
    CHECK(big.str() == "(1 2 10|3 4 5 6 7 8 9)");
    CHECK(OrderedSetPartition::parse(big.str()) == big);
}

TEST_CASE("enumeration counts") {
    auto all22 = enumerate_osp(2, 2);
    CHECK(all22.size() == 2);
    CHECK(std::set<OrderedSetPartition>(all22.begin(), all22.end()) ==
          std::set<OrderedSetPartition>{osp("(1|2)"), osp("(2|1)")});
    CHECK(enumerate_osp(3, 2).size() == 6);
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(enumerate_osp(n, n).size()) == factorial(n));
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(static_cast<long long>(enumerate_osp(n, k).size()) == factorial(k) * stirling2(n, k));
    CHECK_THROWS_AS(enumerate_osp(2, 3), std::invalid_argument);
}

TEST_CASE("three-case generator action, worked instance") {
    OSPVector v = OSPVector::basis(osp("(25|1|34)"));
    QRat q = QRat::q();

    OSPVector t1 = osp_hecke_T(1, v);
    OSPVector expected1 = q * OSPVector::basis(osp("(15|2|34)")) +
                          (q - QRat(1)) * OSPVector::basis(osp("(25|1|34)"));
    CHECK(t1 == expected1);

    CHECK(osp_hecke_T(2, v) == OSPVector::basis(osp("(35|1|24)")));
    CHECK(osp_hecke_T(3, v) == q * v);
}

TEST_CASE("q = 1 degenerates to the relabeling action") {
    for (const auto& sigma : enumerate_osp(4, 2)) {
        for (int i = 1; i < 4; ++i) {
            OSPVector img = osp_hecke_T(i, OSPVector::basis(sigma));
            // evaluate coefficients at q = 1 and compare with s_i(sigma)
            std::map<OrderedSetPartition, mpq_class> at1;
            for (const auto& [tau, c] : img.coeffs()) {
                mpq_class v = c.eval(1);
                if (v != 0) at1.emplace(tau, v);
            }
            std::map<OrderedSetPartition, mpq_class> expected{{sigma.swap_letters(i), mpq_class(1)}};
            CHECK(at1 == expected);
        }
    }
}

TEST_CASE("hecke relations on the partition module") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) CHECK(check_osp_relations(n, k).pass());
}

TEST_CASE("block labeling map, worked instance") {
    auto alpha = rationals({1, 2, 3});
    QPoint y = phi(osp("(5|146|23)"), alpha);
    QRat q = QRat::q();
    QPoint expected = {QRat(2),          QRat(3), q * QRat(3),
                       q * QRat(2),      QRat(1), QRat::q_power(2) * QRat(2)};
    CHECK(point_equal(y, expected));
}

TEST_CASE("labeling is injective and identity-like for singleton blocks") {
    auto alpha = rationals({1, 2, 3});
    QPoint y = phi(osp("(1|2|3)"), alpha);
    CHECK(point_equal(y, {QRat(1), QRat(2), QRat(3)}));
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto a = default_alpha_list(k);
            std::set<std::string> images;
            auto all = enumerate_osp(n, k);
            for (const auto& sigma : all) images.insert(point_str(phi(sigma, a)));
            CHECK(images.size() == all.size());
        }
}

TEST_CASE("generated locus") {
    auto a1 = rationals({1});
    auto y11 = generate_Y(1, 1, a1);
    CHECK(y11.size() == 1);
    CHECK(point_equal(y11[0], {QRat(1)}));

    auto a2 = rationals({1, 2});
    auto y32 = generate_Y(3, 2, a2);
    CHECK(y32.size() == 6);
    for (const auto& p : y32) CHECK(point_in_Y(p, 3, 2, a2));

    // the labeled points and the generated locus agree as sets
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            auto a = default_alpha_list(k);
            std::set<std::string> gen, img;
            for (const auto& p : generate_Y(n, k, a)) gen.insert(point_str(p));
            for (const auto& sigma : enumerate_osp(n, k)) img.insert(point_str(phi(sigma, a)));
            CHECK(gen == img);
        }
}

TEST_CASE("alpha validation") {
    CHECK_THROWS_AS(phi(osp("(12)"), rationals({0})), std::invalid_argument);
    CHECK_THROWS_AS(phi(osp("(1|2)"), rationals({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(phi(osp("(1|2)"), rationals({1})), std::invalid_argument);
}

TEST_CASE("point set JSON round trip") {
    auto a = rationals({1, 2});
    auto pts = generate_Y(3, 2, a);
    auto loaded = points_from_json(points_to_json(pts));
    REQUIRE(loaded.size() == pts.size());
    for (size_t i = 0; i < pts.size(); ++i) CHECK(point_equal(loaded[i], pts[i]));
}

TEST_CASE("quantization of rational points, worked instances") {
    // alpha_1, alpha_2, alpha_3 = 1, 2, 3
    std::vector<std::vector<mpq_class>> pts = {{2, 1, 2, 2, 3, 1}};
    auto quantized = quantize_points(pts);
    QRat q = QRat::q();
    QPoint expected = {QRat(2), QRat(1), q * QRat(2), QRat::q_power(2) * QRat(2), QRat(3), q * QRat(1)};
    CHECK(point_equal(quantized[0], expected));

    std::vector<std::vector<mpq_class>> orbit = {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    auto qorbit = quantize_points(orbit);
    CHECK(point_equal(qorbit[0], {QRat(1), q * QRat(1), QRat(2)}));
    CHECK(point_equal(qorbit[1], {QRat(1), QRat(2), q * QRat(1)}));
    CHECK(point_equal(qorbit[2], {QRat(2), QRat(1), q * QRat(1)}));

    std::vector<std::vector<mpq_class>> distinct = {{5, 7, 11}};
    auto qd = quantize_points(distinct);
    CHECK(point_equal(qd[0], {QRat(5), QRat(7), QRat(11)}));
}

TEST_SUITE_END();
