#include <doctest.h>

#include "test_util.hpp"
#include "weylkac/cartan.hpp"
#include "weylkac/errors.hpp"

using namespace weylkac;
using namespace weylkac::testing;

TEST_SUITE_BEGIN("cartan");

TEST_CASE("validate_gcm accepts the rank-1 matrix") {
    CartanMatrix a1 = validate_gcm({{2}});
    CHECK(a1.rank() == 1);
    CHECK(a1.symmetrizer() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("validate_gcm computes the G2 symmetrizer") {
    // d1 * (-1) = d2 * (-3), min entry scaled to 1
    CartanMatrix g2 = validate_gcm({{2, -1}, {-3, 2}});
    CHECK(g2.symmetrizer() == std::vector<Rational>{Rational(3), Rational(1)});
}

TEST_CASE("validate_gcm symmetrizer can be fractional") {
    CartanMatrix m = validate_gcm({{2, -3}, {-2, 2}});
    CHECK(m.symmetrizer() == std::vector<Rational>{Rational(1), make_rational(3, 2)});
}

TEST_CASE("validate_gcm rejections") {
    CHECK_THROWS_WITH_AS(validate_gcm({{3}}), doctest::Contains("DiagonalNotTwo"), Error);
    CHECK_THROWS_WITH_AS(validate_gcm({{2, 1}, {1, 2}}), doctest::Contains("PositiveOffDiagonal"),
                         Error);
    CHECK_THROWS_WITH_AS(validate_gcm({{2, -1}, {0, 2}}),
                         doctest::Contains("AsymmetricZeroPattern"), Error);
    // triangle with an inconsistent ratio around the cycle
    CHECK_THROWS_WITH_AS(validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}}),
                         doctest::Contains("NotSymmetrizable"), Error);
    CHECK_THROWS_AS(validate_gcm({{2, -1}}), Error);
    CHECK_THROWS_AS(validate_gcm({}), Error);
}

TEST_CASE("symmetrized matrix is symmetric on the whole corpus") {
    for (const auto& entry : corpus()) {
        CartanMatrix A = validate_gcm(entry.matrix);
        for (int i = 0; i < A.rank(); ++i)
            for (int j = 0; j < A.rank(); ++j)
                CHECK(A.symmetrizer()[static_cast<std::size_t>(i)] * A.entry(i, j) ==
                      A.symmetrizer()[static_cast<std::size_t>(j)] * A.entry(j, i));
    }
}

TEST_CASE("dynkin_graph shapes") {
    CHECK(dynkin_graph(cartan("A2")).edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(dynkin_graph(cartan("G2")).edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(dynkin_graph(cartan("A2aff")).edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("dynkin_graph sees only the zero pattern") {
    DynkinGraph path2 = dynkin_graph(cartan("A2"));
    CHECK(dynkin_graph(cartan("G2")) == path2);
    CHECK(dynkin_graph(cartan("B2")) == path2);
    CHECK(dynkin_graph(validate_gcm({{2, -5}, {-1, 2}})) == path2);
}

TEST_CASE("is_indecomposable") {
    CHECK(is_indecomposable(cartan("A1")));
    CHECK(is_indecomposable(cartan("A2aff")));
    CHECK_FALSE(is_indecomposable(cartan("A1xA1")));
}

TEST_CASE("rho_shift") {
    CHECK(rho_shift(DominantWeight({0, 0})) == std::vector<std::int64_t>{1, 1});
    CHECK(rho_shift(DominantWeight({2})) == std::vector<std::int64_t>{3});
    CHECK(rho_shift(DominantWeight({1, 0, 2})) == std::vector<std::int64_t>{2, 1, 3});
}

TEST_CASE("m_lambda and deg_lambda") {
    CHECK(m_lambda(DominantWeight({0, 0})) == ExponentVector({1, 1}));
    CHECK(m_lambda(DominantWeight({1})) == ExponentVector({2}));
    CHECK(m_lambda(DominantWeight({2, 0})) == ExponentVector({3, 1}));
    CHECK(deg_lambda(DominantWeight({0, 0})) == 2);
    CHECK(deg_lambda(DominantWeight({1, 1})) == 4);
    CHECK(deg_lambda(DominantWeight({2})) == 3);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        DominantWeight w = random_weight(1 + trial % 4, 5, rng);
        CHECK(m_lambda(w).is_regular());
        CHECK(deg_lambda(w) == m_lambda(w).degree());
    }
}

TEST_CASE("dominant weights reject negative coordinates") {
    CHECK_THROWS_AS(DominantWeight({1, -1}), Error);
}

TEST_CASE("classify") {
    CHECK(classify(cartan("A2")) == AlgebraType::finite);
    CHECK(classify(cartan("B2")) == AlgebraType::finite);
    CHECK(classify(cartan("G2")) == AlgebraType::finite);
    CHECK(classify(cartan("D4")) == AlgebraType::finite);
    CHECK(classify(cartan("A1aff")) == AlgebraType::affine);
    CHECK(classify(cartan("A2aff")) == AlgebraType::affine);
    CHECK(classify(cartan("A4aff")) == AlgebraType::affine);
    CHECK(classify(cartan("indef2")) == AlgebraType::indefinite);
    CHECK_THROWS_WITH_AS(classify(cartan("A1xA1")), doctest::Contains("DecomposableMatrix"),
                         Error);
}

TEST_CASE("exponent vector ordering is graded-lex") {
    ExponentVector a({0, 1}), b({1, 0}), c({2, 0}), d({0, 2});
    CHECK(a < b);        // same degree, lex
    CHECK(b < d);        // degree 1 < 2
    CHECK(d < c);        // same degree, lex
    CHECK_FALSE(a < a);
}

TEST_SUITE_END();
