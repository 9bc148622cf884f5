#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "weylkac/errors.hpp"
#include "weylkac/series.hpp"

using namespace weylkac;
using namespace weylkac::testing;

namespace {

TruncatedSeries s1(std::int64_t bound, std::vector<std::pair<std::int64_t, long>> terms) {
    std::vector<std::pair<ExponentVector, Rational>> t;
    for (auto [e, c] : terms) t.emplace_back(ExponentVector({e}), Rational(c));
    return TruncatedSeries::from_terms(1, bound, t);
}

TruncatedSeries s2(std::int64_t bound,
                   std::vector<std::tuple<std::int64_t, std::int64_t, Rational>> terms) {
    std::vector<std::pair<ExponentVector, Rational>> t;
    for (auto& [e1, e2, c] : terms) t.emplace_back(ExponentVector({e1, e2}), c);
    return TruncatedSeries::from_terms(2, bound, t);
}

// Independent rank-2 oracle: dense array convolution, nothing shared with
// the sparse implementation.
struct Dense2 {
    std::int64_t bound;
    std::vector<std::vector<Rational>> c;

    explicit Dense2(const TruncatedSeries& s)
        : bound(s.bound()),
          c(static_cast<std::size_t>(bound + 1),
            std::vector<Rational>(static_cast<std::size_t>(bound + 1))) {
        REQUIRE(s.rank() == 2);
        for (const auto& [e, q] : s.terms())
            c[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = q;
    }

    Dense2(std::int64_t b) // zero
        : bound(b),
          c(static_cast<std::size_t>(b + 1), std::vector<Rational>(static_cast<std::size_t>(b + 1))) {}

    TruncatedSeries to_series() const {
        std::vector<std::pair<ExponentVector, Rational>> t;
        for (std::int64_t i = 0; i <= bound; ++i)
            for (std::int64_t j = 0; i + j <= bound; ++j)
                if (c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                    t.emplace_back(ExponentVector({i, j}),
                                   c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return TruncatedSeries::from_terms(2, bound, t);
    }
};

Dense2 dense_mul(const Dense2& a, const Dense2& b) {
    Dense2 out(a.bound);
    for (std::int64_t i1 = 0; i1 <= a.bound; ++i1)
        for (std::int64_t j1 = 0; i1 + j1 <= a.bound; ++j1)
            for (std::int64_t i2 = 0; i1 + j1 + i2 <= a.bound; ++i2)
                for (std::int64_t j2 = 0; i1 + j1 + i2 + j2 <= a.bound; ++j2)
                    out.c[static_cast<std::size_t>(i1 + i2)][static_cast<std::size_t>(j1 + j2)] +=
                        a.c[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j1)] *
                        b.c[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
    return out;
}

} // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("add basics") {
    CHECK(add(s1(3, {{0, 1}, {1, -1}}), s1(3, {{1, 1}})) == s1(3, {{0, 1}}));
    TruncatedSeries f = s1(4, {{0, 2}, {3, 5}});
    CHECK(add(f, TruncatedSeries::zero(1, 4)) == f);
    CHECK(add(s1(3, {{0, 1}, {2, -1}}), s1(3, {{2, 1}, {3, -1}})) == s1(3, {{0, 1}, {3, -1}}));
}

TEST_CASE("mul basics") {
    // (1-x)(1+x+x^2) at bound 2: the x^3 term falls away
    CHECK(mul(s1(2, {{0, 1}, {1, -1}}), s1(2, {{0, 1}, {1, 1}, {2, 1}})) == s1(2, {{0, 1}}));
    // (1-x^2)(1-x^3) at bound 5
    CHECK(mul(s1(5, {{0, 1}, {2, -1}}), s1(5, {{0, 1}, {3, -1}})) ==
          s1(5, {{0, 1}, {2, -1}, {3, -1}, {5, 1}}));
    TruncatedSeries f = s1(6, {{0, 3}, {2, -7}, {5, 1}});
    CHECK(mul(f, TruncatedSeries::one(1, 6)) == f);
}

TEST_CASE("mul agrees with the dense oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        TruncatedSeries f = random_series(2, 6, 8, rng);
        TruncatedSeries g = random_series(2, 6, 8, rng);
        CHECK(mul(f, g) == dense_mul(Dense2(f), Dense2(g)).to_series());
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        TruncatedSeries f = random_series(2, 5, 6, rng);
        TruncatedSeries g = random_series(2, 5, 6, rng);
        TruncatedSeries h = random_series(2, 5, 6, rng);
        CHECK(mul(f, g) == mul(g, f));
        CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
        CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
    }
}

TEST_CASE("mismatched operands are rejected") {
    CHECK_THROWS_WITH_AS(add(s1(3, {}), TruncatedSeries::zero(2, 3)),
                         doctest::Contains("RankMismatch"), Error);
    CHECK_THROWS_WITH_AS(mul(s1(3, {}), s1(4, {})), doctest::Contains("BoundMismatch"), Error);
}

TEST_CASE("div_by_unit reproduces the sl2 character") {
    for (std::int64_t a = 0; a <= 5; ++a) {
        // (1 - x^{a+1}) / (1 - x) = 1 + x + ... + x^a, also at bounds below a+1
        for (std::int64_t bound : {a + 1, std::max<std::int64_t>(a, 1)}) {
            std::vector<std::pair<std::int64_t, long>> numer{{0, 1}};
            if (a + 1 <= bound) numer.push_back({a + 1, -1});
            std::vector<std::pair<std::int64_t, long>> geo;
            for (std::int64_t k = 0; k <= std::min(a, bound); ++k) geo.push_back({k, 1});
            CHECK(div_by_unit(s1(bound, numer), s1(bound, {{0, 1}, {1, -1}})) == s1(bound, geo));
        }
    }
}

TEST_CASE("div_by_unit on the A2 denominator identity") {
    TruncatedSeries num6 = s2(6, {{0, 0, Rational(1)},
                                  {1, 0, Rational(-1)},
                                  {0, 1, Rational(-1)},
                                  {2, 1, Rational(1)},
                                  {1, 2, Rational(1)},
                                  {2, 2, Rational(-1)}});
    TruncatedSeries f = truncate(num6, 3);
    TruncatedSeries g = s2(3, {{0, 0, Rational(1)}, {1, 1, Rational(-1)}});
    // the quotient is (1 - X1)(1 - X2)
    CHECK(div_by_unit(f, g) == s2(3, {{0, 0, Rational(1)},
                                      {1, 0, Rational(-1)},
                                      {0, 1, Rational(-1)},
                                      {1, 1, Rational(1)}}));
}

TEST_CASE("f/f is 1 and mul(div(f,g),g) recovers f") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries f = random_series(2, 5, 6, rng);
        TruncatedSeries g = random_unit_series(2, 5, 6, rng);
        CHECK(div_by_unit(g, g) == TruncatedSeries::one(2, 5));
        CHECK(mul(div_by_unit(f, g), g) == f);
    }
}

TEST_CASE("div_by_unit rejects a non-unit divisor") {
    CHECK_THROWS_WITH_AS(div_by_unit(s1(3, {{0, 1}}), s1(3, {{1, 1}})),
                         doctest::Contains("NonUnitDivisor"), Error);
}

TEST_CASE("neg_log closed forms") {
    CHECK(neg_log(TruncatedSeries::one(1, 5)) == TruncatedSeries::zero(1, 5));

    // -log(1 - x^{a+1}) = Σ_p x^{p(a+1)} / p up to bound 3(a+1)
    for (std::int64_t a = 0; a <= 3; ++a) {
        std::int64_t bound = 3 * (a + 1);
        std::vector<std::pair<ExponentVector, Rational>> expect;
        for (long p = 1; p <= 3; ++p)
            expect.emplace_back(ExponentVector({p * (a + 1)}), make_rational(1, p));
        CHECK(neg_log(s1(bound, {{0, 1}, {a + 1, -1}})) ==
              TruncatedSeries::from_terms(1, bound, expect));
    }

    // -log of the A2 denominator at bound 2
    TruncatedSeries u0 = s2(2, {{0, 0, Rational(1)}, {1, 0, Rational(-1)}, {0, 1, Rational(-1)}});
    CHECK(neg_log(u0) == s2(2, {{1, 0, Rational(1)},
                                {0, 1, Rational(1)},
                                {2, 0, make_rational(1, 2)},
                                {0, 2, make_rational(1, 2)},
                                {1, 1, Rational(1)}}));
}

TEST_CASE("neg_log agrees with the power-sum oracle") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries f = random_unit_series(2, 5, 6, rng);
        CHECK(neg_log(f) == neg_log_power_sum(f));
    }
    for (int trial = 0; trial < 5; ++trial) {
        TruncatedSeries f = random_unit_series(3, 4, 6, rng);
        CHECK(neg_log(f) == neg_log_power_sum(f));
    }
}

TEST_CASE("neg_log turns products into sums") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        TruncatedSeries f = random_unit_series(2, 5, 5, rng);
        TruncatedSeries g = random_unit_series(2, 5, 5, rng);
        CHECK(neg_log(mul(f, g)) == add(neg_log(f), neg_log(g)));
    }
}

TEST_CASE("neg_log denominators divide lcm(1..bound) for integral input") {
    std::mt19937 rng(29);
    const std::int64_t bound = 6;
    Integer lcm = 1;
    for (long k = 2; k <= bound; ++k) {
        Integer kk(k);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), kk.get_mpz_t());
    }
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries f = random_unit_series(2, bound, 6, rng);
        if (!f.integral()) {
            std::vector<std::pair<ExponentVector, Rational>> rounded;
            for (const auto& [e, c] : f.terms())
                rounded.emplace_back(e, Rational(c.get_num()));
            f = TruncatedSeries::from_terms(2, bound, rounded);
        }
        if (f.constant_term() != 1) continue;
        TruncatedSeries l = neg_log(f);
        for (const auto& [e, c] : l.terms())
            CHECK(mpz_divisible_p(lcm.get_mpz_t(), c.get_den().get_mpz_t()));
    }
}

TEST_CASE("neg_log requires constant term 1") {
    CHECK_THROWS_WITH_AS(neg_log(s1(3, {{0, 2}})), doctest::Contains("ConstantTermNotOne"), Error);
    CHECK_THROWS_WITH_AS(neg_log(s1(3, {{1, 1}})), doctest::Contains("ConstantTermNotOne"), Error);
}

TEST_CASE("regular_part") {
    // rank 1: only the constant is irregular
    CHECK(regular_part(s1(3, {{0, 4}, {1, 2}, {3, -1}})) == s1(3, {{1, 2}, {3, -1}}));
    CHECK(regular_part(s2(2, {{1, 0, Rational(1)}, {0, 1, Rational(1)}, {1, 1, Rational(1)}})) ==
          s2(2, {{1, 1, Rational(1)}}));

    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries f = random_series(2, 5, 6, rng);
        TruncatedSeries g = random_series(2, 5, 6, rng);
        TruncatedSeries rf = regular_part(f);
        CHECK(regular_part(rf) == rf);                                       // idempotent
        CHECK(regular_part(add(f, g)) == add(regular_part(f), regular_part(g)));   // linear
    }
}

TEST_CASE("min_regular_monomials") {
    TruncatedSeries f = s2(4, {{1, 1, Rational(1)}, {2, 2, Rational(3)}});
    auto m = min_regular_monomials(f);
    REQUIRE(m.size() == 1);
    CHECK(m[0].first == ExponentVector({1, 1}));
    CHECK(m[0].second == 1);

    TruncatedSeries tie = s2(4, {{3, 1, Rational(1)}, {1, 3, Rational(1)}});
    auto tied = min_regular_monomials(tie);
    REQUIRE(tied.size() == 2);
    CHECK(tied[0].first == ExponentVector({1, 3}));   // graded-lex ascending
    CHECK(tied[1].first == ExponentVector({3, 1}));

    CHECK(min_regular_monomials(s2(4, {{0, 0, Rational(1)}, {1, 0, Rational(1)}})).empty());
}

TEST_CASE("coefficient lookup") {
    TruncatedSeries f = s1(3, {{0, 1}, {1, -1}});
    CHECK(f.coefficient(ExponentVector({1})) == -1);
    CHECK(f.coefficient(ExponentVector({2})) == 0);
    CHECK_THROWS_WITH_AS(f.coefficient(ExponentVector({4})), doctest::Contains("DegreeAboveBound"),
                         Error);
}

TEST_CASE("truncate is a prefix and cannot raise the bound") {
    TruncatedSeries f = s1(5, {{0, 1}, {2, -1}, {3, -1}, {5, 1}});
    CHECK(truncate(f, 3) == s1(3, {{0, 1}, {2, -1}, {3, -1}}));
    CHECK_THROWS_WITH_AS(truncate(f, 6), doctest::Contains("BoundMismatch"), Error);
}

TEST_CASE("high ranks use the sparse fallback kernels") {
    // rank 7 at bound 30 is far past the dense-table cap
    const int rank = 7;
    const std::int64_t bound = 30;
    auto unit_vec = [&](int i, std::int64_t m) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(rank), 0);
        e[static_cast<std::size_t>(i)] = m;
        return ExponentVector(std::move(e));
    };
    TruncatedSeries one = TruncatedSeries::one(rank, bound);
    TruncatedSeries x0 = TruncatedSeries::monomial(unit_vec(0, 1), Rational(1), bound);
    TruncatedSeries f = add(one, x0);        // 1 + X1
    TruncatedSeries g = sub(one, x0);        // 1 - X1

    TruncatedSeries fg = mul(f, g);
    CHECK(fg == sub(one, TruncatedSeries::monomial(unit_vec(0, 2), Rational(1), bound)));
    CHECK(div_by_unit(fg, g) == f);

    std::vector<std::pair<ExponentVector, Rational>> expect;
    for (long k = 1; k <= bound; ++k)
        expect.emplace_back(unit_vec(0, k), make_rational(1, k));
    CHECK(neg_log(g) == TruncatedSeries::from_terms(rank, bound, expect));

    std::mt19937 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries r1 = random_series(rank, bound, 6, rng);
        TruncatedSeries r2 = random_series(rank, bound, 6, rng);
        TruncatedSeries u = random_unit_series(rank, bound, 6, rng);
        CHECK(mul(r1, r2) == mul(r2, r1));
        CHECK(mul(div_by_unit(r1, u), u) == r1);
    }
}

TEST_CASE("series file format is byte-exact") {
    TruncatedSeries f = s2(3, {{0, 0, Rational(1)},
                               {1, 0, Rational(-1)},
                               {1, 2, make_rational(-1, 2)}});
    std::ostringstream os;
    write_series(os, f);
    CHECK(os.str() == "# weyl-series v1\n# rank=2 degree=3\n0 0 : 1\n1 0 : -1\n1 2 : -1/2\n");

    std::istringstream is(os.str());
    CHECK(read_series(is) == f);
}

TEST_CASE("series files round trip") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries f = random_series(3, 5, 8, rng);
        std::ostringstream os;
        write_series(os, f);
        std::istringstream is(os.str());
        CHECK(read_series(is) == f);
    }
}

TEST_CASE("malformed series files are rejected") {
    auto reject = [](const std::string& text) {
        std::istringstream is(text);
        CHECK_THROWS_AS(read_series(is), Error);
    };
    reject("");
    reject("# weyl-series v2\n# rank=1 degree=1\n");
    reject("# weyl-series v1\n# rank=1\n");
    reject("# weyl-series v1\n# rank=1 degree=2\n0 0 : 1\n");        // wrong rank
    reject("# weyl-series v1\n# rank=1 degree=2\n3 : 1\n");          // above bound
    reject("# weyl-series v1\n# rank=1 degree=2\n0 : 2/4\n");        // non-canonical
    reject("# weyl-series v1\n# rank=1 degree=2\n0 : 1/1\n");        // non-canonical
    reject("# weyl-series v1\n# rank=1 degree=2\n0 : 1/0\n");        // zero denominator
    reject("# weyl-series v1\n# rank=1 degree=2\n0 : 0\n");          // stored zero
    reject("# weyl-series v1\n# rank=1 degree=2\n1 : 1\n0 : 1\n");   // out of order
}

TEST_SUITE_END();
