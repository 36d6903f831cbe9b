#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <punctured/picard.hpp>

#include "oracles.hpp"

using namespace punctured;

namespace {

const Field Q = Field::rationals();

LaurentPoly random_poly(const Field &F, std::mt19937_64 &rng, int lo, int hi)
{
    LaurentPoly p(F);
    for (int e = lo; e <= hi; ++e)
        if (rng() % 3 == 0) p.add_term(e, oracle::random_value(F, rng));
    return p;
}

ChartUnit random_cocycle(const Field &F, std::mt19937_64 &rng, int N)
{
    std::vector<LaurentPoly> tail;
    for (int k = 1; k < N; ++k) tail.push_back(random_poly(F, rng, -4, k + 4));
    const int n = static_cast<int>(rng() % 7) - 3;
    return ChartUnit::from_parts(Chart::G12, oracle::random_nonzero(F, rng), n, tail, N);
}

ChartUnit random_chart_unit(Chart chart, const Field &F, std::mt19937_64 &rng, int N)
{
    std::vector<LaurentPoly> tail;
    for (int k = 1; k < N; ++k) tail.push_back(random_poly(F, rng, 0, 5));
    return ChartUnit::from_parts(chart, oracle::random_nonzero(F, rng), 0, tail, N);
}

void check_postcondition(const ChartUnit &c, const FactorizationResult &r, int N)
{
    CHECK(factorization_defect(c, r).agrees_with(ChartUnit::one(Chart::G12, c.field(), N)));
    CHECK(r.residual.agrees_with(ChartUnit::one(Chart::G12, c.field(), N)));
    CHECK(r.g.in_G());
    CHECK(r.u1.scalar().is_one());
    CHECK(r.u2.scalar().is_one());
    CHECK(r.u1.chart() == Chart::G1);
    CHECK(r.u2.chart() == Chart::G2);
    REQUIRE(r.residual_levels.size() == static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k) CHECK(r.residual_levels[static_cast<std::size_t>(k - 1)] >= k);
}

} // namespace

TEST_CASE("trivial cocycles")
{
    const auto r = factor_cocycle(ChartUnit::one(Chart::G12, Q, 8), 8);
    CHECK(r.n == 0);
    CHECK(r.g == BiSeries::one(Q, 8));
    CHECK(r.u1 == ChartUnit::one(Chart::G1, Q, 8));
    CHECK(r.u2 == ChartUnit::one(Chart::G2, Q, 8));

    const auto s = factor_cocycle(ChartUnit::ratio_power(Q, 1, 8), 8);
    CHECK(s.n == 1);
    CHECK(s.g == BiSeries::one(Q, 8));
    CHECK(s.u1 == ChartUnit::one(Chart::G1, Q, 8));
    CHECK(s.u2 == ChartUnit::one(Chart::G2, Q, 8));
    CHECK(s.scalar_normalization.is_one());
}

TEST_CASE("a G2 unit factors through u2")
{
    const int N = 10;
    const ChartUnit v = ChartUnit::from_parts(Chart::G2, Q.one(), 0, {LaurentPoly::monomial(Q.one(), 0)}, N); // 1 + y^-1
    const ChartUnit c = chart_embed(v);
    const auto r = factor_cocycle(c, N);
    CHECK(r.n == 0);
    CHECK(r.g == BiSeries::one(Q, N));
    CHECK(r.u1 == ChartUnit::one(Chart::G1, Q, N));
    CHECK(r.u2.agrees_with(v.inverse()));
    check_postcondition(c, r, N);
}

TEST_CASE("a G element is recovered")
{
    const int N = 9;
    const BiSeries g(Q, {"x", "y"}, {{{0, 0}, Q.one()}, {{1, 1}, Q.from_int(3)}, {{2, 3}, Q.from_int(-1)}}, N);
    const auto r = factor_cocycle(chart_embed(2, g), N);
    CHECK(r.n == 2);
    CHECK(r.g.agrees_with(g));
}

TEST_CASE("soundness on random cocycles")
{
    std::mt19937_64 rng(2024);
    const int N = 12;
    for (const Field &F : {Q, Field::prime(5), Field::prime(2), Field::extension(3, {1, 0, 1})}) {
        for (int trial = 0; trial < 4; ++trial) {
            const ChartUnit c = random_cocycle(F, rng, N);
            const auto r = factor_cocycle(c, N);
            CHECK(r.n == c.exponent());
            CHECK(r.scalar_normalization == c.scalar());
            check_postcondition(c, r, N);
        }
    }
}

TEST_CASE("the (n, g) component is well defined")
{
    std::mt19937_64 rng(77);
    const int N = 10;
    for (const Field &F : {Q, Field::prime(7)}) {
        for (int trial = 0; trial < 3; ++trial) {
            const ChartUnit c = random_cocycle(F, rng, N);
            const auto r = factor_cocycle(c, N);
            const auto again = factor_cocycle(c, N);
            CHECK(again.n == r.n);
            CHECK(again.g == r.g);

            const ChartUnit u1 = random_chart_unit(Chart::G1, F, rng, N), u2 = random_chart_unit(Chart::G2, F, rng, N);
            const auto moved = factor_cocycle(c * chart_embed(u1) * chart_embed(u2), N);
            CHECK(moved.n == r.n);
            CHECK(moved.g.agrees_with(r.g));

            const ChartUnit d = random_cocycle(F, rng, N);
            const auto rd = factor_cocycle(d, N), rcd = factor_cocycle(c * d, N);
            CHECK(rcd.n == r.n + rd.n);
            CHECK(rcd.g.agrees_with(r.g * rd.g));
        }
    }
}

TEST_CASE("errors")
{
    ChartSeries bad = ChartSeries::monomial(Chart::G12, Q.one(), 0, 0, 8) + ChartSeries::monomial(Chart::G12, Q.one(), 1, -1, 8);
    try {
        (void)ChartUnit(bad);
        FAIL("expected MalformedCocycle");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::MalformedCocycle);
    }
    try {
        (void)factor_cocycle(ChartUnit::one(Chart::G12, Q, 5), 8);
        FAIL("expected PrecisionExhausted");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
}

TEST_CASE("Pic group law")
{
    const int N = 6;
    const auto g = [&](std::map<std::pair<int, int>, long> t) {
        std::map<std::pair<int, int>, FieldValue> v;
        for (auto [k, c] : t) v.emplace(k, Q.from_int(c));
        return BiSeries(Q, {"x", "y"}, v, N);
    };
    const PicElement a{0, g({{{0, 0}, 1}, {{1, 1}, 1}})}, b{0, g({{{0, 0}, 1}, {{1, 1}, -1}})};
    CHECK(pic_mul(a, b) == PicElement{0, g({{{0, 0}, 1}, {{2, 2}, -1}})});
    CHECK(pic_inv(PicElement{1, a.g}) == PicElement{-1, g({{{0, 0}, 1}, {{1, 1}, -1}, {{2, 2}, 1}})});
    CHECK(pic_mul(a, pic_identity(Q, N)) == a);
    CHECK(pic_mul(a, pic_inv(a)) == pic_identity(Q, N));
    CHECK_THROWS_AS(pic_mul(a, pic_identity(Q, N + 1)), Error);
}

TEST_CASE("graded pieces partition")
{
    for (const Field &F : {Q, Field::prime(5)}) {
        const auto rep = verify_partition_of_graded(12, F);
        CHECK(rep.degree_zero_ok);
        CHECK(rep.passed);
        REQUIRE(rep.levels.size() == 12);
        const auto &l1 = rep.levels[0];
        CHECK(l1.g.empty());
        CHECK(l1.g1.back() == 0);
        CHECK(l1.g2.front() == 1);
        const auto &l5 = rep.levels[4];
        CHECK(l5.g == std::vector<int>{1, 2, 3, 4});
        CHECK(l5.g2.front() == 5);
    }
}
