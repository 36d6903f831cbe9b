#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <punctured/parse.hpp>

#include "oracles.hpp"

using namespace punctured;

namespace {

const Field Q = Field::rationals();
const Field F7 = Field::prime(7);
const Field F4 = Field::extension(2, {1, 1, 1});

std::vector<Field> fields() { return {Q, F7, F4, Field::extension(3, {1, 0, 1})}; }

std::size_t offset_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const ParseError &e) {
        return e.offset();
    }
    FAIL("no ParseError");
    return 0;
}

TruncatedSeries random_series(const Field &F, std::mt19937_64 &rng, int pole, int N)
{
    std::map<int, FieldValue> t;
    for (int e = pole; e > -N; --e)
        if (rng() % 3) t.emplace(e, oracle::random_value(F, rng));
    return TruncatedSeries(F, "t", t, N);
}

} // namespace

TEST_CASE("field descriptors round-trip")
{
    for (const Field &F : fields()) CHECK(parse_field(F.descriptor()) == F);
    CHECK(parse_field("fq:2:z^2 + z + 1") == F4);
    CHECK(parse_field("fp:7").order() == 7);
    CHECK_THROWS_AS(parse_field("fp:8"), ParseError);
    CHECK(offset_of([] { parse_field("fq:2:z^2 + w"); }) == 11);
    CHECK(offset_of([] { parse_field("fr:2"); }) == 0);
    // Reducible modulus: z^2 + 1 = (z + 1)^2 over F_2.
    CHECK_THROWS_AS(parse_field("fq:2:z^2+1"), ParseError);
}

TEST_CASE("field elements round-trip")
{
    std::mt19937_64 rng(11);
    for (const Field &F : fields()) {
        for (int i = 0; i < 50; ++i) {
            const FieldValue a = oracle::random_value(F, rng);
            CHECK(parse_value(F, a.to_string()) == a);
            CHECK(parse_value(F, a.coefficient_string()) == a);
        }
    }
    CHECK(parse_value(Q, "-3/4") == Q.from_rational(mpq_class(-3, 4)));
    CHECK(parse_value(F7, "1/3") == F7.from_int(5));
    CHECK(parse_value(F4, "z^2") == F4.generator() + F4.one());
    CHECK(offset_of([] { parse_value(F7, "2/7"); }) == 1);
    CHECK(offset_of([] { parse_value(Q, "t + 1"); }) == 0);
}

TEST_CASE("polynomials and rational functions round-trip")
{
    std::mt19937_64 rng(12);
    for (const Field &F : fields()) {
        for (int i = 0; i < 30; ++i) {
            Polynomial p(F, {"x", "y"});
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    if (rng() % 3 == 0) p.add_term({a, b}, oracle::random_value(F, rng));
            CHECK(parse_polynomial(F, p.to_string(), {"x", "y"}) == p);

            std::vector<FieldValue> n, d;
            for (int k = 0; k < 4; ++k) n.push_back(oracle::random_value(F, rng));
            for (int k = 0; k < 3; ++k) d.push_back(oracle::random_value(F, rng));
            d.push_back(F.one());
            const RationalFunction f(UPoly(F, n), UPoly(F, d), "t");
            CHECK(parse_rational_function(F, f.to_string()) == f);
        }
    }
    const Polynomial p = parse_polynomial(Q, "x^2 + 1/3*x*y - 2*y", {});
    CHECK(p.variables() == std::vector<std::string>{"x", "y"});
    CHECK(p.to_string() == "x^2 + 1/3*x*y - 2*y");
    CHECK(parse_polynomial(Q, "(x - y)^2", {}) == parse_polynomial(Q, "x^2 - 2x y + y^2", {}));
    CHECK(parse_rational_function(Q, "1/(t-1) + 1/(t+1)").to_string() == "2*t / (t^2 - 1)");
    CHECK(offset_of([] { parse_polynomial(Q, "x + w", {"x", "y"}); }) == 4);
    CHECK(offset_of([] { parse_polynomial(Q, "x +", {"x"}); }) == 3);
    CHECK(offset_of([] { parse_rational_function(Q, "1/(t - t)"); }) == 1);
}

TEST_CASE("truncated series round-trip")
{
    std::mt19937_64 rng(13);
    for (const Field &F : fields()) {
        for (int i = 0; i < 40; ++i) {
            const TruncatedSeries a = random_series(F, rng, static_cast<int>(rng() % 6) - 2, 4 + static_cast<int>(rng() % 10));
            const TruncatedSeries b = parse_truncated_series(F, a.to_string(), "t", 99);
            CHECK(b == a);
        }
    }
    const TruncatedSeries s = parse_truncated_series(Q, "3/2*t^2 - t^-1 + O(t^-9)", "t", 0);
    CHECK(s.precision() == 9);
    CHECK(s.coeff(2) == Q.from_rational(mpq_class(3, 2)));
    CHECK(s.coeff(-1) == Q.from_int(-1));
    CHECK(parse_truncated_series(Q, "O(t^-9)", "t", 0).is_zero());

    // Division expands at infinity: 1/(t - 1) = t^-1 + t^-2 + ...
    const TruncatedSeries g = parse_truncated_series(Q, "1/(t - 1)", "t", 6);
    CHECK(g.precision() == 6);
    for (int e = -1; e > -6; --e) CHECK(g.coeff(e) == Q.one());
    CHECK(g.coeff(0).is_zero());

    CHECK(offset_of([] { parse_truncated_series(Q, "t + t^-9 + O(t^-9)", "t", 0); }) == 11);
    CHECK(offset_of([] { parse_truncated_series(Q, "t + O(deg 3)", "t", 0); }) == 4);
    CHECK(offset_of([] { parse_truncated_series(Q, "O(t^-3) + t", "t", 0); }) == 8);
    CHECK(offset_of([] { parse_truncated_series(Q, "s + 1", "t", 5); }) == 0);
}

TEST_CASE("bivariate and chart series round-trip")
{
    std::mt19937_64 rng(14);
    for (const Field &F : fields()) {
        for (int i = 0; i < 20; ++i) {
            const int N = 2 + static_cast<int>(rng() % 6);
            std::map<std::pair<int, int>, FieldValue> t;
            for (int d = 0; d < N; ++d)
                for (int j = 0; j <= d; ++j)
                    if (rng() % 2) t.emplace(std::pair{d - j, j}, oracle::random_value(F, rng));
            const BiSeries g(F, {"x", "y"}, t, N);
            CHECK(parse_biseries(F, g.to_string(), 0) == g);

            for (Chart chart : {Chart::G1, Chart::G2, Chart::G12}) {
                std::vector<LaurentPoly> tail;
                for (int k = 1; k < N; ++k) {
                    LaurentPoly p(F);
                    const int lo = chart == Chart::G12 ? -3 : 0;
                    for (int e = lo; e <= 3; ++e)
                        if (rng() % 3 == 0) p.add_term(e, oracle::random_value(F, rng));
                    tail.push_back(p);
                }
                const int n = chart == Chart::G12 ? static_cast<int>(rng() % 5) - 2 : 0;
                const ChartUnit u = ChartUnit::from_parts(chart, oracle::random_nonzero(F, rng), n, tail, N);
                CHECK(parse_chart_series(F, chart, u.to_string(), 0) == u.series());
            }
        }
    }
    const BiSeries g = parse_biseries(Q, "1 - 2*x^-1*y^-2 + O(deg 6)", 0);
    CHECK(g.in_G());
    CHECK(g.coeff(1, 2) == Q.from_int(-2));
    CHECK(offset_of([] { parse_biseries(Q, "1 + x", 4); }) == 0);
    CHECK(offset_of([] { parse_biseries(Q, "1 + x^-1 + O(t^-3)", 4); }) == 11);
}

TEST_CASE("syntax errors report the byte offset")
{
    CHECK(offset_of([] { parse_expression("1 + * 2"); }) == 4);
    CHECK(offset_of([] { parse_expression("(1 + 2"); }) == 6);
    CHECK(offset_of([] { parse_expression("x^"); }) == 2);
    CHECK(offset_of([] { parse_expression("x $ y"); }) == 2);
    CHECK(offset_of([] { parse_expression("(1 + O(t^-2))"); }) == 5);
    const Expression e = parse_expression("x^(-3) + O(t^-4)");
    REQUIRE(e.big_o);
    CHECK(e.big_o->exponent == -4);
    CHECK(e.root->kind == Node::Kind::Pow);
    CHECK(e.root->exponent == -3);
}
