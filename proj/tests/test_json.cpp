#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <punctured/json_io.hpp>
#include <punctured/parse.hpp>

#include "oracles.hpp"

using namespace punctured;
using json_io::json;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F4 = Field::extension(2, {1, 1, 1});

// Every tagged object anywhere in j decodes and re-encodes to itself, and a
// text dump parses back to the same tree. Returns the number of objects seen.
int check_tree(const json &j)
{
    int seen = 0;
    json again;
    if (json_io::reencode(j, again)) {
        CHECK(again == j);
        ++seen;
    }
    if (j.is_object() || j.is_array())
        for (const auto &child : j) seen += check_tree(child);
    return seen;
}

int check_document(const json &j)
{
    CHECK(json::parse(j.dump()) == j);
    return check_tree(j);
}

TruncatedSeries random_series(const Field &F, std::mt19937_64 &rng, int pole, int N)
{
    std::map<int, FieldValue> t;
    for (int e = pole; e > -N; --e)
        if (rng() % 3) t.emplace(e, oracle::random_value(F, rng));
    return TruncatedSeries(F, "t", t, N);
}

} // namespace

TEST_CASE("value encodings round-trip")
{
    std::mt19937_64 rng(21);
    for (const Field &F : {Q, F5, F4}) {
        for (int i = 0; i < 20; ++i) {
            const TruncatedSeries s = random_series(F, rng, 3, 10);
            CHECK(json_io::decode_truncated_series(json_io::encode(s)) == s);

            std::map<std::pair<int, int>, FieldValue> t;
            for (int d = 0; d < 6; ++d)
                for (int j = 0; j <= d; ++j)
                    if (rng() % 2) t.emplace(std::pair{d - j, j}, oracle::random_value(F, rng));
            const BiSeries g(F, {"x", "y"}, t, 6);
            CHECK(json_io::decode_biseries(json_io::encode(g)) == g);

            std::vector<LaurentPoly> tail;
            for (int k = 1; k < 5; ++k) {
                LaurentPoly p(F);
                for (int e = -2; e <= 2; ++e)
                    if (rng() % 2) p.add_term(e, oracle::random_value(F, rng));
                tail.push_back(p);
            }
            const ChartUnit u = ChartUnit::from_parts(Chart::G12, oracle::random_nonzero(F, rng), static_cast<int>(rng() % 5) - 2, tail, 5);
            CHECK(json_io::decode_chart_unit(json_io::encode(u)) == u);
            CHECK(json_io::decode_chart_series(json_io::encode(u.series())) == u.series());

            Polynomial p(F, {"x", "y"});
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) p.add_term({a, b}, oracle::random_value(F, rng));
            CHECK(json_io::decode_polynomial(json_io::encode(p)) == p);

            const RationalFunction f(UPoly(F, {oracle::random_value(F, rng), F.one()}),
                                     UPoly(F, {oracle::random_value(F, rng), oracle::random_value(F, rng), F.one()}), "t");
            CHECK(json_io::decode_rational_function(json_io::encode(f)) == f);
        }
    }
}

TEST_CASE("operators and certificates round-trip with their tables")
{
    const TruncatedSeries f = parse_truncated_series(Q, "t^2 - 1/2*t^-1 + t^-3 + O(t^-12)", "t", 0);
    const CalkinClass1D c = phi_of_series(f, 8);
    const json op = json_io::encode(c.op);
    const WindowedOperator back = json_io::decode_operator(op);
    CHECK(back.tabulate(8).size() == c.op.tabulate(8).size());
    for (const auto &[b, img] : c.op.tabulate(8)) CHECK(back.apply(b) == img);
    CHECK(json_io::encode(back) == op);

    const json cert = json_io::encode(c.membership.certificates.at(0));
    const RankCertificate rc = json_io::decode_rank_certificate(cert);
    CHECK(rc.rank == 1);
    CHECK(recheck_rank(rc) == 1);
    CHECK(rc.exact());
    CHECK(check_document(cert) == 1);
}

TEST_CASE("reports re-parse into equal values")
{
    const auto h = parse_truncated_series(Q, "y^-1 + y^-3 + O(y^-9)", "y", 0);
    CHECK(check_document(json_io::encode(verify_ses(h, 4))) >= 5);
    CHECK(check_document(json_io::encode(build_M_g(parse_biseries(F5, "1 + 2*x^-1*y^-1 + O(deg 9)", 0), 5))) >= 4);

    const ChartUnit cocycle(parse_chart_series(Q, Chart::G12, "x*y^-1 + 3*x^-1 + x^-2*y + O(deg 6)", 0));
    const json fr = json_io::encode(factor_cocycle(cocycle, 6));
    CHECK(check_document(fr) == 4);

    const Polynomial P = parse_polynomial(Q, "x^2 - y^2 - 2*y", {});
    CHECK(check_document(json_io::encode(laurent_roots(P, 12))) == 4);

    const RationalFunction a = parse_rational_function(Q, "t"), b = parse_rational_function(Q, "t - 1");
    const json w = json_io::encode(weil_reciprocity_check(a, b));
    CHECK(w["table"]["t"] == "-1");
    CHECK(w["table"]["t - 1"] == "1");
    CHECK(w["table"]["inf"] == "-1");
    CHECK(w["product"] == "1");
    CHECK(check_document(json_io::encode(prop71_check(6))) == 1);
}

TEST_CASE("decoding rejects malformed documents")
{
    CHECK_THROWS_AS(json_io::decode_truncated_series(json{{"type", "biseries"}}), Error);
    CHECK_THROWS_AS(json_io::decode_truncated_series(json{{"type", "truncated_series"}, {"field", "fp:6"}}), Error);
    json s = json_io::encode(parse_truncated_series(Q, "t + O(t^-3)", "t", 0));
    s["terms"].push_back(json::array({-5, "1"}));
    CHECK_THROWS_AS(json_io::decode_truncated_series(s), Error);
    json bad_value = json_io::encode(parse_truncated_series(F5, "t + O(t^-3)", "t", 0));
    bad_value["terms"][0][1] = "1/5";
    CHECK_THROWS_AS(json_io::decode_truncated_series(bad_value), Error);
}
