#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <punctured/infinity.hpp>

#include "oracles.hpp"

using namespace punctured;

namespace {

const Field Q = Field::rationals();

TruncatedSeries series(std::map<int, long> c, int N, const Field &F = Q)
{
    std::map<int, FieldValue> t;
    for (auto [e, v] : c) t.emplace(e, F.from_int(v));
    return TruncatedSeries(F, "t", t, N);
}

TruncatedSeries random_series(const Field &F, std::mt19937_64 &rng, int pole, int N)
{
    std::map<int, FieldValue> t;
    for (int e = pole; e > -N; --e)
        if (rng() % 2) t.emplace(e, oracle::random_value(F, rng));
    return TruncatedSeries(F, "t", t, N);
}

Combination mono(int m) { return Combination::basis(Q, {m, 0}); }

} // namespace

TEST_CASE("phi on monomials")
{
    const auto p = phi_of_series(series({{2, 1}}, 40), 20);
    for (int m = 0; m <= 20; ++m) CHECK(p.op.apply(Index{m, 0}) == mono(m + 2));

    const auto q = phi_of_series(series({{-2, 1}}, 40), 20);
    CHECK(q.op.apply(Index{3, 0}) == mono(1));
    CHECK(q.op.apply(Index{1, 0}).is_zero());
    CHECK(q.op.apply(Index{0, 0}).is_zero());

    const auto z = phi_of_series(TruncatedSeries(Q, "t", 40), 20);
    CHECK(z.op.apply(Index{5, 0}).is_zero());
    CHECK(z.membership.certificates[0].rank == 0);
}

TEST_CASE("strict precision policy")
{
    try {
        (void)phi_of_series(series({{1, 1}, {-1, 1}}, 12), 30);
        FAIL("expected PrecisionExhausted");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
    CHECK_NOTHROW(phi_of_series(series({{1, 1}, {-1, 1}}, 12), 30, TruncationPolicy::KnownTerms));
}

TEST_CASE("commutator with R_t has rank one with a structural proof")
{
    const auto p = phi_of_series(series({{3, 2}, {-1, 1}, {-4, 5}}, 20), 15, TruncationPolicy::KnownTerms);
    const auto &cert = p.membership.certificates.at(0);
    CHECK(cert.rank == 1);
    CHECK(cert.stable);
    CHECK(cert.status == RankStatus::Proved);
    CHECK(cert.exact());
    // [phi(f), R_t](t^m) = c_{-m-1} * 1
    for (const auto &[b, img] : cert.images) {
        const int n = -b.i - 1;
        const FieldValue c = n == -1 ? Q.from_int(1) : n == -4 ? Q.from_int(5) : Q.zero();
        CHECK(img.coeff({0, 0}) == c);
    }
    const auto poly = phi_of_series(series({{2, 1}, {0, 3}}, 20), 15, TruncationPolicy::KnownTerms);
    CHECK(poly.membership.certificates[0].rank == 0);
    CHECK(poly.membership.certificates[0].status == RankStatus::Proved);
}

TEST_CASE("series read back from operators")
{
    const int W = 30;
    const auto base = phi_of_series(series({{2, 1}, {-1, 1}}, 12), W, TruncationPolicy::KnownTerms).op;
    const WindowedOperator pert("P", Q, base.source(), base.target(), [](Index b) {
        Combination c(Q);
        if (b.i == 0) c.add({5, 0}, Q.one());
        return c;
    }, W, 5);
    const auto back = series_of_operator(calkin_class(base + pert), 12);
    CHECK(back.series == series({{2, 1}, {-1, 1}}, 12));
    CHECK(back.round_trip.rank == 1);

    Polynomial t(Q, {"t"});
    t.add_term({1, 0}, Q.one());
    const auto lt = series_of_operator(calkin_class(multiplication_operator(t, 30)), 12);
    CHECK(lt.series == series({{1, 1}}, 12));
}

TEST_CASE("probe rows must agree")
{
    const int W = 30;
    // Not in the commutant: t^m -> t^(2m) has unbounded growth, so use a row-dependent scalar.
    const WindowedOperator bad("D", Q, BasisScheme::monomials1d(), BasisScheme::monomials1d(), [](Index b) {
        return Combination::basis(Q, b).scaled(Q.from_int(b.i + 1));
    }, W, 0);
    try {
        (void)series_of_operator(calkin_class(bad), 10);
        FAIL("expected NotStabilized");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotStabilized);
    }
}

TEST_CASE("round trip on random series")
{
    std::mt19937_64 rng(41);
    for (const Field &F : {Q, Field::prime(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_series(F, rng, static_cast<int>(rng() % 6), 12);
            const auto cls = phi_of_series(f, 30, TruncationPolicy::KnownTerms);
            CHECK(series_of_operator(cls, 12).series == f);
        }
    }
}

TEST_CASE("homomorphism modulo finite rank")
{
    const auto r1 = verify_homomorphism(series({{-1, 1}}, 20), series({{-1, 1}}, 20), 20);
    CHECK(r1.verdict.kind == CalkinVerdictKind::EquivalentWithRank);
    CHECK(r1.verdict.rank <= 1);
    const auto r2 = verify_homomorphism(series({{2, 1}}, 20), series({{3, 1}}, 20), 20);
    CHECK(r2.verdict.rank == 0);
    const auto r3 = verify_homomorphism(series({{0, 1}}, 20), series({{4, 2}, {-3, 1}}, 20), 20);
    CHECK(r3.verdict.rank == 0);
    // A pole of order zero in g does not force a zero defect.
    const auto r4 = verify_homomorphism(series({{1, 1}}, 20), series({{-1, 1}}, 20), 20);
    CHECK(r4.verdict.rank == 1);
    CHECK(r4.defect_bound == 1);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int pf = 1 + static_cast<int>(rng() % 5), pg = 1 + static_cast<int>(rng() % 5);
        auto f = random_series(Q, rng, pf, 12), g = random_series(Q, rng, pg, 12);
        const auto r = verify_homomorphism(f, g, 30);
        CHECK(r.verdict.kind == CalkinVerdictKind::EquivalentWithRank);
        CHECK(r.verdict.rank <= r.defect_bound);
        CHECK(r.verdict.rank <= std::max(f.pole_order(), 1) * std::max(g.pole_order(), 1));
        CHECK(r.verdict.certificate.stable);
    }
}

TEST_CASE("additivity of phi")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_series(Q, rng, 3, 12), g = random_series(Q, rng, 4, 12);
        const auto sum = phi_of_series(f, 25, TruncationPolicy::KnownTerms).op + phi_of_series(g, 25, TruncationPolicy::KnownTerms).op;
        const auto v = calkin_equal(sum, phi_of_series(f + g, 25, TruncationPolicy::KnownTerms).op, 25);
        CHECK(v.rank == 0);
    }
}

TEST_CASE("residue pairing at infinity")
{
    Polynomial one(Q, {"t"});
    one.add_term({0, 0}, Q.one());
    CHECK(residue_pairing_at_infinity(series({{-1, 1}}, 10), one) == Q.from_int(-1));
    CHECK(residue_pairing_at_infinity(TruncatedSeries(Q, "t", 10), one).is_zero());

    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        std::map<int, FieldValue> t;
        Polynomial p(Q, {"t"});
        for (int e = 0; e <= 4; ++e) {
            t.emplace(e, oracle::random_value(Q, rng));
            p.add_term({e, 0}, oracle::random_value(Q, rng));
        }
        CHECK(residue_pairing_at_infinity(TruncatedSeries(Q, "t", t, 10), p).is_zero());
    }
    // t^-3 * t^2 dt has residue -1 at infinity.
    Polynomial t2(Q, {"t"});
    t2.add_term({2, 0}, Q.one());
    CHECK(residue_pairing_at_infinity(series({{-3, 1}}, 10), t2) == Q.from_int(-1));
    CHECK_THROWS(residue_pairing_at_infinity(series({{-3, 1}}, 2), t2));
}

TEST_CASE("two-chart wrapper")
{
    std::map<int, FieldValue> a{{-2, Q.from_int(3)}, {1, Q.from_int(1)}, {0, Q.from_int(-1)}};
    const auto [inf, zero] = two_chart_expansions(Q, a, 12);
    CHECK(inf.coeff(-2) == Q.from_int(3));
    CHECK(zero.coeff(2) == Q.from_int(3));
    CHECK(zero.variable() == "s");
    const auto cls = two_chart_phi(inf, zero, 30, TruncationPolicy::KnownTerms);
    const auto [bi, bz] = two_chart_series(cls, 12);
    CHECK(bi == inf);
    CHECK(bz == zero);
}
