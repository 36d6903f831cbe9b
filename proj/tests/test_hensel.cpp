#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <punctured/almost.hpp>
#include <punctured/hensel.hpp>

#include "oracles.hpp"

using namespace punctured;

namespace {

const Field Q = Field::rationals();

Polynomial poly(const Field &F, std::map<std::pair<int, int>, long> t)
{
    Polynomial p(F, {"x", "y"});
    for (auto [e, c] : t) p.add_term({e.first, e.second}, F.from_int(c));
    return p;
}

std::vector<oracle::SparseLaurent> coefficient_maps(const Polynomial &P)
{
    std::vector<oracle::SparseLaurent> out;
    for (const auto &c : P.coefficients_in(0)) {
        oracle::SparseLaurent m;
        for (int k = 0; k <= c.degree(); ++k)
            if (!c.coeff(k).is_zero()) m.emplace(k, c.coeff(k));
        out.push_back(m);
    }
    return out;
}

void check_root(const Polynomial &P, const LaurentRoot &r, int N)
{
    CHECK(r.residual.terms().empty());
    if (!r.exact) CHECK(r.residual.precision() >= N);
    const TruncatedSeries again = evaluate_at(P, r.h);
    CHECK(again.terms().empty());
    // Newton measure doubles until the truncation cap.
    for (std::size_t k = 1; k < r.residual_valuations.size(); ++k)
        CHECK(r.residual_valuations[k] >= std::min(2 * r.residual_valuations[k - 1], r.valuation_cap));
    if (r.exact) return;
    // Independent coefficient-by-coefficient root.
    const int terms = r.h.precision() + r.leading_exponent;
    const auto ref = oracle::root_by_coefficients(coefficient_maps(P), r.leading_coefficient, r.leading_exponent, terms);
    for (int e = r.leading_exponent; e > -r.h.precision(); --e) {
        const auto it = ref.find(e);
        CHECK(r.h.coeff(e) == (it == ref.end() ? P.field().zero() : it->second));
    }
}

const std::vector<std::pair<Polynomial, Field>> &test_set()
{
    static const std::vector<std::pair<Polynomial, Field>> s = {
        {poly(Q, {{{2, 0}, 1}, {{0, 2}, -1}, {{0, 1}, -2}}), Q},
        {poly(Field::prime(19), {{{3, 0}, 1}, {{1, 2}, -3}, {{0, 3}, -1}, {{0, 1}, -1}}), Field::prime(19)},
        {poly(Q, {{{3, 0}, 1}, {{1, 2}, -1}, {{0, 1}, -1}}), Q},
    };
    return s;
}

} // namespace

TEST_CASE("roots of x^2 - y^2 - 2y")
{
    const Polynomial P = test_set()[0].first;
    const RootReport rep = laurent_roots(P, 20);
    REQUIRE(rep.roots.size() == 2);
    CHECK(rep.unresolved.empty());
    // y * sqrt(1 + 2/y) by the binomial series.
    mpq_class binom = 1;
    for (const auto &r : rep.roots) check_root(P, r, 20);
    const LaurentRoot &plus = rep.roots[0].leading_coefficient.is_one() ? rep.roots[0] : rep.roots[1];
    for (int k = 0; k < 15; ++k) {
        if (k > 0) binom *= mpq_class(mpq_class(1, 2) - (k - 1)) / k;
        mpq_class c = binom;
        for (int i = 0; i < k; ++i) c *= 2;
        CHECK(plus.h.coeff(1 - k) == Q.from_rational(c));
    }
    CHECK(plus.h.coeff(0) == Q.one());
    CHECK(plus.h.coeff(-1) == Q.from_rational(mpq_class(-1, 2)));
}

TEST_CASE("test set")
{
    const std::vector<std::size_t> expected = {2, 3, 3};
    for (std::size_t i = 0; i < test_set().size(); ++i) {
        const auto &[P, F] = test_set()[i];
        const RootReport rep = laurent_roots(P, 20);
        CHECK(rep.roots.size() == expected[i]);
        for (const auto &r : rep.roots) check_root(P, r, 20);
        // Distinct roots differ before the precision.
        for (std::size_t a = 0; a < rep.roots.size(); ++a)
            for (std::size_t b = a + 1; b < rep.roots.size(); ++b) CHECK_FALSE(rep.roots[a].h.agrees_with(rep.roots[b].h));
        CHECK(static_cast<int>(rep.roots.size()) <= P.degree(0));
    }
    // Over Q the cubic's leading coefficients are irrational: reported, not raised.
    const RootReport q = laurent_roots(poly(Q, {{{3, 0}, 1}, {{1, 2}, -3}, {{0, 3}, -1}, {{0, 1}, -1}}), 20);
    CHECK(q.roots.empty());
    REQUIRE(q.unresolved.size() == 1);
    CHECK(q.unresolved[0].count == 3);
}

TEST_CASE("linear, zero and wild cases")
{
    const RootReport lin = laurent_roots(poly(Q, {{{1, 0}, 1}, {{0, 3}, -1}}), 20);
    REQUIRE(lin.roots.size() == 1);
    CHECK(lin.roots[0].exact);
    CHECK(lin.roots[0].h.to_string() == "y^3");

    const RootReport z = laurent_roots(poly(Q, {{{2, 0}, 1}, {{1, 1}, -1}}), 10);
    CHECK(z.roots.size() == 2);

    try {
        (void)laurent_roots(poly(Q, {{{2, 0}, 1}, {{0, 1}, -1}}), 10);
        FAIL("expected WildBranch");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::WildBranch);
    }
    try {
        (void)laurent_roots(poly(Q, {{{2, 0}, 1}, {{1, 1}, -2}, {{0, 2}, 1}, {{0, 0}, -1}}), 10);
        FAIL("expected WildBranch");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::WildBranch);
    }
    try {
        (void)laurent_roots(poly(Q, {{{2, 1}, 1}, {{0, 0}, 1}}), 10);
        FAIL("expected NotMonic");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotMonic);
    }
}

TEST_CASE("witnesses")
{
    const Polynomial P = test_set()[0].first;
    const RootReport rep = laurent_roots(P, 30);
    const auto w = algebraicity_witness(rep.roots[0].h, 2, 2);
    REQUIRE(w);
    CHECK(w->P == P);

    const auto r = algebraicity_witness(TruncatedSeries::monomial(Q.one(), "y", -1, 20), 1, 1);
    REQUIRE(r);
    CHECK(r->P == poly(Q, {{{1, 1}, 1}, {{0, 0}, -1}}));

    std::map<int, FieldValue> lac;
    for (int n = 1; (1 << n) < 70; ++n) lac.emplace(-(1 << n), Q.one());
    CHECK_FALSE(algebraicity_witness(TruncatedSeries(Q, "y", lac, 70), 6, 6));

    try {
        (void)algebraicity_witness(TruncatedSeries(Q, "y", {{-2, Q.one()}, {-4, Q.one()}, {-8, Q.one()}, {-16, Q.one()}}, 20), 6, 6);
        FAIL("expected PrecisionExhausted");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::PrecisionExhausted);
    }
}

TEST_CASE("roots then witness recover a divisor")
{
    for (const auto &[P, F] : test_set()) {
        const RootReport rep = laurent_roots(P, 40);
        for (const auto &root : rep.roots) {
            const auto w = algebraicity_witness(root.h, P.degree(0), P.degree(1));
            REQUIRE(w);
            CHECK(evaluate_at(w->P, root.h).terms().empty());
            CHECK(exact_quotient(P, w->P).has_value());
        }
    }
    CHECK_FALSE(exact_quotient(poly(Q, {{{2, 0}, 1}, {{0, 0}, 1}}), poly(Q, {{{1, 0}, 1}, {{0, 0}, 1}})));
    const auto q = exact_quotient(poly(Q, {{{2, 0}, 1}, {{0, 2}, -1}}), poly(Q, {{{1, 0}, 1}, {{0, 1}, -1}}));
    REQUIRE(q);
    CHECK(*q == poly(Q, {{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("non-monic input and the substitution pipeline")
{
    const Polynomial P = poly(Q, {{{2, 1}, 1}, {{1, 1}, -1}, {{0, 0}, -1}}); // y x^2 - y x - 1
    const RootReport rep = laurent_roots_any(P, 20);
    REQUIRE(rep.roots.size() == 2);
    for (const auto &root : rep.roots) {
        CHECK(root.residual.terms().empty());
        CHECK(root.residual.precision() >= 20);
        CHECK(char_phi_h(root.h, P).terms().empty());
        const Th84Report t = th84_pipeline(root.h, 2, 1);
        REQUIRE(t.witness);
        CHECK(t.witness->P == P);
        CHECK(t.vanishes);
    }
}
