#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <punctured/linalg.hpp>
#include <punctured/rank.hpp>

#include "oracles.hpp"

using namespace punctured;

namespace {

const Field Q = Field::rationals();

Polynomial poly1(const std::map<int, long> &c, const Field &F = Q)
{
    Polynomial p(F, {"t"});
    for (auto [e, v] : c) p.add_term({e, 0}, F.from_int(v));
    return p;
}

// A random operator on 1D monomials with growth <= 2 whose images have
// bounded support, defined on the given window.
WindowedOperator random_operator(const Field &F, std::mt19937_64 &rng, int window, int density)
{
    std::map<Index, Combination> table;
    for (int m = 0; m <= window; ++m) {
        Combination c(F);
        for (int k = 0; k <= m + 2; ++k)
            if (static_cast<int>(rng() % 10) < density) c.add({k, 0}, oracle::random_value(F, rng, 3));
        table.emplace(Index{m, 0}, c);
    }
    return WindowedOperator::from_table("A", F, BasisScheme::monomials1d(), BasisScheme::monomials1d(), table, window, 2);
}

WindowedOperator rank_one_perturbation(const Field &F, int window)
{
    return WindowedOperator("P", F, BasisScheme::monomials1d(), BasisScheme::monomials1d(), [F](Index b) {
        Combination c(F);
        if (b.i == 0) c.add({5, 0}, F.one());
        return c;
    }, window, 5);
}

} // namespace

TEST_CASE("applying multiplication operators")
{
    const auto Rt = multiplication_operator(poly1({{1, 1}}), 20);
    CHECK(Rt.apply(Index{3, 0}) == Combination::basis(Q, {4, 0}));
    Polynomial x(Q, {"x", "y"});
    x.add_term({1, 0}, Q.one());
    const auto Lx = multiplication_operator(x, 14);
    CHECK(Lx.apply(Index{2, 1}) == Combination::basis(Q, {3, 1}));
    const auto Z = WindowedOperator::zero(Q, BasisScheme::monomials1d(), BasisScheme::monomials1d(), 10);
    CHECK(Z.apply(Index{7, 0}).is_zero());
    try {
        (void)Rt.apply(Index{21, 0});
        FAIL("expected WindowExceeded");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::WindowExceeded);
    }
}

TEST_CASE("left and right multiplications commute")
{
    Polynomial x(Q, {"x", "y"}), y(Q, {"x", "y"});
    x.add_term({1, 0}, Q.one());
    y.add_term({0, 1}, Q.one());
    const auto c = commutator(multiplication_operator(x, 14), multiplication_operator(y, 14));
    CHECK(c.window() == 13);
    CHECK(c.growth() == 2);
    const auto cert = rank_on_window(c);
    CHECK(cert.rank == 0);
    CHECK(cert.stable);
}

TEST_CASE("basic ranks")
{
    CHECK(rank_on_window(WindowedOperator::identity(Q, BasisScheme::monomials1d(), 10)).rank == 11);
    const auto z = rank_on_window(WindowedOperator::zero(Q, BasisScheme::monomials1d(), BasisScheme::monomials1d(), 10));
    CHECK(z.rank == 0);
    CHECK(z.status == RankStatus::Proved);
    CHECK(rank_on_window(WindowedOperator::identity(Q, BasisScheme::grid(), 4)).rank == 15);
}

TEST_CASE("Calkin equality verdicts")
{
    const auto Lt = multiplication_operator(poly1({{1, 1}}), 20);
    const auto v1 = calkin_equal(Lt, Lt + rank_one_perturbation(Q, 20), 12);
    CHECK(v1.kind == CalkinVerdictKind::EquivalentWithRank);
    CHECK(v1.rank == 1);

    const auto v2 = calkin_equal(Lt, multiplication_operator(poly1({{2, 1}}), 20), 12);
    CHECK(v2.kind == CalkinVerdictKind::Inconclusive);
    CHECK(v2.rank == 13);

    const auto v3 = calkin_equal(Lt, Lt, 12);
    CHECK(v3.kind == CalkinVerdictKind::EquivalentWithRank);
    CHECK(v3.rank == 0);
}

TEST_CASE("membership through generators")
{
    Polynomial x(Q, {"x", "y"}), y(Q, {"x", "y"});
    x.add_term({1, 0}, Q.one());
    y.add_term({0, 1}, Q.one());
    const auto Lx = multiplication_operator(x, 14);
    const auto rep = h0_membership(Lx, {multiplication_operator(x, 14), multiplication_operator(y, 14)}, 12);
    CHECK(rep.member);
    REQUIRE(rep.certificates.size() == 2);
    CHECK(rep.certificates[0].rank == 0);
    CHECK(rep.certificates[1].rank == 0);

    const int W = 20;
    const auto flip = WindowedOperator("flip", Q, BasisScheme::monomials1d(), BasisScheme::monomials1d(), [W](Index b) {
        return Combination::basis(Q, {W - b.i, 0});
    }, W, W);
    const auto rep2 = h0_membership(flip, {multiplication_operator(poly1({{1, 1}}), 40)}, 19);
    CHECK_FALSE(rep2.member);
    CHECK(rep2.certificates[0].status == RankStatus::Growing);
}

TEST_CASE("composition tightens windows")
{
    const auto A = multiplication_operator(poly1({{3, 1}}), 10);
    const auto B = multiplication_operator(poly1({{2, 1}}), 12);
    const auto AB = compose(A, B);
    CHECK(AB.window() == 8);
    CHECK(AB.growth() == 5);
    const auto small = multiplication_operator(poly1({{1, 1}}), 2);
    CHECK_THROWS_AS(compose(small, multiplication_operator(poly1({{5, 1}}), 10)), Error);
}

TEST_CASE("Leibniz identity for commutators on windows")
{
    std::mt19937_64 rng(31);
    for (const Field &F : {Q, Field::prime(5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto A = random_operator(F, rng, 24, 3);
            const auto B = random_operator(F, rng, 24, 3);
            const auto C = random_operator(F, rng, 24, 3);
            const auto lhs = commutator(A, compose(B, C));
            const auto rhs = compose(commutator(A, B), C) + compose(B, commutator(A, C));
            const int W = std::min(lhs.window(), rhs.window());
            REQUIRE(W >= 10);
            CHECK(rank_on_window(lhs - rhs, W).rank == 0);
        }
    }
}

TEST_CASE("rank inequalities and window monotonicity")
{
    std::mt19937_64 rng(32);
    for (const Field &F : {Q, Field::prime(3)}) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto A = random_operator(F, rng, 14, 2);
            const auto B = random_operator(F, rng, 14, 2);
            const int W = 10;
            const int ra = rank_on_window(A, W).rank, rb = rank_on_window(B, W).rank;
            CHECK(rank_on_window(A + B, W).rank <= ra + rb);
            const auto AB = compose(A, B);
            const int rab = rank_on_window(AB, W).rank;
            CHECK(rab <= rb);
            CHECK(rab <= rank_on_window(A, W + 2).rank);
            int prev = 0;
            for (int w = 0; w <= 14; ++w) {
                const int r = rank_on_window(A, w).rank;
                CHECK(r >= prev);
                prev = r;
            }
        }
    }
}

TEST_CASE("incremental elimination matches minor expansion")
{
    std::mt19937_64 rng(33);
    for (const Field &F : {Q, Field::prime(2), Field::prime(7), Field::extension(2, {1, 1, 1})}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto A = random_operator(F, rng, static_cast<int>(rng() % 6), static_cast<int>(1 + rng() % 6));
            const auto cert = rank_on_window(A);
            CHECK(recheck_rank(cert) == cert.rank);
            std::map<Index, std::size_t> col;
            for (const auto &[b, img] : cert.images)
                for (const auto &[t, c] : img.terms()) col.try_emplace(t, col.size());
            if (col.empty() || col.size() > 8) continue;
            DenseMatrix m;
            for (const auto &[b, img] : cert.images) {
                std::vector<FieldValue> row(col.size(), F.zero());
                for (const auto &[t, c] : img.terms()) row[col.at(t)] = c;
                m.push_back(row);
            }
            CHECK(oracle::rank_by_minors(m) == cert.rank);
        }
    }
}

TEST_CASE("dense kernel")
{
    DenseMatrix m = {{Q.from_int(1), Q.from_int(2), Q.from_int(3)}, {Q.from_int(2), Q.from_int(4), Q.from_int(6)}};
    const auto k = kernel(m, 3);
    CHECK(k.size() == 2);
    for (const auto &v : k) {
        for (const auto &row : m) {
            FieldValue acc = Q.zero();
            for (std::size_t i = 0; i < 3; ++i) acc += row[i] * v[i];
            CHECK(acc.is_zero());
        }
    }
    CHECK(rank(m) == 1);
}
