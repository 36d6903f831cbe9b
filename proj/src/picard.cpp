#include <punctured/picard.hpp>

#include <algorithm>
#include <set>

namespace punctured {

std::string graded_part_name(GradedPart p)
{
    switch (p) {
    case GradedPart::G1: return "G1";
    case GradedPart::G: return "G";
    case GradedPart::G2: return "G2";
    }
    return "?";
}

GradedPart graded_part(int n, int e)
{
    if (e <= 0) return GradedPart::G1;
    if (e >= n) return GradedPart::G2;
    return GradedPart::G;
}

namespace {

// 1 + X^k p as a unit of the given chart, p given in G12's s-exponents.
ChartUnit g1_factor(const Field &F, int k, const LaurentPoly &p, int N)
{
    // X^k s^-e = X^k r^e
    LaurentPoly r(F);
    for (const auto &[e, c] : p.terms()) r.add_term(-e, c);
    std::vector<LaurentPoly> tail(static_cast<std::size_t>(k), LaurentPoly(F));
    tail.back() = r;
    return ChartUnit::from_parts(Chart::G1, F.one(), 0, tail, N);
}

ChartUnit g2_factor(const Field &F, int k, const LaurentPoly &p, int N)
{
    // X^k s^(k+e) = Y^k q^e
    LaurentPoly q(F);
    for (const auto &[e, c] : p.terms()) q.add_term(e - k, c);
    std::vector<LaurentPoly> tail(static_cast<std::size_t>(k), LaurentPoly(F));
    tail.back() = q;
    return ChartUnit::from_parts(Chart::G2, F.one(), 0, tail, N);
}

BiSeries g_factor(const Field &F, int k, const LaurentPoly &p, int N)
{
    // X^(i+j) s^j = x^-i y^-j
    std::map<std::pair<int, int>, FieldValue> t{{{0, 0}, F.one()}};
    for (const auto &[e, c] : p.terms()) t.emplace(std::pair{k - e, e}, c);
    return BiSeries(F, {"x", "y"}, t, N);
}

ChartUnit lhs_of(const FactorizationResult &r, int N)
{
    return ChartUnit(chart_embed(r.u1).series() * chart_embed(r.n, r.g).series() *
                     ChartSeries::constant(Chart::G12, r.scalar_normalization, N));
}

int residual_level(const ChartUnit &r)
{
    for (int k = 1; k < r.order(); ++k)
        if (!r.normalized_term(k).is_zero()) return k;
    return r.order();
}

} // namespace

ChartUnit factorization_defect(const ChartUnit &c, const FactorizationResult &r)
{
    const int N = c.order();
    return lhs_of(r, N) * (c * chart_embed(r.u2)).inverse();
}

FactorizationResult factor_cocycle(const ChartUnit &c, int N)
{
    if (c.chart() != Chart::G12) throw Error(ErrorKind::MalformedCocycle, "cocycles live in G12, got " + chart_name(c.chart()));
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "filtration order must be positive");
    if (c.order() < N) {
        throw Error(ErrorKind::PrecisionExhausted, "cocycle known to O(deg " + std::to_string(c.order()) + "), order " + std::to_string(N) + " requested");
    }
    const ChartUnit cN = c.truncated(N);
    const Field &F = c.field();

    FactorizationResult r;
    r.n = cN.exponent();
    r.scalar_normalization = cN.scalar();
    r.g = BiSeries::one(F, N);
    r.u1 = ChartUnit::one(Chart::G1, F, N);
    r.u2 = ChartUnit::one(Chart::G2, F, N);

    for (int k = 1; k < N; ++k) {
        // rho = c * u2 / (scalar * u1 * s^n * g), congruent to 1 mod F^k.
        const ChartUnit rho = cN * chart_embed(r.u2) * lhs_of(r, N).inverse();
        const LaurentPoly a = filtration_graded_piece(rho, k);
        r.residual_levels.push_back(residual_level(rho));
        LaurentPoly a1(F), ag(F), a2(F);
        for (const auto &[e, v] : a.terms()) {
            switch (graded_part(k, e)) {
            case GradedPart::G1: a1.add_term(e, v); break;
            case GradedPart::G: ag.add_term(e, v); break;
            case GradedPart::G2: a2.add_term(e, -v); break;
            }
        }
        if (!a1.is_zero()) r.u1 = r.u1 * g1_factor(F, k, a1, N);
        if (!ag.is_zero()) r.g = r.g * g_factor(F, k, ag, N);
        if (!a2.is_zero()) r.u2 = r.u2 * g2_factor(F, k, a2, N);
    }
    r.residual = cN * chart_embed(r.u2) * lhs_of(r, N).inverse();
    r.residual_levels.push_back(residual_level(r.residual));
    return r;
}

PicElement pic_identity(const Field &F, int N) { return {0, BiSeries::one(F, N)}; }

PicElement pic_mul(const PicElement &a, const PicElement &b)
{
    if (a.g.precision() != b.g.precision()) {
        throw Error(ErrorKind::PrecisionExhausted, "operands known to O(deg " + std::to_string(a.g.precision()) + ") and O(deg " +
                                                       std::to_string(b.g.precision()) + ")");
    }
    if (!a.g.in_G() || !b.g.in_G()) throw Error(ErrorKind::NotInG, "Pic components must lie in G");
    return {a.n + b.n, a.g * b.g};
}

PicElement pic_inv(const PicElement &a)
{
    if (!a.g.in_G()) throw Error(ErrorKind::NotInG, "Pic components must lie in G");
    return {-a.n, a.g.inverse()};
}

std::string to_string(const PicElement &a) { return "(" + std::to_string(a.n) + ", " + a.g.to_string() + ")"; }

PartitionReport verify_partition_of_graded(int N, const Field &F)
{
    PartitionReport rep;
    rep.bound = 2 * N + 2;
    const int M = rep.bound, prec = N + 1;
    const auto s_exponents = [](const ChartUnit &u, int level) {
        std::vector<int> out;
        const LaurentPoly p = u.normalized_term(level);
        for (const auto &[e, c] : p.terms()) out.push_back(e);
        return out;
    };

    // gr^0: scalar * s^m is read back as (scalar, m) for every m.
    rep.degree_zero_ok = true;
    const FieldValue lam = F.from_int(F.characteristic() == 2 ? 1 : 2);
    for (int m = -N; m <= N; ++m) {
        const ChartUnit u = ChartUnit::from_parts(Chart::G12, lam, m, {}, prec);
        const LaurentPoly lead = filtration_graded_piece(u, 0);
        rep.degree_zero_ok = rep.degree_zero_ok && u.exponent() == m && u.scalar() == lam && lead == LaurentPoly::monomial(lam, m);
    }

    rep.passed = rep.degree_zero_ok;
    for (int n = 1; n <= N; ++n) {
        GradedRanges gr;
        gr.n = n;
        const LaurentPoly one_mon = LaurentPoly::monomial(F.one(), 0);
        // G1 at level n: X^n r^e, e >= 0.
        for (int e = 0; e <= M; ++e) {
            std::vector<LaurentPoly> tail(static_cast<std::size_t>(n), LaurentPoly(F));
            tail.back() = LaurentPoly::monomial(F.one(), e);
            for (int x : s_exponents(chart_embed(ChartUnit::from_parts(Chart::G1, F.one(), 0, tail, prec)), n)) gr.g1.push_back(x);
        }
        // G2 at level n: Y^n q^e, e >= 0.
        for (int e = 0; e <= M; ++e) {
            std::vector<LaurentPoly> tail(static_cast<std::size_t>(n), LaurentPoly(F));
            tail.back() = LaurentPoly::monomial(F.one(), e);
            for (int x : s_exponents(chart_embed(ChartUnit::from_parts(Chart::G2, F.one(), 0, tail, prec)), n)) gr.g2.push_back(x);
        }
        // G at level n: x^-i y^-j with i + j = n, i, j >= 1.
        for (int j = 1; j < n; ++j) {
            const BiSeries g(F, {"x", "y"}, {{{0, 0}, F.one()}, {{n - j, j}, F.one()}}, prec);
            for (int x : s_exponents(chart_embed(0, g), n)) gr.g.push_back(x);
        }
        const auto clip = [M](std::vector<int> &v) {
            v.erase(std::remove_if(v.begin(), v.end(), [M](int e) { return e < -M || e > M; }), v.end());
            std::sort(v.begin(), v.end());
        };
        clip(gr.g1);
        clip(gr.g);
        clip(gr.g2);

        std::multiset<int> all(gr.g1.begin(), gr.g1.end());
        all.insert(gr.g.begin(), gr.g.end());
        all.insert(gr.g2.begin(), gr.g2.end());
        gr.disjoint = true;
        for (int e : all) gr.disjoint = gr.disjoint && all.count(e) == 1;
        gr.spanning = true;
        for (int e = -M; e <= M; ++e) gr.spanning = gr.spanning && all.count(e) >= 1;
        gr.matches_rule = true;
        for (int e : gr.g1) gr.matches_rule = gr.matches_rule && graded_part(n, e) == GradedPart::G1;
        for (int e : gr.g) gr.matches_rule = gr.matches_rule && graded_part(n, e) == GradedPart::G;
        for (int e : gr.g2) gr.matches_rule = gr.matches_rule && graded_part(n, e) == GradedPart::G2;
        rep.passed = rep.passed && gr.disjoint && gr.spanning && gr.matches_rule;
        rep.levels.push_back(std::move(gr));
    }
    return rep;
}

} // namespace punctured
