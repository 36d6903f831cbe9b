#include <punctured/suites.hpp>

#include <functional>

#include <punctured/almost.hpp>
#include <punctured/hensel.hpp>
#include <punctured/infinity.hpp>
#include <punctured/parse.hpp>
#include <punctured/picard.hpp>

namespace punctured {

namespace sample {

FieldValue value(const Field &F, Rng &rng, int height)
{
    if (F.is_rational()) {
        const long h = height;
        const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h;
        const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(h));
        return F.from_rational(mpq_class(num, den));
    }
    std::vector<std::uint64_t> c;
    for (int i = 0; i < F.degree(); ++i) c.push_back(rng() % F.characteristic());
    return F.from_coefficients(c);
}

FieldValue nonzero(const Field &F, Rng &rng, int height)
{
    for (;;) {
        FieldValue a = value(F, rng, height);
        if (!a.is_zero()) return a;
    }
}

TruncatedSeries truncated_series(const Field &F, Rng &rng, int pole, int N, const std::string &var, bool exact_pole)
{
    std::map<int, FieldValue> t;
    for (int e = pole; e > -N; --e) {
        if (e == pole && exact_pole) t.emplace(e, nonzero(F, rng));
        else if (rng() % 3) t.emplace(e, value(F, rng));
    }
    return TruncatedSeries(F, var, t, N);
}

BiSeries g_element(const Field &F, Rng &rng, int degree, int N)
{
    std::map<std::pair<int, int>, FieldValue> t{{{0, 0}, F.one()}};
    for (int i = 1; i < degree; ++i)
        for (int j = 1; i + j <= degree && i + j < N; ++j)
            if (rng() % 3 == 0) t.emplace(std::pair{i, j}, value(F, rng));
    return BiSeries(F, {"x", "y"}, t, N);
}

TruncatedSeries h_series(const Field &F, Rng &rng, int degree, int N)
{
    std::map<int, FieldValue> t;
    for (int j = 1; j <= degree && j < N; ++j) t.emplace(-j, nonzero(F, rng));
    return TruncatedSeries(F, "y", t, N);
}

LaurentPoly laurent_poly(const Field &F, Rng &rng, int lo, int hi)
{
    LaurentPoly p(F);
    for (int e = lo; e <= hi; ++e)
        if (rng() % 3 == 0) p.add_term(e, value(F, rng));
    return p;
}

ChartUnit cocycle(const Field &F, Rng &rng, int N)
{
    std::vector<LaurentPoly> tail;
    for (int k = 1; k < N; ++k) tail.push_back(laurent_poly(F, rng, -4, k + 4));
    const int n = static_cast<int>(rng() % 7) - 3;
    return ChartUnit::from_parts(Chart::G12, nonzero(F, rng), n, tail, N);
}

ChartUnit chart_unit(Chart chart, const Field &F, Rng &rng, int N)
{
    std::vector<LaurentPoly> tail;
    for (int k = 1; k < N; ++k) tail.push_back(laurent_poly(F, rng, 0, 5));
    return ChartUnit::from_parts(chart, F.one(), 0, tail, N);
}

UPoly upoly(const Field &F, Rng &rng, int max_degree)
{
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<FieldValue> c;
    for (int i = 0; i < d; ++i) c.push_back(value(F, rng, 4));
    c.push_back(nonzero(F, rng, 4));
    return UPoly(F, c);
}

UPoly split_upoly(const Field &F, Rng &rng, int max_degree)
{
    UPoly p = UPoly::constant(F.one());
    const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    for (int i = 0; i < d; ++i) p *= UPoly::linear(F.from_int(static_cast<long>(rng() % 7) - 3));
    return p;
}

RationalFunction rational_function(const Field &F, Rng &rng, int max_degree)
{
    for (;;) {
        const UPoly num = F.is_rational() ? split_upoly(F, rng, max_degree).scaled(nonzero(F, rng)) : upoly(F, rng, max_degree);
        const UPoly den = F.is_rational() ? split_upoly(F, rng, max_degree) : upoly(F, rng, max_degree);
        RationalFunction f(num, den);
        if (!f.is_zero() && !f.derivative().is_zero()) return f;
    }
}

} // namespace sample

std::vector<HenselCase> hensel_test_set()
{
    const Field Q = Field::rationals();
    return {
        {"x^2 - y^2 - 2*y", parse_polynomial(Q, "x^2 - y^2 - 2*y", {"x", "y"})},
        {"x^3 - 3*x*y^2 - y^3 - y over fp:19", parse_polynomial(Field::prime(19), "x^3 - 3*x*y^2 - y^3 - y", {"x", "y"})},
        {"x^3 - x*y^2 - y", parse_polynomial(Q, "x^3 - x*y^2 - y", {"x", "y"})},
    };
}

int SuiteReport::passed() const
{
    int n = 0;
    for (const auto &c : checks) n += c.passed;
    return n;
}

namespace {

using Body = std::function<bool(std::string &)>;

void run_check(std::vector<Check> &out, std::string id, const Body &body)
{
    Check c{std::move(id), false, {}};
    try {
        c.passed = body(c.detail);
    } catch (const Error &e) {
        c.detail = e.what();
    }
    out.push_back(std::move(c));
}

std::string num(int k) { return (k < 10 ? "0" : "") + std::to_string(k); }

Field field_cycle(int k, const std::vector<Field> &fields) { return fields[static_cast<std::size_t>(k) % fields.size()]; }

WindowedOperator random_operator(const Field &F, sample::Rng &rng, int W)
{
    std::map<Index, Combination> table;
    for (int m = 0; m <= W; ++m) {
        Combination c(F);
        for (int d = 0; d <= m + 1; ++d)
            if (rng() % 4 == 0) c.add({d, 0}, sample::value(F, rng));
        table.emplace(Index{m, 0}, c);
    }
    const auto s = BasisScheme::monomials1d();
    return WindowedOperator::from_table("A", F, s, s, table, W, 1);
}

std::vector<Check> calkin_suite(sample::Rng &rng)
{
    std::vector<Check> out;
    const Field Q = Field::rationals(), F5 = Field::prime(5);
    for (int k = 0; k < 25; ++k) {
        const Field F = field_cycle(k, {Q, F5});
        const TruncatedSeries f = sample::truncated_series(F, rng, static_cast<int>(rng() % 6), 12);
        run_check(out, "roundtrip." + num(k), [&](std::string &detail) {
            const CalkinClass1D cls = phi_of_series(f, 30, TruncationPolicy::KnownTerms);
            const SeriesReadback back = series_of_operator(cls, 12);
            bool negative = false;
            for (const auto &[e, c] : f.terms()) negative = negative || e < 0;
            const RankCertificate &cert = cls.membership.certificates.at(0);
            detail = f.to_string();
            return back.series == f && cert.rank == (negative ? 1 : 0) && cert.status == RankStatus::Proved;
        });
    }
    for (int k = 0; k < 15; ++k) {
        const Field F = field_cycle(k, {Q, F5});
        const int pf = 1 + static_cast<int>(rng() % 5), pg = 1 + static_cast<int>(rng() % 5);
        const TruncatedSeries f = sample::truncated_series(F, rng, pf, 12, "t", true);
        const TruncatedSeries g = sample::truncated_series(F, rng, pg, 12, "t", true);
        run_check(out, "homomorphism." + num(k), [&](std::string &detail) {
            const HomomorphismReport r = verify_homomorphism(f, g, 30);
            detail = "rank " + std::to_string(r.verdict.rank);
            return r.verdict.kind == CalkinVerdictKind::EquivalentWithRank && r.verdict.rank <= pf * pg && r.verdict.certificate.stable;
        });
    }
    for (int k = 0; k < 10; ++k) {
        const Field F = field_cycle(k, {Q, F5});
        const WindowedOperator a = random_operator(F, rng, 6), b = random_operator(F, rng, 6);
        run_check(out, "rank.inequalities." + num(k), [&](std::string &detail) {
            const int ra = rank_on_window(a, 5).rank, rb = rank_on_window(b, 5).rank;
            const int rsum = rank_on_window(a + b, 5).rank;
            const int rprod = rank_on_window(compose(a, b), 5).rank;
            const int ra6 = rank_on_window(a, 6).rank;
            detail = std::to_string(ra) + " " + std::to_string(rb) + " " + std::to_string(rsum) + " " + std::to_string(rprod);
            return rsum <= ra + rb && rprod <= std::min(ra6, rb);
        });
    }
    for (int k = 0; k < 10; ++k) {
        const Field F = field_cycle(k, {Q, F5});
        const WindowedOperator a = random_operator(F, rng, 8);
        run_check(out, "rank.monotone." + num(k), [&](std::string &) {
            int last = 0;
            for (int W = 0; W <= 8; ++W) {
                const int r = rank_on_window(a, W).rank;
                if (r < last) return false;
                last = r;
            }
            return true;
        });
    }
    return out;
}

std::vector<Check> almost_suite(sample::Rng &rng, int window)
{
    std::vector<Check> out;
    const Field Q = Field::rationals(), F5 = Field::prime(5);
    const int W = window > 0 ? window : 8;
    for (int k = 0; k < 20; ++k) {
        const Field F = field_cycle(k, {Q, F5});
        const BiSeries g = sample::g_element(F, rng, 10, W + 3);
        run_check(out, "mg.commutator." + num(k), [&](std::string &) {
            const AlmostModulePresentation p = build_M_g(g, W);
            const WindowedOperator c = commutator(p.generator("x"), p.generator("y"));
            bool any = false;
            for (Index b : BasisScheme::grid().up_to(c.window())) {
                const FieldValue lam = g.coeff(b.i + 1, b.j + 1);
                if (!(c.apply(b) == Combination::basis(F, {0, 0}).scaled(-lam))) return false;
                any = any || !lam.is_zero();
            }
            const RankCertificate &cert = p.relations.at(0).certificate;
            return cert.rank <= 1 && cert.status == RankStatus::Proved && (cert.rank == 0) == !any;
        });
    }
    for (int k = 0; k < 10; ++k) {
        const Field F = field_cycle(k, {Q, F5});
        const TruncatedSeries h = sample::truncated_series(F, rng, static_cast<int>(rng() % 5) - 2, W + 4, "y");
        run_check(out, "nh.commutator." + num(k), [&](std::string &) {
            const AlmostModulePresentation p = build_N_h(h, W);
            const WindowedOperator c = commutator(p.generator("x"), p.generator("y"));
            for (int i = 0; i <= c.window(); ++i)
                if (!(c.apply(Index{i, 0}) == Combination::basis(F, {0, 0}).scaled(h.coeff(-i - 1)))) return false;
            const RankCertificate &cert = p.relations.at(0).certificate;
            return cert.rank <= 1 && cert.status == RankStatus::Proved;
        });
    }
    const int ses_window = window > 0 ? window : 10;
    const std::vector<std::pair<std::string, TruncatedSeries>> hs = {
        {"0", TruncatedSeries(Q, "y", {}, 40)},
        {"y^-1", parse_truncated_series(Q, "y^-1", "y", 40)},
        {"y^-1 + y^-3", parse_truncated_series(Q, "y^-1 + y^-3", "y", 40)},
        {"random", sample::h_series(Q, rng, 6, 40)},
    };
    for (const auto &[name, h] : hs) {
        run_check(out, "ses." + name, [&, h = h](std::string &detail) {
            const SesReport r = verify_ses(h, ses_window);
            detail = h.to_string();
            return r.passed;
        });
    }
    const TruncatedSeries h = parse_truncated_series(Q, "y^2 + 3 - 2*y^-1 + O(y^-15)", "y", 0);
    const auto random_poly = [&](int deg) {
        Polynomial p(Q, {"x", "y"});
        for (int a = 0; a <= deg; ++a)
            for (int b = 0; a + b <= deg; ++b)
                if (rng() % 2) p.add_term({a, b}, sample::value(Q, rng));
        return p;
    };
    for (int k = 0; k < 6; ++k) {
        const Polynomial f1 = random_poly(3), f2 = random_poly(3);
        run_check(out, "char_phi.multiplicative." + num(k), [&](std::string &) {
            return char_phi_h(h, f1 * f2).agrees_with(char_phi_h(h, f1) * char_phi_h(h, f2));
        });
    }
    return out;
}

std::vector<Check> picard_suite(sample::Rng &rng, int N)
{
    std::vector<Check> out;
    const Field Q = Field::rationals();
    const PartitionReport part = verify_partition_of_graded(N, Q);
    run_check(out, "partition.degree0", [&](std::string &) { return part.degree_zero_ok; });
    for (const auto &l : part.levels)
        run_check(out, "partition.level." + num(l.n), [&](std::string &) { return l.disjoint && l.spanning && l.matches_rule; });

    const std::vector<Field> fields = {Q, Field::prime(5), Field::prime(2), Field::extension(3, {1, 0, 1})};
    for (int k = 0; k < 20; ++k) {
        const Field F = field_cycle(k, fields);
        const ChartUnit c = sample::cocycle(F, rng, N);
        run_check(out, "soundness." + num(k), [&](std::string &detail) {
            const FactorizationResult r = factor_cocycle(c, N);
            const ChartUnit unit = ChartUnit::one(Chart::G12, F, N);
            detail = F.descriptor();
            return factorization_defect(c, r).agrees_with(unit) && r.g.in_G() && r.u1.scalar().is_one() && r.u2.scalar().is_one() &&
                   r.n == c.exponent();
        });
    }
    for (int k = 0; k < 10; ++k) {
        const Field F = field_cycle(k, fields);
        const ChartUnit c = sample::cocycle(F, rng, N);
        const ChartUnit u1 = sample::chart_unit(Chart::G1, F, rng, N), u2 = sample::chart_unit(Chart::G2, F, rng, N);
        run_check(out, "uniqueness." + num(k), [&](std::string &) {
            const FactorizationResult r = factor_cocycle(c, N);
            const FactorizationResult moved = factor_cocycle(c * chart_embed(u1) * chart_embed(u2), N);
            return moved.n == r.n && moved.g.agrees_with(r.g);
        });
    }
    for (int k = 0; k < 5; ++k) {
        const Field F = field_cycle(k, fields);
        const ChartUnit c = sample::cocycle(F, rng, N), d = sample::cocycle(F, rng, N);
        run_check(out, "group_law." + num(k), [&](std::string &) {
            const FactorizationResult rc = factor_cocycle(c, N), rd = factor_cocycle(d, N), rcd = factor_cocycle(c * d, N);
            return rcd.n == rc.n + rd.n && rcd.g.agrees_with(rc.g * rd.g);
        });
    }
    return out;
}

std::vector<Check> hensel_suite()
{
    std::vector<Check> out;
    const int N = 20;
    const std::vector<std::size_t> expected = {2, 3, 3};
    const auto set = hensel_test_set();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto &[name, P] = set[i];
        RootReport rep;
        run_check(out, "roots.count[" + name + "]", [&](std::string &detail) {
            rep = laurent_roots(P, N);
            detail = std::to_string(rep.roots.size()) + " roots";
            return rep.roots.size() == expected[i];
        });
        for (std::size_t k = 0; k < rep.roots.size(); ++k) {
            const LaurentRoot &r = rep.roots[k];
            const std::string tag = "[" + name + "]." + std::to_string(k);
            run_check(out, "roots.vanish" + tag, [&](std::string &detail) {
                const TruncatedSeries v = evaluate_at(P, r.h);
                detail = v.to_string();
                return v.terms().empty() && (r.exact || v.precision() >= N);
            });
            run_check(out, "roots.doubling" + tag, [&](std::string &) {
                for (std::size_t j = 1; j < r.residual_valuations.size(); ++j)
                    if (r.residual_valuations[j] < std::min(2 * r.residual_valuations[j - 1], r.valuation_cap)) return false;
                return true;
            });
        }
        run_check(out, "witness[" + name + "]", [&](std::string &detail) {
            const int dx = P.degree(0), dy = P.degree(1);
            const RootReport deep = laurent_roots(P, 40);
            for (const LaurentRoot &r : deep.roots) {
                const auto w = algebraicity_witness(r.h, dx, dy);
                if (!w) {
                    detail = "no witness for " + r.h.to_string();
                    return false;
                }
                if (!evaluate_at(w->P, r.h).terms().empty()) return false;
            }
            return !deep.roots.empty();
        });
    }
    run_check(out, "lacunary", [](std::string &) {
        const Field Q = Field::rationals();
        std::map<int, FieldValue> lac;
        for (int n = 1; (1 << n) < 70; ++n) lac.emplace(-(1 << n), Q.one());
        return !algebraicity_witness(TruncatedSeries(Q, "y", lac, 70), 6, 6).has_value();
    });
    return out;
}

std::vector<Check> adeles_suite(sample::Rng &rng)
{
    std::vector<Check> out;
    const Field Q = Field::rationals(), F5 = Field::prime(5);
    for (int k = 0; k < 25; ++k) {
        const RationalFunction f = sample::rational_function(F5, rng), g = sample::rational_function(F5, rng);
        run_check(out, "residue.fp5." + num(k), [&](std::string &detail) {
            const ResidueReport r = residue_theorem_check(f, g);
            detail = r.sum.to_string();
            return r.passed;
        });
    }
    for (int k = 0; k < 15; ++k) {
        const RationalFunction f = sample::rational_function(Q, rng), g = sample::rational_function(Q, rng);
        run_check(out, "residue.q." + num(k), [&](std::string &detail) {
            const ResidueReport r = residue_theorem_check(f, g);
            detail = r.sum.to_string();
            return r.passed;
        });
    }
    for (int k = 0; k < 30; ++k) {
        const RationalFunction f = sample::rational_function(F5, rng), g = sample::rational_function(F5, rng);
        run_check(out, "weil.fp5." + num(k), [&](std::string &detail) {
            const WeilReport r = weil_reciprocity_check(f, g);
            detail = r.product.to_string();
            return r.passed;
        });
    }
    for (int k = 0; k < 10; ++k) {
        const RationalFunction f = sample::rational_function(F5, rng), g = sample::rational_function(F5, rng);
        run_check(out, "ord.valuation." + num(k), [&](std::string &) {
            int degree_sum = 0;
            for (const Place &p : support_places({f, g})) {
                if (ord(f * g, p) != ord(f, p) + ord(g, p)) return false;
                degree_sum += p.degree() * ord(f, p);
            }
            return degree_sum == 0;
        });
    }
    return out;
}

} // namespace

std::vector<std::string> suite_names() { return {"calkin", "almost", "picard", "hensel", "adeles"}; }

SuiteReport run_suite(const std::string &name, const SuiteOptions &options)
{
    SuiteReport report{name, options.seed, {}};
    sample::Rng rng(options.seed);
    if (name == "calkin") report.checks = calkin_suite(rng);
    else if (name == "almost") report.checks = almost_suite(rng, options.window);
    else if (name == "picard") report.checks = picard_suite(rng, options.order);
    else if (name == "hensel") report.checks = hensel_suite();
    else if (name == "adeles") report.checks = adeles_suite(rng);
    else throw Error(ErrorKind::InvalidArgument, "unknown suite " + name + " (expected calkin, almost, picard, hensel, adeles or all)");
    return report;
}

} // namespace punctured
