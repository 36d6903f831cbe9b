#include <punctured/hensel.hpp>

#include <algorithm>
#include <numeric>

#include <punctured/linalg.hpp>
#include <punctured/upoly.hpp>

namespace punctured {

namespace {

constexpr int exact = LaurentSeries::exact_precision;

int upoly_degree_or_min(const UPoly &a) { return a.is_zero() ? std::numeric_limits<int>::min() / 4 : a.degree(); }

std::vector<TruncatedSeries> exact_coefficients(const std::vector<UPoly> &a, const std::string &var)
{
    std::vector<TruncatedSeries> out;
    for (const auto &c : a) out.push_back(TruncatedSeries::from_upoly(c, var, exact));
    return out;
}

TruncatedSeries horner(const std::vector<TruncatedSeries> &a, const TruncatedSeries &h)
{
    TruncatedSeries acc(h.field(), h.variable(), exact);
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * h + a[i];
    return acc;
}

std::vector<TruncatedSeries> derivative(const std::vector<TruncatedSeries> &a)
{
    std::vector<TruncatedSeries> d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i].scaled(a[i].field().from_int(static_cast<long>(i))));
    return d;
}

// Known terms of h above -N, as an exact Laurent polynomial.
TruncatedSeries exact_part(const TruncatedSeries &h, int N)
{
    std::map<int, FieldValue> t;
    for (const auto &[e, c] : h.terms())
        if (e > -N) t.emplace(e, c);
    return TruncatedSeries(h.field(), h.variable(), t, exact);
}

TruncatedSeries with_precision(const TruncatedSeries &h, int N)
{
    std::map<int, FieldValue> t;
    for (const auto &[e, c] : h.terms())
        if (e > -N) t.emplace(e, c);
    return TruncatedSeries(h.field(), h.variable(), t, N);
}

int valuation_of(const TruncatedSeries &s) { return -s.degree(); }

std::string slope_string(long num, long den)
{
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) num = -num, den = -den;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

struct Segment {
    long num = 0, den = 1; // slope m = num / den
    int lo = 0, hi = 0;    // x-degrees at the ends
    int D = 0;             // max_i (deg a_i + i m), integer slopes only
};

// Upper hull of the points (i, deg a_i), walked from the top x-degree down.
std::vector<Segment> newton_segments(const std::vector<UPoly> &a, int lowest)
{
    std::vector<Segment> out;
    int i = static_cast<int>(a.size()) - 1;
    while (i > lowest) {
        // Next vertex: the j < i maximizing the slope (deg a_j - deg a_i) / (i - j),
        // taking the smallest j on ties so the segment is maximal.
        int best = -1;
        long bn = 0, bd = 1;
        for (int j = i - 1; j >= lowest; --j) {
            if (a[static_cast<std::size_t>(j)].is_zero()) continue;
            const long n = a[static_cast<std::size_t>(j)].degree() - a[static_cast<std::size_t>(i)].degree(), d = i - j;
            if (best < 0 || n * bd >= bn * d) best = j, bn = n, bd = d;
        }
        Segment s{bn, bd, best, i, 0};
        if (bn % bd == 0) s.D = upoly_degree_or_min(a[static_cast<std::size_t>(i)]) + i * static_cast<int>(bn / bd);
        out.push_back(s);
        i = best;
    }
    return out;
}

LaurentRoot refine(const std::vector<TruncatedSeries> &a, const std::vector<TruncatedSeries> &da, const std::string &var, const FieldValue &c,
                   int m, int D, int N)
{
    const Field &F = c.field();
    LaurentRoot root;
    root.leading_exponent = m;
    root.leading_coefficient = c;
    TruncatedSeries h = TruncatedSeries::monomial(c, var, m, exact);
    int Nh = N + std::max(D - m, 0) + 1;
    for (;;) {
        root.valuation_cap = Nh + m;
        // Newton until the correction no longer touches exponents above -Nh.
        for (;;) {
            const TruncatedSeries r = horner(a, h);
            if (r.is_zero()) {
                root.exact = true;
                root.h = h;
                root.residual = r;
                return root;
            }
            root.residual_valuations.push_back(valuation_of(r) + D);
            const TruncatedSeries d = horner(da, h);
            const int W = Nh + 2 * (std::abs(D) + std::abs(m) + d.pole_order() + 2);
            const TruncatedSeries delta = r.truncated(W) * d.truncated(W).inverse();
            if (delta.precision() < Nh) throw Error(ErrorKind::PrecisionExhausted, "Newton correction lost precision");
            if (delta.degree() <= -Nh) break;
            h = exact_part(h - delta, Nh);
        }
        const TruncatedSeries hN = with_precision(h, Nh);
        const TruncatedSeries res = horner(a, hN);
        if (res.precision() >= N && res.terms().empty()) {
            root.h = hN;
            root.residual = res;
            return root;
        }
        if (!res.terms().empty() && res.degree() > -N) {
            throw Error(ErrorKind::PrecisionExhausted, "Newton iteration did not converge for leading term " + c.to_string() + "*" + var + "^" +
                                                           std::to_string(m) + " over " + F.descriptor());
        }
        Nh += std::max(N - res.precision(), 1);
        // The next pass starts by re-evaluating the same h.
        root.residual_valuations.pop_back();
    }
}

} // namespace

TruncatedSeries evaluate_at(const Polynomial &P, const TruncatedSeries &h)
{
    if (P.nvars() != 2) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in two variables");
    if (P.variables()[1] != h.variable()) {
        throw Error(ErrorKind::VariableMismatch, "second variable " + P.variables()[1] + " does not match " + h.variable());
    }
    return horner(exact_coefficients(P.coefficients_in(0), h.variable()), h);
}

RootReport laurent_roots(const Polynomial &P, int N)
{
    if (P.nvars() != 2) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in x and y");
    std::vector<UPoly> a = P.coefficients_in(0);
    if (a.empty() || a.size() == 1) throw Error(ErrorKind::InvalidArgument, "P has no positive x-degree");
    const UPoly &lead = a.back();
    if (lead.degree() != 0) throw Error(ErrorKind::NotMonic, "leading coefficient in x is " + lead.to_string(P.variables()[1]));
    const FieldValue inv = lead.lead().inverse();
    for (auto &c : a) c = c.scaled(inv);

    const Field &F = P.field();
    const std::string &var = P.variables()[1];
    const std::vector<TruncatedSeries> as = exact_coefficients(a, var), das = derivative(as);

    RootReport rep;
    int lowest = 0;
    while (a[static_cast<std::size_t>(lowest)].is_zero()) ++lowest;
    if (lowest == 1) {
        LaurentRoot z;
        z.h = TruncatedSeries(F, var, exact);
        z.residual = z.h;
        z.leading_coefficient = F.zero();
        z.exact = true;
        rep.roots.push_back(z);
    } else if (lowest > 1) {
        rep.unresolved.push_back({"-inf", lowest, "root 0 of multiplicity " + std::to_string(lowest)});
    }

    int wild = 0, other = 0;
    for (const Segment &s : newton_segments(a, lowest)) {
        const int len = s.hi - s.lo;
        if (s.num % s.den != 0) {
            rep.unresolved.push_back({slope_string(s.num, s.den), len, "fractional exponent"});
            wild += len;
            continue;
        }
        const int m = static_cast<int>(s.num / s.den);
        // chi(c) = sum over the segment of lc(a_i) c^(i - lo)
        std::vector<FieldValue> chi(static_cast<std::size_t>(len + 1), F.zero());
        for (int i = s.lo; i <= s.hi; ++i) {
            const UPoly &ai = a[static_cast<std::size_t>(i)];
            if (!ai.is_zero() && ai.degree() + i * m == s.D) chi[static_cast<std::size_t>(i - s.lo)] = ai.lead();
        }
        int found = 0;
        for (const auto &[c, mult] : roots(UPoly(F, chi))) {
            found += mult;
            if (mult > 1) {
                rep.unresolved.push_back({std::to_string(m), mult, "leading coefficient " + c.to_string() + " is a multiple root"});
                wild += mult;
                continue;
            }
            rep.roots.push_back(refine(as, das, var, c, m, s.D, N));
        }
        if (found < len) {
            rep.unresolved.push_back({std::to_string(m), len - found, "leading coefficient not in " + F.descriptor()});
            other += len - found;
        }
    }
    if (rep.roots.empty() && wild > 0 && other == 0) {
        throw Error(ErrorKind::WildBranch, "no integer-exponent root with simple reduction (" + std::to_string(wild) + " branch" +
                                               (wild == 1 ? "" : "es") + " fractional or inseparable)");
    }
    return rep;
}

RootReport laurent_roots_any(const Polynomial &P, int N)
{
    std::vector<UPoly> a = P.coefficients_in(0);
    if (a.size() < 2) throw Error(ErrorKind::InvalidArgument, "P has no positive x-degree");
    const UPoly lead = a.back();
    if (lead.degree() == 0) return laurent_roots(P, N);
    // a^(n-1) P(X/a) = X^n + sum_{i<n} a_i a^(n-1-i) X^i
    const std::size_t n = a.size() - 1;
    std::vector<UPoly> b(n + 1, UPoly(P.field()));
    b[n] = UPoly::constant(P.field().one());
    UPoly power = UPoly::constant(P.field().one());
    for (std::size_t k = 1; k <= n; ++k) {
        b[n - k] = a[n - k] * power;
        power *= lead;
    }
    const Polynomial monic = from_coefficients_in_x(P.field(), b, P.variables());
    const std::string &var = P.variables()[1];
    const int shift = lead.degree();
    RootReport rep = laurent_roots(monic, N + shift);
    const TruncatedSeries inv = TruncatedSeries::from_upoly(lead, var, N + 3 * shift + 4).inverse();
    for (auto &r : rep.roots) {
        r.h = r.exact && r.h.is_zero() ? r.h : r.h * inv;
        if (!r.exact || !r.h.is_zero()) r.h = r.h.truncated(std::min(r.h.precision(), N + shift));
        r.exact = false;
        r.residual = evaluate_at(P, r.h);
        r.leading_exponent -= shift;
        r.leading_coefficient = r.leading_coefficient * lead.lead().inverse();
    }
    return rep;
}

std::optional<Polynomial> exact_quotient(const Polynomial &P, const Polynomial &S)
{
    if (S.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    std::vector<UPoly> r = P.coefficients_in(0);
    const std::vector<UPoly> s = S.coefficients_in(0);
    const int ds = static_cast<int>(s.size()) - 1;
    if (static_cast<int>(r.size()) - 1 < ds) return P.is_zero() ? std::optional<Polynomial>(P) : std::nullopt;
    std::vector<UPoly> q(r.size() - static_cast<std::size_t>(ds), UPoly(P.field()));
    for (int k = static_cast<int>(r.size()) - 1; k >= ds; --k) {
        if (r[static_cast<std::size_t>(k)].is_zero()) continue;
        const auto [qk, rem] = r[static_cast<std::size_t>(k)].divmod(s.back());
        if (!rem.is_zero()) return std::nullopt;
        q[static_cast<std::size_t>(k - ds)] = qk;
        for (int j = 0; j <= ds; ++j) r[static_cast<std::size_t>(k - ds + j)] -= qk * s[static_cast<std::size_t>(j)];
    }
    for (const auto &c : r)
        if (!c.is_zero()) return std::nullopt;
    return from_coefficients_in_x(P.field(), q, P.variables());
}

namespace {

Polynomial normalize_witness(const Polynomial &P)
{
    const Field &F = P.field();
    std::vector<UPoly> a = P.coefficients_in(0);
    UPoly content(F);
    for (const auto &c : a) content = gcd(content, c);
    if (content.degree() > 0)
        for (auto &c : a) c = c.divmod(content).first;
    Polynomial out = from_coefficients_in_x(F, a, P.variables());
    // Leading term: highest x-degree, then highest y-degree.
    const FieldValue lc = a.back().lead();
    out = out.scaled(lc.inverse());
    if (F.is_rational()) {
        mpz_class den = 1;
        for (const auto &[e, c] : out.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
        out = out.scaled(F.from_mpz(den));
        mpz_class g = 0;
        for (const auto &[e, c] : out.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rational().get_num_mpz_t());
        if (g > 1) out = out.scaled(F.from_rational(mpq_class(1, 1) / mpq_class(g)));
    }
    return out;
}

} // namespace

std::optional<Witness> algebraicity_witness(const TruncatedSeries &h, int dx, int dy)
{
    if (dx < 1 || dy < 0) throw Error(ErrorKind::InvalidArgument, "need dx >= 1 and dy >= 0");
    const int need = (dx + 1) * (dy + 1) + dx * h.pole_order() + 5;
    if (h.precision() < need) {
        throw Error(ErrorKind::PrecisionExhausted, "witness search at (" + std::to_string(dx) + ", " + std::to_string(dy) + ") needs precision " +
                                                       std::to_string(need) + ", have " + std::to_string(h.precision()));
    }
    const Field &F = h.field();
    const std::string &var = h.variable();
    // Columns: y^b h^a for a <= dx, b <= dy.
    std::vector<TruncatedSeries> hp{TruncatedSeries::monomial(F.one(), var, 0, exact)};
    for (int a = 1; a <= dx; ++a) hp.push_back(hp.back() * h);

    for (int ax = 1; ax <= dx; ++ax) {
        std::vector<std::pair<int, int>> cols;
        std::vector<TruncatedSeries> colv;
        int prec = exact, top = std::numeric_limits<int>::min();
        for (int a = 0; a <= ax; ++a) {
            for (int b = 0; b <= dy; ++b) {
                cols.emplace_back(a, b);
                colv.push_back(hp[static_cast<std::size_t>(a)].shifted(b));
                prec = std::min(prec, colv.back().precision());
                if (!colv.back().is_zero()) top = std::max(top, colv.back().degree());
            }
        }
        if (top == std::numeric_limits<int>::min()) continue;
        // Rows: exponents top .. -prec + 1.
        DenseMatrix m;
        for (int e = top; e > -prec; --e) {
            std::vector<FieldValue> row;
            for (const auto &c : colv) row.push_back(c.coeff(e));
            m.push_back(std::move(row));
        }
        const int ncols = static_cast<int>(cols.size());
        const std::vector<std::vector<FieldValue>> ker = kernel(m, ncols);
        if (ker.empty()) continue;

        std::vector<Polynomial> cands;
        for (const auto &v : ker) {
            Polynomial p(F, {"x", var});
            for (int k = 0; k < ncols; ++k)
                if (!v[static_cast<std::size_t>(k)].is_zero())
                    p.add_term({cols[static_cast<std::size_t>(k)].first, cols[static_cast<std::size_t>(k)].second}, v[static_cast<std::size_t>(k)]);
            cands.push_back(normalize_witness(p));
        }
        std::sort(cands.begin(), cands.end(), [](const Polynomial &p, const Polynomial &q) {
            if (p.degree(0) != q.degree(0)) return p.degree(0) < q.degree(0);
            if (p.terms().size() != q.terms().size()) return p.terms().size() < q.terms().size();
            return p.to_string() < q.to_string();
        });
        return Witness{cands.front(), h.precision(), static_cast<int>(m.size())};
    }
    return std::nullopt;
}

Th84Report th84_pipeline(const TruncatedSeries &h, int dx, int dy)
{
    Th84Report r;
    r.h = h;
    r.witness = algebraicity_witness(h, dx, dy);
    if (r.witness) {
        r.residual = evaluate_at(r.witness->P, h);
        r.vanishes = r.residual.terms().empty();
    }
    return r;
}

} // namespace punctured
