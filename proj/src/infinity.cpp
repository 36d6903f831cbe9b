#include <punctured/infinity.hpp>

#include <algorithm>
#include <vector>

namespace punctured {

namespace {

// Exact Laurent polynomial made of the known terms.
TruncatedSeries known_terms(const TruncatedSeries &f)
{
    std::map<int, FieldValue> t;
    for (const auto &[e, c] : f.terms()) t.emplace(e, c);
    return TruncatedSeries(f.field(), f.variable(), t, LaurentSeries::exact_precision);
}

bool has_negative_part(const TruncatedSeries &f)
{
    for (const auto &[e, c] : f.terms())
        if (e < 0) return true;
    return false;
}

WindowedOperator phi_operator(const TruncatedSeries &f, int window)
{
    const Field F = f.field();
    const auto terms = f.terms();
    const int growth = f.is_zero() ? 0 : f.degree();
    const BasisScheme scheme = BasisScheme::monomials1d(f.variable());
    return WindowedOperator("phi(" + f.to_string() + ")", F, scheme, scheme, [F, terms](Index b) {
        Combination out(F);
        for (const auto &[n, c] : terms)
            if (b.i + n >= 0) out.add({b.i + n, 0}, c); // T_n(t^m) = 0 for 0 <= m <= -n-1
        return out;
    }, window, growth);
}

MembershipReport membership_for(const WindowedOperator &op, std::optional<ImageBound> commutator_bound)
{
    const WindowedOperator Rt = right_multiplication_t(op.field(), op.window() + std::max(op.growth(), 0) + 1, op.source().names()[0]);
    WindowedOperator c = commutator(op, Rt);
    if (commutator_bound) c = c.with_image_bound(std::move(*commutator_bound));
    MembershipReport r;
    r.generators.push_back(Rt.name());
    r.certificates.push_back(rank_on_window(c));
    const auto &cert = r.certificates.back();
    r.member = cert.stable || cert.status == RankStatus::Proved;
    return r;
}

// Keeps only output degrees > m - N on row m.
WindowedOperator band_limited(const WindowedOperator &op, int N)
{
    return WindowedOperator("band(" + op.name() + ")", op.field(), op.source(), op.target(), [op, N](Index b) {
        Combination out(op.field());
        const Combination img = op.apply(b);
        for (const auto &[t, c] : img.terms())
            if (t.i > b.i - N) out.add(t, c);
        return out;
    }, op.window(), op.growth());
}

} // namespace

WindowedOperator right_multiplication_t(const Field &field, int window, const std::string &var)
{
    const BasisScheme scheme = BasisScheme::monomials1d(var);
    return WindowedOperator("R_" + var, field, scheme, scheme, [field](Index b) { return Combination::basis(field, {b.i + 1, 0}); },
                            window, 1);
}

CalkinClass1D phi_of_series(const TruncatedSeries &f, int window, TruncationPolicy policy)
{
    if (policy == TruncationPolicy::Strict) {
        const int need = window + std::max(f.pole_order(), 1);
        if (f.precision() < need) {
            throw Error(ErrorKind::PrecisionExhausted, "phi on window " + std::to_string(window) + " needs precision " + std::to_string(need) +
                                                           ", series is known to O(" + f.variable() + "^" + std::to_string(-f.precision()) + ")");
        }
    }
    CalkinClass1D out;
    out.op = phi_operator(f, window);
    ImageBound bound;
    if (has_negative_part(f)) bound.span.push_back({0, 0});
    bound.reason = "[phi(f), R_t](t^m) = c_{-m-1} * 1";
    out.membership = membership_for(out.op, bound);
    return out;
}

CalkinClass1D calkin_class(const WindowedOperator &op)
{
    if (op.source().kind() != BasisKind::Monomials1D || !(op.source() == op.target())) {
        throw Error(ErrorKind::InvalidArgument, "expected an operator on k[t]");
    }
    return {op, membership_for(op, std::nullopt)};
}

SeriesReadback series_of_operator(const CalkinClass1D &psi, int N)
{
    const WindowedOperator &op = psi.op;
    const int W = op.window();
    const int P = std::max(op.growth(), 0);
    if (N < 1) throw Error(ErrorKind::InvalidArgument, "target precision must be positive");
    if (W < 2 * N + P) {
        throw Error(ErrorKind::PrecisionExhausted,
                    "window " + std::to_string(W) + " too small for precision " + std::to_string(N) + " (needs " + std::to_string(2 * N + P) + ")");
    }
    if (!psi.membership.member) throw Error(ErrorKind::NotStabilized, "operator is not certified to commute with R_t modulo finite rank");

    SeriesReadback out;
    out.probe_first = W - N;
    out.probe_last = W;
    std::map<int, FieldValue> coeffs;
    for (int m = out.probe_first; m <= out.probe_last; ++m) {
        const Combination img = op.apply(Index{m, 0});
        for (int n = -N + 1; n <= P; ++n) {
            const FieldValue c = img.coeff({m + n, 0});
            if (m == out.probe_first) {
                if (!c.is_zero()) coeffs.emplace(n, c);
            } else {
                auto it = coeffs.find(n);
                const FieldValue expected = it == coeffs.end() ? op.field().zero() : it->second;
                if (!(c == expected)) {
                    throw Error(ErrorKind::NotStabilized, "probe rows " + std::to_string(out.probe_first) + " and " + std::to_string(m) +
                                                              " disagree on the coefficient of t^" + std::to_string(n));
                }
            }
        }
    }
    out.series = TruncatedSeries(op.field(), op.source().names()[0], coeffs, N);

    const WindowedOperator phi = phi_operator(out.series, W);
    const WindowedOperator diff = band_limited(op, N) - phi;
    out.round_trip = calkin_verdict(rank_on_window(diff, W));
    if (out.round_trip.kind != CalkinVerdictKind::EquivalentWithRank) {
        throw Error(ErrorKind::NotStabilized, "round trip differs from phi(f) by a rank still growing at the window edge");
    }
    return out;
}

HomomorphismReport verify_homomorphism(const TruncatedSeries &f, const TruncatedSeries &g, int window)
{
    if (f.variable() != g.variable()) throw Error(ErrorKind::VariableMismatch, "series in " + f.variable() + " and " + g.variable());
    HomomorphismReport r;
    r.product = f * g;
    const TruncatedSeries fk = known_terms(f), gk = known_terms(g);
    const TruncatedSeries fg = fk * gk;
    const int dg = gk.is_zero() ? 0 : gk.degree();
    const WindowedOperator pf = phi_operator(fk, window + std::max(dg, 0));
    const WindowedOperator pg = phi_operator(gk, window);
    const WindowedOperator pfg = phi_operator(fg, window);
    r.defect_bound = fk.pole_order();
    ImageBound bound;
    for (int k = 0; k < r.defect_bound; ++k) bound.span.push_back({k, 0});
    bound.reason = "phi(f)phi(g) - phi(fg) only sees c_n d_k with n > 0 > k on rows m < -k";
    const WindowedOperator diff = (compose(pf, pg) - pfg).with_image_bound(bound);
    r.verdict = calkin_verdict(rank_on_window(diff, window));
    return r;
}

FieldValue residue_pairing_at_infinity(const TruncatedSeries &f, const Polynomial &p)
{
    if (p.nvars() != 1 || p.variables()[0] != f.variable()) {
        throw Error(ErrorKind::VariableMismatch, "form must be p(" + f.variable() + ") d" + f.variable());
    }
    const TruncatedSeries prod = f * TruncatedSeries::from_polynomial(p, LaurentSeries::exact_precision);
    return -prod.coeff(-1);
}

std::pair<TruncatedSeries, TruncatedSeries> two_chart_expansions(const Field &field, const std::map<int, FieldValue> &a, int N,
                                                                  const std::string &var, const std::string &inv_var)
{
    std::map<int, FieldValue> inf, zero;
    for (const auto &[e, c] : a) {
        if (e > -N) inf.emplace(e, c);
        if (-e > -N) zero.emplace(-e, c);
    }
    return {TruncatedSeries(field, var, inf, N), TruncatedSeries(field, inv_var, zero, N)};
}

TwoChartClass two_chart_phi(const TruncatedSeries &at_infinity, const TruncatedSeries &at_zero, int window, TruncationPolicy policy)
{
    return {phi_of_series(at_infinity, window, policy), phi_of_series(at_zero, window, policy)};
}

std::pair<TruncatedSeries, TruncatedSeries> two_chart_series(const TwoChartClass &c, int N)
{
    return {series_of_operator(c.at_infinity, N).series, series_of_operator(c.at_zero, N).series};
}

} // namespace punctured
