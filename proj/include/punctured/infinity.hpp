#pragma once

// The k[t] <-> k((t^-1)) correspondence: phi(f) acts on k[t] by
// t^m -> sum_n c_n T_n(t^m), with T_n(t^m) = t^(m+n) for m >= max(-n, 0) and
// 0 for 0 <= m <= -n-1.

#include <optional>
#include <string>
#include <utility>

#include <punctured/rank.hpp>
#include <punctured/series.hpp>

namespace punctured {

struct CalkinClass1D {
    WindowedOperator op;
    // Certificate for [op, R_t], the single generator of k[t].
    MembershipReport membership;
};

enum class TruncationPolicy {
    // Precision must reach window + pole order, so every coefficient the
    // window touches is known.
    Strict,
    // Act by the Laurent polynomial of known terms. The class is then that of
    // f up to its precision only.
    KnownTerms,
};

CalkinClass1D phi_of_series(const TruncatedSeries &f, int window, TruncationPolicy policy = TruncationPolicy::Strict);

// Right multiplication by t on k[t] (degree 1 growth).
WindowedOperator right_multiplication_t(const Field &field, int window, const std::string &var = "t");

struct SeriesReadback {
    TruncatedSeries series;
    int probe_first = 0, probe_last = 0;
    // Band-limited comparison of psi with phi(series): both restricted to
    // output degrees > m - N on row m.
    CalkinVerdict round_trip;
};

// NotStabilized when probe rows disagree or the round trip is not finite rank.
SeriesReadback series_of_operator(const CalkinClass1D &psi, int N);
// Wraps an arbitrary operator, computing its membership certificate first.
CalkinClass1D calkin_class(const WindowedOperator &op);

struct HomomorphismReport {
    TruncatedSeries product; // exact product of the two known-term truncations
    CalkinVerdict verdict;
    // Structural bound: the defect lands in span{t^0, ..., t^(pole(f)-1)}.
    int defect_bound = 0;
};

HomomorphismReport verify_homomorphism(const TruncatedSeries &f, const TruncatedSeries &g, int window);

// res_inf(f * p(t) dt) = -(coefficient of t^-1 in f * p).
FieldValue residue_pairing_at_infinity(const TruncatedSeries &f, const Polynomial &p);

// k[t, t^-1] -> k((t)) x k((t^-1)); the chart at zero is handled as a series
// at infinity in s = t^-1.
struct TwoChartClass {
    CalkinClass1D at_infinity;
    CalkinClass1D at_zero;
};
// Expansions of a Laurent polynomial (exponent -> coefficient) in both charts.
std::pair<TruncatedSeries, TruncatedSeries> two_chart_expansions(const Field &field, const std::map<int, FieldValue> &a, int N,
                                                                  const std::string &var = "t", const std::string &inv_var = "s");
TwoChartClass two_chart_phi(const TruncatedSeries &at_infinity, const TruncatedSeries &at_zero, int window,
                            TruncationPolicy policy = TruncationPolicy::Strict);
std::pair<TruncatedSeries, TruncatedSeries> two_chart_series(const TwoChartClass &c, int N);

} // namespace punctured
