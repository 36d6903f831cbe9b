#pragma once

// Roots of P(x, y), monic in x, in k((y^-1)), and algebraicity witnesses for
// series h in k((y^-1)).

#include <optional>
#include <string>
#include <vector>

#include <punctured/polynomial.hpp>
#include <punctured/series.hpp>

namespace punctured {

struct LaurentRoot {
    TruncatedSeries h;
    int leading_exponent = 0;
    FieldValue leading_coefficient;
    // P(h) at the returned precision: known to at least the requested order, all zero.
    TruncatedSeries residual;
    // Normalized residual valuations per Newton step (see laurent_roots).
    std::vector<int> residual_valuations;
    // The cap beyond which truncation of h, not Newton, limits the residual.
    int valuation_cap = 0;
    bool exact = false;
};

struct UnresolvedBranch {
    std::string slope; // leading exponent, "p/q" when fractional
    int count = 0;     // roots on this branch, with multiplicity
    std::string reason;
};

struct RootReport {
    std::vector<LaurentRoot> roots;
    std::vector<UnresolvedBranch> unresolved;
};

// Integer-exponent roots with simple reduction, each with P(h) = 0 mod y^-N.
// A leading term c y^m comes from a Newton polygon segment: m makes
// max_i (deg_y a_i + i m) =: D attained twice, and c is a simple nonzero root
// of sum over that segment of lc(a_i) c^i. Newton steps are measured by
// v(P(h)) + D, which at least doubles each step until the cap.
// Throws NotMonic if the x-leading coefficient is not a nonzero constant, and
// WildBranch if every branch is fractional or has inseparable reduction.
RootReport laurent_roots(const Polynomial &P, int N);

// Same, for a(y) x^n + ... with a(y) not constant: the roots of the monic
// a^(n-1) P(X / a, y) in X, divided by a.
RootReport laurent_roots_any(const Polynomial &P, int N);

// P(h, y) by Horner in x, with tracked precision.
TruncatedSeries evaluate_at(const Polynomial &P, const TruncatedSeries &h);

struct Witness {
    Polynomial P;
    int precision = 0; // the series precision the witness was certified at
    int equations = 0; // vanishing coefficients checked
};

// Smallest x-degree first, then fewest terms, then lexicographic; the result
// is primitive over k[y] and normalized to leading coefficient 1 (over Q: a
// primitive integer polynomial with positive leading coefficient).
std::optional<Witness> algebraicity_witness(const TruncatedSeries &h, int dx, int dy);

// Q with P = Q * S, or nothing if S is not in k[x, y].
std::optional<Polynomial> exact_quotient(const Polynomial &P, const Polynomial &S);

struct Th84Report {
    TruncatedSeries h;
    std::optional<Witness> witness;
    TruncatedSeries residual; // P(h, y)
    bool vanishes = false;
};

// Witness search followed by the substitution check P(h, y) = 0.
Th84Report th84_pipeline(const TruncatedSeries &h, int dx, int dy);

} // namespace punctured
