#pragma once

// Randomized property suites behind `punctured suite`, and the samplers they
// draw from. Runs are deterministic in the seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <punctured/adeles.hpp>
#include <punctured/chart.hpp>
#include <punctured/polynomial.hpp>
#include <punctured/series.hpp>

namespace punctured {

namespace sample {

using Rng = std::mt19937_64;

// Over Q a rational with numerator and denominator of size <= height.
FieldValue value(const Field &F, Rng &rng, int height = 9);
FieldValue nonzero(const Field &F, Rng &rng, int height = 9);
// Exponents pole down to -(N - 1); the pole coefficient is nonzero when `exact_pole`.
TruncatedSeries truncated_series(const Field &F, Rng &rng, int pole, int N, const std::string &var = "t", bool exact_pole = false);
// 1 + sum lambda_ij x^-i y^-j over i, j >= 1, i + j <= degree.
BiSeries g_element(const Field &F, Rng &rng, int degree, int N);
// h = sum_{j=1}^{degree} mu_j y^-j.
TruncatedSeries h_series(const Field &F, Rng &rng, int degree, int N);
LaurentPoly laurent_poly(const Field &F, Rng &rng, int lo, int hi);
ChartUnit cocycle(const Field &F, Rng &rng, int N);
// G1 or G2 unit with scalar 1.
ChartUnit chart_unit(Chart chart, const Field &F, Rng &rng, int N);
UPoly upoly(const Field &F, Rng &rng, int max_degree);
// Over Q: a product of t - a with small integers a.
UPoly split_upoly(const Field &F, Rng &rng, int max_degree);
// Nonzero with nonzero derivative; over Q numerator and denominator split.
RationalFunction rational_function(const Field &F, Rng &rng, int max_degree = 4);

} // namespace sample

// The fixed separable Hensel test set with the field each is read over.
struct HenselCase {
    std::string name;
    Polynomial P;
};
std::vector<HenselCase> hensel_test_set();

struct Check {
    std::string id;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<Check> checks;
    int passed() const;
    bool ok() const { return passed() == static_cast<int>(checks.size()); }
};

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    int order = 12;  // picard
    int window = 0;  // 0 selects each suite's default
};

std::vector<std::string> suite_names(); // calkin, almost, picard, hensel, adeles
// `name` is one of suite_names(); "all" is handled by the caller.
SuiteReport run_suite(const std::string &name, const SuiteOptions &options);

} // namespace punctured
