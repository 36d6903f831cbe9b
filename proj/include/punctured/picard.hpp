#pragma once

// Factorization of G12 cocycles into G1 x G2 x (Z x G), by successive
// approximation along the filtration F^n G12 = 1 + x^-n (...).
//
// At level n, gr^n G12 is k[s, 1/s] with s = x/y, and the three subgroups
// contribute the s-exponent ranges
//   G1: e <= 0,   G: 1 <= e <= n - 1,   G2: e >= n.

#include <string>
#include <vector>

#include <punctured/chart.hpp>

namespace punctured {

enum class GradedPart { G1, G, G2 };
std::string graded_part_name(GradedPart p);
// Which subgroup owns s^e in gr^n G12, n >= 1.
GradedPart graded_part(int n, int e);

struct FactorizationResult {
    int n = 0;
    BiSeries g;
    ChartUnit u1; // in G1, constant term 1
    ChartUnit u2; // in G2, constant term 1
    ChartUnit residual;
    FieldValue scalar_normalization;
    // Filtration level of the residual entering round k (>= k), then the final one (>= N).
    std::vector<int> residual_levels;
};

// Post-condition, to order N:
//   scalar * embed(u1) * (x/y)^n * embed(g) = c * embed(u2)
FactorizationResult factor_cocycle(const ChartUnit &c, int N);

// The left-hand side divided by the right-hand side of the post-condition.
ChartUnit factorization_defect(const ChartUnit &c, const FactorizationResult &r);

struct PicElement {
    int n = 0;
    BiSeries g;
    bool operator==(const PicElement &b) const { return n == b.n && g == b.g; }
};

PicElement pic_identity(const Field &F, int N);
PicElement pic_mul(const PicElement &a, const PicElement &b);
PicElement pic_inv(const PicElement &a);
std::string to_string(const PicElement &a);

struct GradedRanges {
    int n = 0;
    // Observed s-exponents of embedded basis monomials within [-bound, bound].
    std::vector<int> g1, g, g2;
    bool disjoint = false, spanning = false, matches_rule = false;
};

struct PartitionReport {
    int bound = 0;
    bool degree_zero_ok = false; // gr^0: k^x x Z
    std::vector<GradedRanges> levels;
    bool passed = false;
};

PartitionReport verify_partition_of_graded(int N, const Field &F = Field::rationals());

} // namespace punctured
