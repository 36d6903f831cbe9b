#pragma once

// Independent reference computations used by tests and by `punctured suite`.
// These deliberately avoid the library's own algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include <punctured/field.hpp>

namespace punctured::oracle {

// Product / sum over the Frobenius conjugates a, a^p, ..., a^{p^{d-1}}.
FieldValue norm_by_conjugates(const FieldValue &a);
FieldValue trace_by_conjugates(const FieldValue &a);

// Rank by searching for the largest nonvanishing minor, with determinants
// by cofactor expansion. Exponential; intended for matrices up to ~8x8.
int rank_by_minors(const std::vector<std::vector<FieldValue>> &m);

// Uniformly random field element; for Q, a small-height rational.
FieldValue random_value(const Field &F, std::mt19937_64 &rng, int height = 9);
FieldValue random_nonzero(const Field &F, std::mt19937_64 &rng, int height = 9);

} // namespace punctured::oracle

#include <map>

namespace punctured::oracle {

using SparseLaurent = std::map<int, FieldValue>;

// Root c*y^m + b_1 y^(m-1) + ... of sum_i a_i(y) x^i, one coefficient at a
// time: b_k is the unique value killing the coefficient of y^(D-k) in P(h),
// found by evaluating at b_k = 0 and b_k = 1. Plain dense arithmetic only.
SparseLaurent root_by_coefficients(const std::vector<SparseLaurent> &a, const FieldValue &c, int m, int terms);

} // namespace punctured::oracle
