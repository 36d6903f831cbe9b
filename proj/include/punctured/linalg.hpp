#pragma once

// Exact linear algebra: an incremental sparse row-echelon builder (used for
// windowed ranks) and dense rank / kernel helpers.

#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include <punctured/field.hpp>

namespace punctured {

using SparseRow = std::map<int, FieldValue>; // column -> nonzero value
using DenseMatrix = std::vector<std::vector<FieldValue>>;

// Rows are inserted one at a time; each is reduced against the pivots found
// so far. Over Q the elimination is fraction-free on primitive integer rows;
// over finite fields pivots are normalised to 1.
class IncrementalEchelon
{
public:
    explicit IncrementalEchelon(Field field);
    ~IncrementalEchelon();
    IncrementalEchelon(IncrementalEchelon &&) noexcept;
    IncrementalEchelon &operator=(IncrementalEchelon &&) noexcept;

    // True when the row was independent of the previous ones.
    bool insert(const SparseRow &row);
    int rank() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

int rank(const DenseMatrix &m);
// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(DenseMatrix &m);
// Basis of {v : m v = 0}, one vector per free column (free entry 1).
std::vector<std::vector<FieldValue>> kernel(const DenseMatrix &m, int cols);

} // namespace punctured
