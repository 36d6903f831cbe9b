#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace punctured::oracle {

FieldValue norm_by_conjugates(const FieldValue &a)
{
    FieldValue acc = a.field().one();
    FieldValue c = a;
    for (int i = 0; i < a.field().degree(); ++i) {
        acc *= c;
        c = c.frobenius();
    }
    return acc;
}

FieldValue trace_by_conjugates(const FieldValue &a)
{
    FieldValue acc = a.field().zero();
    FieldValue c = a;
    for (int i = 0; i < a.field().degree(); ++i) {
        acc += c;
        c = c.frobenius();
    }
    return acc;
}

namespace {

FieldValue det_cofactor(const std::vector<std::vector<FieldValue>> &m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    FieldValue acc = m[0][0].field().zero();
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<FieldValue>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<FieldValue> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(std::move(row));
        }
        FieldValue term = m[0][c] * det_cofactor(sub);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

bool next_combination(std::vector<std::size_t> &idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

int rank_by_minors(const std::vector<std::vector<FieldValue>> &m)
{
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t k = std::min(rows, cols); k >= 1; --k) {
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            do {
                std::vector<std::vector<FieldValue>> sub(k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a].push_back(m[ri[a]][ci[b]]);
                if (!det_cofactor(sub).is_zero()) return static_cast<int>(k);
            } while (next_combination(ci, cols));
        } while (next_combination(ri, rows));
    }
    return 0;
}

FieldValue random_value(const Field &F, std::mt19937_64 &rng, int height)
{
    switch (F.kind()) {
        case Field::Kind::Rational: {
            const long h = height;
            const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h;
            const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(h));
            return F.from_rational(mpq_class(num, den));
        }
        case Field::Kind::Prime: return F.from_int(static_cast<long long>(rng() % F.characteristic()));
        case Field::Kind::Extension: {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(F.degree()));
            for (auto &x : c) x = rng() % F.characteristic();
            return F.from_coefficients(std::move(c));
        }
    }
    return F.zero();
}

FieldValue random_nonzero(const Field &F, std::mt19937_64 &rng, int height)
{
    for (;;) {
        FieldValue v = random_value(F, rng, height);
        if (!v.is_zero()) return v;
    }
}

} // namespace punctured::oracle

namespace punctured::oracle {

namespace {

SparseLaurent mul_above(const SparseLaurent &a, const SparseLaurent &b, int floor)
{
    SparseLaurent out;
    for (const auto &[i, x] : a)
        for (const auto &[j, y] : b) {
            if (i + j < floor) continue;
            auto it = out.find(i + j);
            if (it == out.end()) out.emplace(i + j, x * y);
            else it->second = it->second + x * y;
        }
    return out;
}

FieldValue coefficient_of_value(const std::vector<SparseLaurent> &a, const SparseLaurent &h, int e)
{
    const Field &F = h.begin()->second.field();
    FieldValue total = F.zero();
    SparseLaurent power{{0, F.one()}};
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto &[k, x] : mul_above(a[i], power, e)) if (k == e) total = total + x;
        power = mul_above(power, h, e - 64);
    }
    return total;
}

} // namespace

SparseLaurent root_by_coefficients(const std::vector<SparseLaurent> &a, const FieldValue &c, int m, int terms)
{
    int D = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto &[k, x] : a[i]) D = std::max(D, k + static_cast<int>(i) * m);
    SparseLaurent h{{m, c}};
    for (int k = 1; k < terms; ++k) {
        const int e = D - k;
        h[m - k] = c.field().zero();
        const FieldValue v0 = coefficient_of_value(a, h, e);
        h[m - k] = c.field().one();
        const FieldValue v1 = coefficient_of_value(a, h, e);
        h[m - k] = -v0 / (v1 - v0);
    }
    for (auto it = h.begin(); it != h.end();) it = it->second.is_zero() ? h.erase(it) : std::next(it);
    return h;
}

} // namespace punctured::oracle
