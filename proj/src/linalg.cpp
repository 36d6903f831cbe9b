#include <punctured/linalg.hpp>

#include <algorithm>

namespace punctured {

namespace {

using IntRow = std::map<int, mpz_class>;

void make_primitive(IntRow &r)
{
    mpz_class g = 0;
    for (const auto &[c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto &[c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

} // namespace

struct IncrementalEchelon::Impl {
    Field field;
    // Pivot column -> row whose leading (lowest) column is the pivot.
    std::map<int, IntRow> int_pivots;
    std::map<int, SparseRow> pivots;
    int rank = 0;

    bool insert_rational(const SparseRow &row)
    {
        mpz_class lcm = 1;
        for (const auto &[c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.rational().get_den_mpz_t());
        IntRow r;
        for (const auto &[c, v] : row) r.emplace(c, mpz_class(v.rational() * lcm));
        make_primitive(r);
        // Reduce in increasing column order; each step eliminates the lowest column.
        auto it = r.begin();
        while (it != r.end()) {
            auto p = int_pivots.find(it->first);
            if (p == int_pivots.end()) {
                ++it;
                continue;
            }
            const int col = it->first;
            const mpz_class a = p->second.begin()->second; // pivot entry
            const mpz_class b = it->second;
            // r <- a*r - b*p, divided through by gcd(a, b) first.
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const mpz_class sa = a / g, sb = b / g;
            for (auto &[c, v] : r) v *= sa;
            for (const auto &[c, v] : p->second) {
                auto [q, inserted] = r.try_emplace(c, 0);
                q->second -= sb * v;
            }
            for (auto e = r.begin(); e != r.end();) e = e->second == 0 ? r.erase(e) : std::next(e);
            make_primitive(r);
            // Pivot rows start at their pivot column, so nothing below col changed.
            it = r.upper_bound(col);
        }
        if (r.empty()) return false;
        if (r.begin()->second < 0)
            for (auto &[c, v] : r) v = -v;
        int_pivots.emplace(r.begin()->first, std::move(r));
        ++rank;
        return true;
    }

    bool insert_finite(const SparseRow &row)
    {
        SparseRow r;
        for (const auto &[c, v] : row)
            if (!v.is_zero()) r.emplace(c, v);
        auto it = r.begin();
        while (it != r.end()) {
            auto p = pivots.find(it->first);
            if (p == pivots.end()) {
                ++it;
                continue;
            }
            const int col = it->first;
            const FieldValue factor = it->second; // pivot rows are monic
            for (const auto &[c, v] : p->second) {
                auto [q, inserted] = r.try_emplace(c, field.zero());
                q->second -= factor * v;
            }
            for (auto e = r.begin(); e != r.end();) e = e->second.is_zero() ? r.erase(e) : std::next(e);
            it = r.upper_bound(col);
        }
        if (r.empty()) return false;
        const FieldValue inv = r.begin()->second.inverse();
        for (auto &[c, v] : r) v *= inv;
        pivots.emplace(r.begin()->first, std::move(r));
        ++rank;
        return true;
    }
};

IncrementalEchelon::IncrementalEchelon(Field field) : impl_(std::make_unique<Impl>())
{
    impl_->field = std::move(field);
}
IncrementalEchelon::~IncrementalEchelon() = default;
IncrementalEchelon::IncrementalEchelon(IncrementalEchelon &&) noexcept = default;
IncrementalEchelon &IncrementalEchelon::operator=(IncrementalEchelon &&) noexcept = default;

bool IncrementalEchelon::insert(const SparseRow &row)
{
    for (const auto &[c, v] : row)
        if (!(v.field() == impl_->field)) throw Error(ErrorKind::DescriptorMismatch, "row over a different field");
    return impl_->field.is_rational() ? impl_->insert_rational(row) : impl_->insert_finite(row);
}

int IncrementalEchelon::rank() const noexcept { return impl_->rank; }

std::vector<int> rref(DenseMatrix &m)
{
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const FieldValue inv = m[r][c].inverse();
        for (auto &x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const FieldValue f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(const DenseMatrix &m)
{
    if (m.empty()) return 0;
    IncrementalEchelon e(m[0].empty() ? Field() : m[0][0].field());
    for (const auto &row : m) {
        SparseRow r;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero()) r.emplace(static_cast<int>(c), row[c]);
        e.insert(r);
    }
    return e.rank();
}

std::vector<std::vector<FieldValue>> kernel(const DenseMatrix &m, int cols)
{
    std::vector<std::vector<FieldValue>> out;
    if (cols == 0) return out;
    DenseMatrix a = m;
    if (a.empty()) {
        throw Error(ErrorKind::InvalidArgument, "kernel of an empty matrix needs a field; pass at least one row");
    }
    const Field F = a[0][0].field();
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<FieldValue> v(static_cast<std::size_t>(cols), F.zero());
        v[static_cast<std::size_t>(f)] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(f)];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace punctured
