#include <punctured/chart.hpp>

#include <algorithm>
#include <climits>

namespace punctured {

std::string chart_name(Chart c)
{
    switch (c) {
        case Chart::G1: return "G1";
        case Chart::G2: return "G2";
        case Chart::G12: return "G12";
    }
    return "?";
}

// ------------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(Field field, const std::map<int, FieldValue> &terms) : field_(std::move(field))
{
    for (const auto &[e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const FieldValue &c, int e)
{
    LaurentPoly p(c.field());
    p.add_term(e, c);
    return p;
}

int LaurentPoly::min_exponent() const
{
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero Laurent polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const
{
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero Laurent polynomial has no exponents");
    return terms_.rbegin()->first;
}

FieldValue LaurentPoly::coeff(int e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

void LaurentPoly::add_term(int e, const FieldValue &c)
{
    if (!(c.field() == field_)) throw Error(ErrorKind::DescriptorMismatch, "Laurent polynomial coefficient field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(field_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &b)
{
    for (const auto &[e, c] : b.terms_) add_term(e, c);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &b)
{
    for (const auto &[e, c] : b.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &b) const
{
    LaurentPoly r(field_);
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const FieldValue &c) const
{
    LaurentPoly r(field_);
    for (const auto &[e, x] : terms_) r.add_term(e, x * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r(field_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::restricted(int lo, int hi) const
{
    LaurentPoly r(field_);
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it) r.terms_.emplace(it->first, it->second);
    return r;
}

std::string LaurentPoly::to_string(const std::string &var) const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        append_term(out, it->second, e == 0 ? "" : e == 1 ? var : var + "^" + std::to_string(e));
    }
    return out;
}

// ------------------------------------------------------------------ ChartSeries

namespace {

// Ratio exponent carried by x and by y in each chart.
std::pair<int, int> ratio_weights(Chart chart)
{
    switch (chart) {
        case Chart::G12: return {0, -1};
        case Chart::G1: return {0, 1};
        case Chart::G2: return {1, 0};
    }
    return {0, 0};
}

std::string ratio_name(Chart chart)
{
    switch (chart) {
        case Chart::G12: return "(x/y)";
        case Chart::G1: return "(y/x)";
        case Chart::G2: return "(x/y)";
    }
    return "?";
}

} // namespace

ChartSeries::ChartSeries(Chart chart, Field field, int N) : chart_(chart), field_(std::move(field)), prec_(N) {}

ChartSeries ChartSeries::monomial(Chart chart, const FieldValue &c, int a, int b, int N)
{
    const auto [wx, wy] = ratio_weights(chart);
    return from_level(chart, LaurentPoly::monomial(c, wx * a + wy * b), -(a + b), N);
}

ChartSeries ChartSeries::from_level(Chart chart, const LaurentPoly &p, int level, int N)
{
    ChartSeries s(chart, p.field(), N);
    if (level < N && !p.is_zero()) {
        s.offset_ = level;
        s.c_.push_back(p);
    }
    return s;
}

int ChartSeries::valuation() const noexcept { return c_.empty() ? prec_ : offset_; }

LaurentPoly ChartSeries::level(int k) const
{
    if (k >= prec_) {
        throw Error(ErrorKind::PrecisionExhausted, "level " + std::to_string(k) + " beyond O(deg " + std::to_string(prec_) + ")");
    }
    if (c_.empty() || k < offset_ || k >= offset_ + static_cast<int>(c_.size())) return LaurentPoly(field_);
    return c_[static_cast<std::size_t>(k - offset_)];
}

std::pair<int, int> ChartSeries::xy_exponents(int k, int e) const
{
    switch (chart_) {
        case Chart::G12: return {e - k, -e};
        case Chart::G1: return {-k - e, e};
        case Chart::G2: return {e, -k - e};
    }
    return {0, 0};
}

void ChartSeries::normalize()
{
    while (!c_.empty() && offset_ + static_cast<int>(c_.size()) > prec_) c_.pop_back();
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ = c_.empty() ? 0 : offset_ + static_cast<int>(lead);
}

void ChartSeries::require_compatible(const ChartSeries &b) const
{
    if (!(field_ == b.field_)) throw Error(ErrorKind::DescriptorMismatch, "chart series over different fields");
    if (chart_ != b.chart_) throw Error(ErrorKind::VariableMismatch, "chart series in " + chart_name(chart_) + " and " + chart_name(b.chart_));
}

ChartSeries ChartSeries::operator-() const
{
    ChartSeries r = *this;
    for (auto &p : r.c_) p = -p;
    return r;
}

ChartSeries &ChartSeries::operator+=(const ChartSeries &b)
{
    require_compatible(b);
    const int prec = std::min(prec_, b.prec_);
    auto stored = [](const ChartSeries &x, int k) {
        const bool inside = !x.c_.empty() && k >= x.offset_ && k < x.offset_ + static_cast<int>(x.c_.size());
        return inside ? x.c_[static_cast<std::size_t>(k - x.offset_)] : LaurentPoly(x.field_);
    };
    if (c_.empty() && b.c_.empty()) {
        prec_ = prec;
        return *this;
    }
    const int lo = std::min(valuation(), b.valuation());
    int hi = prec - 1;
    if (!c_.empty()) hi = std::min(hi, std::max(offset_ + static_cast<int>(c_.size()) - 1, b.c_.empty() ? INT_MIN : b.offset_ + static_cast<int>(b.c_.size()) - 1));
    else hi = std::min(hi, b.offset_ + static_cast<int>(b.c_.size()) - 1);
    std::vector<LaurentPoly> r;
    for (int k = lo; k <= hi; ++k) r.push_back(stored(*this, k) + stored(b, k));
    offset_ = lo;
    c_ = std::move(r);
    prec_ = prec;
    normalize();
    return *this;
}

ChartSeries &ChartSeries::operator-=(const ChartSeries &b) { return *this += -b; }

ChartSeries &ChartSeries::operator*=(const ChartSeries &b)
{
    require_compatible(b);
    const int prec = std::min(prec_ + b.valuation(), b.prec_ + valuation());
    ChartSeries r(chart_, field_, prec);
    if (!c_.empty() && !b.c_.empty()) {
        r.offset_ = offset_ + b.offset_;
        const int len = prec - r.offset_;
        if (len > 0) {
            r.c_.assign(static_cast<std::size_t>(len), LaurentPoly(field_));
            for (std::size_t i = 0; i < c_.size() && static_cast<int>(i) < len; ++i) {
                if (c_[i].is_zero()) continue;
                for (std::size_t j = 0; j < b.c_.size() && static_cast<int>(i + j) < len; ++j) r.c_[i + j] += c_[i] * b.c_[j];
            }
        }
    }
    r.normalize();
    *this = std::move(r);
    return *this;
}

ChartSeries ChartSeries::scaled(const FieldValue &c) const
{
    ChartSeries r = *this;
    for (auto &p : r.c_) p = p.scaled(c);
    r.normalize();
    return r;
}

ChartSeries ChartSeries::inverse() const
{
    if (c_.empty()) throw Error(ErrorKind::NotAUnit, "chart series has no known nonzero level");
    const LaurentPoly &lead = c_.front();
    if (!lead.is_monomial()) throw Error(ErrorKind::NotAUnit, "leading level " + lead.to_string(ratio_name(chart_)) + " is not a monomial");
    const int e0 = lead.min_exponent();
    const LaurentPoly lead_inv = LaurentPoly::monomial(lead.coeff(e0).inverse(), -e0);
    const int v = offset_;
    const int rel = prec_ - v;
    std::vector<LaurentPoly> b(static_cast<std::size_t>(rel), LaurentPoly(field_));
    b[0] = lead_inv;
    for (int k = 1; k < rel; ++k) {
        LaurentPoly acc(field_);
        for (int i = 1; i <= k && i < static_cast<int>(c_.size()); ++i) {
            if (!c_[static_cast<std::size_t>(i)].is_zero()) acc += c_[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
        }
        b[static_cast<std::size_t>(k)] = -(acc * lead_inv);
    }
    ChartSeries r(chart_, field_, rel - v);
    r.offset_ = -v;
    r.c_ = std::move(b);
    r.normalize();
    return r;
}

ChartSeries ChartSeries::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    ChartSeries result = constant(chart_, field_.one(), prec_ + std::max(0, -valuation()) * static_cast<int>(e) + 1);
    ChartSeries base = *this;
    bool first = true;
    while (e) {
        if (e & 1) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

ChartSeries ChartSeries::truncated(int N) const
{
    ChartSeries r = *this;
    r.prec_ = std::min(prec_, N);
    r.normalize();
    return r;
}

bool ChartSeries::agrees_with(const ChartSeries &b) const
{
    if (!(field_ == b.field_) || chart_ != b.chart_) return false;
    const int n = std::min(prec_, b.prec_);
    const ChartSeries x = truncated(n), y = b.truncated(n);
    return x.offset_ == y.offset_ && x.c_ == y.c_;
}

bool ChartSeries::operator==(const ChartSeries &b) const
{
    return chart_ == b.chart_ && field_ == b.field_ && prec_ == b.prec_ && offset_ == b.offset_ && c_ == b.c_;
}

std::string ChartSeries::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const int k = offset_ + static_cast<int>(i);
        const auto &terms = c_[i].terms();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            const auto [a, b] = xy_exponents(k, it->first);
            std::string mono;
            if (a) mono += a == 1 ? std::string("x") : "x^" + std::to_string(a);
            if (b) mono += (mono.empty() ? "" : "*") + (b == 1 ? std::string("y") : "y^" + std::to_string(b));
            append_term(out, it->second, mono);
        }
    }
    const std::string big_o = "O(deg " + std::to_string(prec_) + ")";
    return out.empty() ? big_o : out + " + " + big_o;
}

// -------------------------------------------------------------------- ChartUnit

ChartUnit::ChartUnit(ChartSeries s) : s_(std::move(s)), scalar_(s_.field().one())
{
    const Chart chart = s_.chart();
    const ErrorKind kind = chart == Chart::G12 ? ErrorKind::MalformedCocycle : ErrorKind::NotAUnit;
    if (s_.precision() < 1) throw Error(ErrorKind::PrecisionExhausted, "unit needs precision at least 1");
    if (s_.valuation() != 0) {
        throw Error(kind, "leading term of " + s_.to_string() + " is not at level 0");
    }
    const LaurentPoly lead = s_.level(0);
    if (!lead.is_monomial()) throw Error(kind, "leading part " + lead.to_string(ratio_name(chart)) + " is not in k^x (x/y)^Z");
    n_ = lead.min_exponent();
    scalar_ = lead.coeff(n_);
    if (chart != Chart::G12) {
        if (n_ != 0) throw Error(kind, "leading part of a " + chart_name(chart) + " unit must be a constant");
        for (int k = 1; k < s_.precision(); ++k) {
            const LaurentPoly p = s_.level(k);
            if (!p.is_zero() && p.min_exponent() < 0) {
                throw Error(ErrorKind::InvalidArgument, "term at level " + std::to_string(k) + " leaves the " + chart_name(chart) + " chart ring");
            }
        }
    }
    normalized_ = s_ * ChartSeries::from_level(chart, LaurentPoly::monomial(scalar_.inverse(), -n_), 0, s_.precision());
}

ChartUnit ChartUnit::one(Chart chart, const Field &field, int N) { return ChartUnit(ChartSeries::constant(chart, field.one(), N)); }

ChartUnit ChartUnit::ratio_power(const Field &field, int n, int N)
{
    return ChartUnit(ChartSeries::from_level(Chart::G12, LaurentPoly::monomial(field.one(), n), 0, N));
}

ChartUnit ChartUnit::from_parts(Chart chart, const FieldValue &scalar, int n, const std::vector<LaurentPoly> &tail, int N)
{
    const Field &F = scalar.field();
    ChartSeries s = ChartSeries::from_level(chart, LaurentPoly::monomial(F.one(), 0), 0, N);
    for (std::size_t k = 0; k < tail.size() && static_cast<int>(k) + 1 < N; ++k) {
        s += ChartSeries::from_level(chart, tail[k], static_cast<int>(k) + 1, N);
    }
    s = s * ChartSeries::from_level(chart, LaurentPoly::monomial(scalar, n), 0, N);
    return ChartUnit(std::move(s));
}

LaurentPoly ChartUnit::normalized_term(int k) const { return normalized_.level(k); }

ChartUnit ChartUnit::operator*(const ChartUnit &b) const { return ChartUnit(s_ * b.s_); }

ChartUnit ChartUnit::inverse() const { return ChartUnit(s_.inverse()); }

// ---------------------------------------------------------------------- embeds

ChartSeries to_g12(const ChartSeries &s)
{
    if (s.chart() == Chart::G12) return s;
    ChartSeries r(Chart::G12, s.field(), s.precision());
    for (int k = s.valuation(); k < s.precision(); ++k) {
        const LaurentPoly p = s.level(k);
        for (const auto &[e, c] : p.terms()) {
            const auto [a, b] = s.xy_exponents(k, e);
            r += ChartSeries::monomial(Chart::G12, c, a, b, s.precision());
        }
    }
    return r;
}

ChartSeries to_g12(const BiSeries &g)
{
    ChartSeries r(Chart::G12, g.field(), g.precision());
    for (const auto &[ij, c] : g.terms()) r += ChartSeries::monomial(Chart::G12, c, -ij.first, -ij.second, g.precision());
    return r;
}

ChartUnit chart_embed(const ChartUnit &u) { return ChartUnit(to_g12(u.series())); }

ChartUnit chart_embed(int n, const BiSeries &g)
{
    return ChartUnit(to_g12(g) * ChartSeries::from_level(Chart::G12, LaurentPoly::monomial(g.field().one(), n), 0, g.precision()));
}

LaurentPoly filtration_graded_piece(const ChartUnit &c, int n)
{
    if (c.chart() != Chart::G12) throw Error(ErrorKind::InvalidArgument, "graded pieces are taken in G12");
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "filtration index must be non-negative");
    if (n == 0) return LaurentPoly::monomial(c.scalar(), c.exponent());
    if (n >= c.order()) throw Error(ErrorKind::PrecisionExhausted, "level " + std::to_string(n) + " beyond O(deg " + std::to_string(c.order()) + ")");
    if (!c.scalar().is_one() || c.exponent() != 0) throw Error(ErrorKind::NotInFiltrationLevel, "leading part is not 1");
    for (int k = 1; k < n; ++k) {
        if (!c.normalized_term(k).is_zero()) {
            throw Error(ErrorKind::NotInFiltrationLevel, "nonzero term at level " + std::to_string(k) + " < " + std::to_string(n));
        }
    }
    return c.normalized_term(n);
}

} // namespace punctured
