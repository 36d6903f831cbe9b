#include <punctured/series.hpp>

#include <algorithm>
#include <climits>

namespace punctured {

namespace {

constexpr int max_dense_length = 1 << 20;

void require_same_field(const Field &a, const Field &b)
{
    if (!(a == b)) throw Error(ErrorKind::DescriptorMismatch, "series over different fields");
}

std::string power_text(const std::string &var, int e)
{
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace

void append_term(std::string &out, const FieldValue &c, const std::string &monomial)
{
    std::string cs = c.coefficient_string();
    const bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (monomial.empty()) out += cs;
    else if (cs == "1") out += monomial;
    else out += cs + "*" + monomial;
}

// ---------------------------------------------------------------- LaurentSeries

LaurentSeries::LaurentSeries(Field field, int prec) : field_(std::move(field)), prec_(prec) {}

LaurentSeries::LaurentSeries(Field field, const std::map<int, FieldValue> &terms, int prec) : field_(std::move(field)), prec_(prec)
{
    if (terms.empty()) return;
    for (const auto &[e, c] : terms) {
        require_same_field(c.field(), field_);
        if (e >= prec) throw Error(ErrorKind::InvalidArgument, "term u^" + std::to_string(e) + " lies beyond the precision");
    }
    offset_ = terms.begin()->first;
    const long long span = static_cast<long long>(terms.rbegin()->first) - offset_ + 1;
    if (span > max_dense_length) throw Error(ErrorKind::InvalidArgument, "series support too wide");
    coeffs_.assign(static_cast<std::size_t>(span), field_.zero());
    for (const auto &[e, c] : terms) coeffs_[static_cast<std::size_t>(e - offset_)] = c;
    normalize();
}

LaurentSeries LaurentSeries::monomial(const FieldValue &c, int exponent, int prec)
{
    if (exponent >= prec) return LaurentSeries(c.field(), prec);
    return LaurentSeries(c.field(), {{exponent, c}}, prec);
}

LaurentSeries LaurentSeries::from_upoly(const UPoly &a, int prec)
{
    LaurentSeries r(a.field(), prec);
    r.offset_ = 0;
    for (int k = 0; k <= a.degree() && k < prec; ++k) r.coeffs_.push_back(a.coeff(k));
    r.normalize();
    return r;
}

void LaurentSeries::normalize()
{
    while (!coeffs_.empty() && top_exponent() >= prec_) coeffs_.pop_back();
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) offset_ = 0;
}

FieldValue LaurentSeries::coeff(int e) const
{
    if (e >= prec_) {
        throw Error(ErrorKind::PrecisionExhausted,
                    "coefficient of u^" + std::to_string(e) + " requested, known only below u^" + std::to_string(prec_));
    }
    if (coeffs_.empty() || e < offset_ || e > top_exponent()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(e - offset_)];
}

std::vector<std::pair<int, FieldValue>> LaurentSeries::terms() const
{
    std::vector<std::pair<int, FieldValue>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace_back(offset_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

FieldValue LaurentSeries::leading_coefficient() const
{
    if (coeffs_.empty()) throw Error(ErrorKind::PrecisionExhausted, "no known nonzero coefficient");
    return coeffs_.front();
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &b)
{
    require_same_field(field_, b.field_);
    prec_ = std::min(prec_, b.prec_);
    if (b.coeffs_.empty()) {
        normalize();
        return *this;
    }
    if (coeffs_.empty()) {
        offset_ = b.offset_;
        coeffs_ = b.coeffs_;
        normalize();
        return *this;
    }
    const int lo = std::min(offset_, b.offset_);
    const int hi = std::min(std::max(top_exponent(), b.top_exponent()), prec_ - 1);
    if (hi < lo) {
        coeffs_.clear();
        offset_ = 0;
        return *this;
    }
    std::vector<FieldValue> r(static_cast<std::size_t>(hi - lo + 1), field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const int e = offset_ + static_cast<int>(i);
        if (e <= hi) r[static_cast<std::size_t>(e - lo)] = coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        const int e = b.offset_ + static_cast<int>(i);
        if (e <= hi) r[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
    }
    offset_ = lo;
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &b) { return *this += -b; }

LaurentSeries &LaurentSeries::operator*=(const LaurentSeries &b)
{
    require_same_field(field_, b.field_);
    const long long p1 = static_cast<long long>(prec_) + b.valuation();
    const long long p2 = static_cast<long long>(b.prec_) + valuation();
    const int prec = static_cast<int>(std::clamp<long long>(std::min(p1, p2), INT_MIN / 4, INT_MAX / 4));
    if (coeffs_.empty() || b.coeffs_.empty()) {
        coeffs_.clear();
        offset_ = 0;
        prec_ = prec;
        return *this;
    }
    const int lo = offset_ + b.offset_;
    const int hi = std::min(top_exponent() + b.top_exponent(), prec - 1);
    if (hi < lo) {
        coeffs_.clear();
        offset_ = 0;
        prec_ = prec;
        return *this;
    }
    if (hi - lo + 1 > max_dense_length) throw Error(ErrorKind::PrecisionExhausted, "product support too wide");
    std::vector<FieldValue> r(static_cast<std::size_t>(hi - lo + 1), field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const std::size_t jmax = std::min(b.coeffs_.size(), static_cast<std::size_t>(hi - lo + 1) - std::min(i, static_cast<std::size_t>(hi - lo + 1)));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r[i + j] += coeffs_[i] * b.coeffs_[j];
        }
    }
    offset_ = lo;
    coeffs_ = std::move(r);
    prec_ = prec;
    normalize();
    return *this;
}

LaurentSeries LaurentSeries::scaled(const FieldValue &c) const
{
    require_same_field(field_, c.field());
    LaurentSeries r = *this;
    for (auto &x : r.coeffs_) x *= c;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const
{
    LaurentSeries r = *this;
    if (!r.coeffs_.empty()) r.offset_ += k;
    r.prec_ += k;
    return r;
}

LaurentSeries LaurentSeries::inverse() const
{
    if (coeffs_.empty()) throw Error(ErrorKind::NotAUnit, "series has no known nonzero coefficient");
    const int v = offset_;
    const int rel = prec_ - v;
    if (rel > max_dense_length) throw Error(ErrorKind::PrecisionExhausted, "cannot invert a series without finite precision");
    const FieldValue inv = coeffs_.front().inverse();
    std::vector<FieldValue> b(static_cast<std::size_t>(rel), field_.zero());
    b[0] = inv;
    for (int k = 1; k < rel; ++k) {
        FieldValue acc = field_.zero();
        const int imax = std::min(k, static_cast<int>(coeffs_.size()) - 1);
        for (int i = 1; i <= imax; ++i) {
            const FieldValue &a = coeffs_[static_cast<std::size_t>(i)];
            if (!a.is_zero()) acc += a * b[static_cast<std::size_t>(k - i)];
        }
        b[static_cast<std::size_t>(k)] = -(acc * inv);
    }
    LaurentSeries r(field_, rel - v);
    r.offset_ = -v;
    r.coeffs_ = std::move(b);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    LaurentSeries result = monomial(field_.one(), 0, exact_precision);
    LaurentSeries base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

LaurentSeries LaurentSeries::derivative() const
{
    LaurentSeries r(field_, prec_ - 1);
    if (coeffs_.empty()) return r;
    r.offset_ = offset_ - 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * field_.from_int(offset_ + static_cast<long long>(i)));
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::truncated(int prec) const
{
    LaurentSeries r = *this;
    r.prec_ = std::min(prec_, prec);
    r.normalize();
    return r;
}

bool LaurentSeries::agrees_with(const LaurentSeries &b) const
{
    if (!(field_ == b.field_)) return false;
    return truncated(b.prec_).coeffs_ == b.truncated(prec_).coeffs_ &&
           truncated(b.prec_).offset_ == b.truncated(prec_).offset_;
}

bool LaurentSeries::operator==(const LaurentSeries &b) const
{
    return field_ == b.field_ && prec_ == b.prec_ && offset_ == b.offset_ && coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string(const std::string &var) const
{
    std::string out;
    for (const auto &[e, c] : terms()) append_term(out, c, power_text(var, e));
    if (prec_ >= exact_precision / 2) return out.empty() ? "0" : out;
    const std::string big_o = "O(" + (prec_ == 0 ? std::string("1") : power_text(var, prec_)) + ")";
    return out.empty() ? big_o : out + " + " + big_o;
}

LaurentSeries evaluate(const UPoly &a, const LaurentSeries &s)
{
    LaurentSeries acc(a.field(), LaurentSeries::exact_precision);
    for (int k = a.degree(); k >= 0; --k) {
        acc *= s;
        acc += LaurentSeries::monomial(a.coeff(k), 0, LaurentSeries::exact_precision);
    }
    return acc;
}

// -------------------------------------------------------------- TruncatedSeries

TruncatedSeries::TruncatedSeries(Field field, std::string var, int N) : var_(std::move(var)), s_(std::move(field), N) {}

TruncatedSeries::TruncatedSeries(Field field, std::string var, const std::map<int, FieldValue> &terms, int N) : var_(std::move(var))
{
    std::map<int, FieldValue> internal;
    for (const auto &[e, c] : terms) {
        if (e <= -N) {
            throw Error(ErrorKind::InvalidArgument,
                        "term " + var_ + "^" + std::to_string(e) + " is below the precision O(" + var_ + "^" + std::to_string(-N) + ")");
        }
        internal.emplace(-e, c);
    }
    s_ = LaurentSeries(std::move(field), internal, N);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial &p, int N)
{
    if (p.nvars() != 1) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in one variable");
    return from_upoly(p.to_upoly(), p.variables()[0], N);
}

TruncatedSeries TruncatedSeries::from_upoly(const UPoly &p, const std::string &var, int N)
{
    std::map<int, FieldValue> terms;
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero() && k > -N) terms.emplace(k, p.coeff(k));
    return TruncatedSeries(p.field(), var, terms, N);
}

TruncatedSeries TruncatedSeries::monomial(const FieldValue &c, const std::string &var, int exponent, int N)
{
    return TruncatedSeries(var, LaurentSeries::monomial(c, -exponent, N));
}

int TruncatedSeries::pole_order() const noexcept { return std::max(0, degree()); }

std::vector<std::pair<int, FieldValue>> TruncatedSeries::terms() const
{
    std::vector<std::pair<int, FieldValue>> out;
    for (const auto &[e, c] : s_.terms()) out.emplace_back(-e, c);
    return out;
}

void TruncatedSeries::require_compatible(const TruncatedSeries &b) const
{
    if (var_ != b.var_) throw Error(ErrorKind::VariableMismatch, "series in " + var_ + " and " + b.var_);
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &b)
{
    require_compatible(b);
    s_ += b.s_;
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &b)
{
    require_compatible(b);
    s_ -= b.s_;
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &b)
{
    require_compatible(b);
    s_ *= b.s_;
    return *this;
}

UPoly TruncatedSeries::polynomial_part() const
{
    if (precision() <= 0) {
        throw Error(ErrorKind::PrecisionExhausted, "polynomial part of " + to_string() + " is not fully known");
    }
    std::vector<FieldValue> v(static_cast<std::size_t>(pole_order() + 1), field().zero());
    for (const auto &[e, c] : terms())
        if (e >= 0) v[static_cast<std::size_t>(e)] = c;
    return UPoly(field(), std::move(v));
}

TruncatedSeries TruncatedSeries::principal_part_at_zero() const
{
    std::map<int, FieldValue> t;
    for (const auto &[e, c] : terms())
        if (e < 0) t.emplace(e, c);
    return TruncatedSeries(field(), var_, t, precision());
}

bool TruncatedSeries::agrees_with(const TruncatedSeries &b) const { return var_ == b.var_ && s_.agrees_with(b.s_); }

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (const auto &[e, c] : terms()) append_term(out, c, power_text(var_, e));
    if (precision() >= LaurentSeries::exact_precision / 2) return out.empty() ? "0" : out;
    const std::string big_o = "O(" + (precision() == 0 ? std::string("1") : power_text(var_, -precision())) + ")";
    return out.empty() ? big_o : out + " + " + big_o;
}

// --------------------------------------------------------------------- BiSeries

BiSeries::BiSeries(Field field, std::array<std::string, 2> vars, int N) : field_(std::move(field)), vars_(std::move(vars)), prec_(std::max(N, 0))
{
    if (vars_[0] == vars_[1]) throw Error(ErrorKind::InvalidArgument, "repeated variable " + vars_[0]);
    c_.assign(static_cast<std::size_t>(prec_) * static_cast<std::size_t>(prec_ + 1) / 2, field_.zero());
}

BiSeries::BiSeries(Field field, std::array<std::string, 2> vars, const std::map<std::pair<int, int>, FieldValue> &terms, int N)
    : BiSeries(std::move(field), std::move(vars), N)
{
    for (const auto &[ij, c] : terms) {
        const auto [i, j] = ij;
        require_same_field(c.field(), field_);
        if (i < 0 || j < 0) throw Error(ErrorKind::InvalidArgument, "BiSeries exponents are non-negative powers of x^-1, y^-1");
        if (i + j >= prec_) throw Error(ErrorKind::InvalidArgument, "term of total degree " + std::to_string(i + j) + " beyond O(deg " + std::to_string(prec_) + ")");
        c_[index(i, j)] = c;
    }
}

BiSeries BiSeries::one(const Field &field, int N, std::array<std::string, 2> vars)
{
    BiSeries r(field, std::move(vars), N);
    if (N > 0) r.c_[0] = field.one();
    return r;
}

std::size_t BiSeries::index(int i, int j) const
{
    const std::size_t d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(j);
}

FieldValue BiSeries::coeff(int i, int j) const
{
    if (i < 0 || j < 0) return field_.zero();
    if (i + j >= prec_) {
        throw Error(ErrorKind::PrecisionExhausted, "coefficient of total degree " + std::to_string(i + j) + " beyond O(deg " + std::to_string(prec_) + ")");
    }
    return c_[index(i, j)];
}

std::vector<std::pair<std::pair<int, int>, FieldValue>> BiSeries::terms() const
{
    std::vector<std::pair<std::pair<int, int>, FieldValue>> out;
    for (int d = 0; d < prec_; ++d)
        for (int j = 0; j <= d; ++j) {
            const FieldValue &c = c_[index(d - j, j)];
            if (!c.is_zero()) out.push_back({{d - j, j}, c});
        }
    return out;
}

bool BiSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const FieldValue &c) { return c.is_zero(); });
}

int BiSeries::valuation() const
{
    for (int d = 0; d < prec_; ++d)
        for (int j = 0; j <= d; ++j)
            if (!c_[index(d - j, j)].is_zero()) return d;
    return prec_;
}

void BiSeries::require_compatible(const BiSeries &b) const
{
    require_same_field(field_, b.field_);
    if (vars_ != b.vars_) throw Error(ErrorKind::VariableMismatch, "bivariate series in different variables");
}

BiSeries BiSeries::operator-() const
{
    BiSeries r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

BiSeries &BiSeries::operator+=(const BiSeries &b)
{
    require_compatible(b);
    *this = truncated(b.prec_);
    for (int d = 0; d < prec_; ++d)
        for (int j = 0; j <= d; ++j) c_[index(d - j, j)] += b.c_[b.index(d - j, j)];
    return *this;
}

BiSeries &BiSeries::operator-=(const BiSeries &b) { return *this += -b; }

BiSeries &BiSeries::operator*=(const BiSeries &b)
{
    require_compatible(b);
    const int prec = std::min(prec_ + b.valuation(), b.prec_ + valuation());
    BiSeries r(field_, vars_, prec);
    const auto ta = terms(), tb = b.terms();
    for (const auto &[ea, ca] : ta) {
        for (const auto &[eb, cb] : tb) {
            const int i = ea.first + eb.first, j = ea.second + eb.second;
            if (i + j >= prec) break; // tb is ordered by total degree
            r.c_[r.index(i, j)] += ca * cb;
        }
    }
    *this = std::move(r);
    return *this;
}

BiSeries BiSeries::scaled(const FieldValue &c) const
{
    require_same_field(field_, c.field());
    BiSeries r = *this;
    for (auto &x : r.c_) x *= c;
    return r;
}

BiSeries BiSeries::inverse() const
{
    if (prec_ == 0 || c_[0].is_zero()) throw Error(ErrorKind::NotAUnit, "bivariate series with zero constant term");
    const FieldValue inv = c_[0].inverse();
    BiSeries r(field_, vars_, prec_);
    const auto ta = terms();
    r.c_[0] = inv;
    for (int d = 1; d < prec_; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            FieldValue acc = field_.zero();
            for (const auto &[ea, ca] : ta) {
                if (ea.first + ea.second == 0) continue;
                if (ea.first + ea.second > d) break;
                if (ea.first > i || ea.second > j) continue;
                acc += ca * r.c_[r.index(i - ea.first, j - ea.second)];
            }
            r.c_[r.index(i, j)] = -(acc * inv);
        }
    }
    return r;
}

BiSeries BiSeries::truncated(int N) const
{
    if (N >= prec_) return *this;
    BiSeries r(field_, vars_, N);
    for (int d = 0; d < r.prec_; ++d)
        for (int j = 0; j <= d; ++j) r.c_[r.index(d - j, j)] = c_[index(d - j, j)];
    return r;
}

bool BiSeries::in_G() const
{
    if (prec_ == 0 || !c_[0].is_one()) return false;
    for (int d = 1; d < prec_; ++d)
        if (!c_[index(d, 0)].is_zero() || !c_[index(0, d)].is_zero()) return false;
    return true;
}

bool BiSeries::agrees_with(const BiSeries &b) const
{
    if (!(field_ == b.field_) || vars_ != b.vars_) return false;
    const int n = std::min(prec_, b.prec_);
    return truncated(n).c_ == b.truncated(n).c_;
}

bool BiSeries::operator==(const BiSeries &b) const
{
    return field_ == b.field_ && vars_ == b.vars_ && prec_ == b.prec_ && c_ == b.c_;
}

std::string BiSeries::to_string() const
{
    std::string out;
    for (const auto &[ij, c] : terms()) {
        std::string mono;
        if (ij.first) mono += vars_[0] + "^-" + std::to_string(ij.first);
        if (ij.second) mono += (mono.empty() ? "" : "*") + vars_[1] + "^-" + std::to_string(ij.second);
        append_term(out, c, mono);
    }
    const std::string big_o = "O(deg " + std::to_string(prec_) + ")";
    return out.empty() ? big_o : out + " + " + big_o;
}

} // namespace punctured
