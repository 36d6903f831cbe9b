#include <punctured/upoly.hpp>

#include <algorithm>
#include <map>

#include <punctured/detail/fp_poly.hpp>

namespace punctured {

UPoly::UPoly(Field field, std::vector<FieldValue> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    for (const auto &c : coeffs_) {
        if (!(c.field() == field_)) throw Error(ErrorKind::DescriptorMismatch, "polynomial coefficient field");
    }
    trim();
}

UPoly UPoly::constant(const FieldValue &c) { return UPoly(c.field(), {c}); }

UPoly UPoly::monomial(const FieldValue &c, int degree)
{
    std::vector<FieldValue> v(static_cast<std::size_t>(degree + 1), c.field().zero());
    v.back() = c;
    return UPoly(c.field(), std::move(v));
}

UPoly UPoly::linear(const FieldValue &root) { return UPoly(root.field(), {-root, root.field().one()}); }

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldValue UPoly::coeff(int k) const
{
    if (k < 0 || k > degree()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(k)];
}

FieldValue UPoly::lead() const { return is_zero() ? field_.zero() : coeffs_.back(); }

UPoly UPoly::operator-() const
{
    UPoly r(field_);
    for (const auto &c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

UPoly &UPoly::operator+=(const UPoly &b)
{
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &b)
{
    if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    trim();
    return *this;
}

UPoly &UPoly::operator*=(const UPoly &b)
{
    if (is_zero() || b.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldValue> r(coeffs_.size() + b.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * b.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UPoly UPoly::scaled(const FieldValue &c) const
{
    UPoly r(field_);
    for (const auto &x : coeffs_) r.coeffs_.push_back(x * c);
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly &b) const
{
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    UPoly r = *this;
    if (r.degree() < b.degree()) return {UPoly(field_), r};
    std::vector<FieldValue> q(static_cast<std::size_t>(r.degree() - b.degree() + 1), field_.zero());
    const FieldValue inv = b.lead().inverse();
    for (int k = r.degree(); k >= b.degree(); --k) {
        const FieldValue c = r.coeffs_[static_cast<std::size_t>(k)] * inv;
        const int shift = k - b.degree();
        q[static_cast<std::size_t>(shift)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            r.coeffs_[static_cast<std::size_t>(shift + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    r.trim();
    return {UPoly(field_, std::move(q)), r};
}

UPoly UPoly::monic() const
{
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

UPoly UPoly::derivative() const
{
    UPoly r(field_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
    r.trim();
    return r;
}

FieldValue UPoly::operator()(const FieldValue &x) const
{
    FieldValue acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

bool UPoly::operator==(const UPoly &b) const { return field_ == b.field_ && coeffs_ == b.coeffs_; }

std::string UPoly::to_string(const std::string &var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const FieldValue &c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string cs = c.coefficient_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

int valuation(const UPoly &a, const UPoly &pi)
{
    if (a.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of zero");
    int v = 0;
    UPoly cur = a;
    for (;;) {
        auto [q, r] = cur.divmod(pi);
        if (!r.is_zero()) return v;
        cur = std::move(q);
        ++v;
    }
}

namespace {

using detail::FpPoly;

FpPoly to_fp(const UPoly &a)
{
    FpPoly r;
    for (const auto &c : a.coefficients()) r.push_back(c.residue());
    return r;
}

UPoly from_fp(const Field &F, const FpPoly &a)
{
    std::vector<FieldValue> v;
    for (auto c : a) v.push_back(F.from_int(static_cast<long long>(c)));
    return UPoly(F, std::move(v));
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<FieldValue, int>> rational_roots(const UPoly &a)
{
    // Clear denominators, strip powers of t, then apply the rational root test.
    const Field &F = a.field();
    std::vector<std::pair<FieldValue, int>> out;
    UPoly cur = a;
    int zero_mult = 0;
    while (!cur.is_zero() && cur.coeff(0).is_zero()) {
        cur = cur.divmod(UPoly::monomial(F.one(), 1)).first;
        ++zero_mult;
    }
    if (zero_mult) out.emplace_back(F.zero(), zero_mult);
    if (cur.degree() < 1) return out;
    mpz_class lcm_den = 1;
    for (const auto &c : cur.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
    const mpz_class a0 = mpq_class(cur.coeff(0).rational() * lcm_den).get_num();
    const mpz_class an = mpq_class(cur.lead().rational() * lcm_den).get_num();
    for (const auto &num : divisors(a0)) {
        for (const auto &den : divisors(an)) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                const FieldValue r = F.from_rational(mpq_class(num * sign, den));
                int mult = 0;
                while (cur.degree() >= 1 && cur(r).is_zero()) {
                    cur = cur.divmod(UPoly::linear(r)).first;
                    ++mult;
                }
                if (mult) out.emplace_back(r, mult);
            }
        }
    }
    return out;
}

} // namespace

Factorization factor(const UPoly &a)
{
    if (a.is_zero()) throw Error(ErrorKind::ZeroFunction, "cannot factor the zero polynomial");
    const Field &F = a.field();
    Factorization out{a.lead(), {}, true};
    if (a.degree() == 0) return out;
    switch (F.kind()) {
        case Field::Kind::Prime: {
            for (auto &[f, m] : detail::fp_factor(to_fp(a), F.characteristic())) out.factors.push_back({from_fp(F, f), m});
            return out;
        }
        case Field::Kind::Rational: {
            UPoly rest = a.monic();
            for (auto &[r, m] : rational_roots(rest)) {
                out.factors.push_back({UPoly::linear(r), m});
                for (int i = 0; i < m; ++i) rest = rest.divmod(UPoly::linear(r)).first;
            }
            if (rest.degree() >= 1) {
                out.factors.push_back({rest.monic(), 1});
                out.fully_split = false;
            }
            return out;
        }
        case Field::Kind::Extension: {
            UPoly rest = a.monic();
            for (auto &[r, m] : roots(rest)) {
                out.factors.push_back({UPoly::linear(r), m});
                for (int i = 0; i < m; ++i) rest = rest.divmod(UPoly::linear(r)).first;
            }
            if (rest.degree() >= 1) {
                out.factors.push_back({rest.monic(), 1});
                out.fully_split = false;
            }
            return out;
        }
    }
    return out;
}

std::vector<std::pair<FieldValue, int>> roots(const UPoly &a)
{
    if (a.is_zero()) throw Error(ErrorKind::ZeroFunction, "roots of the zero polynomial");
    const Field &F = a.field();
    std::vector<std::pair<FieldValue, int>> out;
    switch (F.kind()) {
        case Field::Kind::Rational: return rational_roots(a);
        case Field::Kind::Prime: {
            for (const auto &f : factor(a).factors) {
                if (f.poly.degree() == 1) out.emplace_back(-f.poly.coeff(0), f.multiplicity);
            }
            return out;
        }
        case Field::Kind::Extension: {
            UPoly cur = a;
            for (const auto &x : F.elements()) {
                int mult = 0;
                while (cur.degree() >= 1 && cur(x).is_zero()) {
                    cur = cur.divmod(UPoly::linear(x)).first;
                    ++mult;
                }
                if (mult) out.emplace_back(x, mult);
            }
            return out;
        }
    }
    return out;
}

} // namespace punctured
