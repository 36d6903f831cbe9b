#include <punctured/field.hpp>

#include <sstream>

#include <punctured/detail/fp_poly.hpp>

namespace punctured {

const char *error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotAnExtensionField: return "NotAnExtensionField";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::WindowExceeded: return "WindowExceeded";
        case ErrorKind::NotStabilized: return "NotStabilized";
        case ErrorKind::NotInG: return "NotInG";
        case ErrorKind::NotInFiltrationLevel: return "NotInFiltrationLevel";
        case ErrorKind::MalformedCocycle: return "MalformedCocycle";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::WildBranch: return "WildBranch";
        case ErrorKind::ZeroFunction: return "ZeroFunction";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

namespace detail {

struct FieldData {
    Field::Kind kind = Field::Kind::Rational;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> modulus; // monic, low degree first
};

} // namespace detail

using detail::u64;

namespace {

const std::shared_ptr<const detail::FieldData> &rational_data()
{
    static const auto data = std::make_shared<const detail::FieldData>();
    return data;
}

std::string z_poly_string(const std::vector<u64> &c)
{
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c[k] == 1;
        if (k == 0) {
            out += std::to_string(c[k]);
        } else {
            if (!unit) out += std::to_string(c[k]) + "*";
            out += "z";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

Field::Field() : data_(rational_data()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p)
{
    if (p >= max_prime || !detail::is_prime(p)) {
        throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->kind = Kind::Prime;
    data->p = p;
    return Field(std::move(data));
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus)
{
    if (p >= max_prime || !detail::is_prime(p)) {
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
    for (auto &c : modulus) c %= p;
    detail::fp_trim(modulus);
    const int d = detail::fp_degree(modulus);
    if (d < 1 || d > max_extension_degree) {
        throw Error(ErrorKind::InvalidField, "extension degree must lie in [1, 8]");
    }
    if (modulus.back() != 1) throw Error(ErrorKind::InvalidField, "extension modulus must be monic");
    if (!detail::fp_is_irreducible(modulus, p)) {
        throw Error(ErrorKind::InvalidField, "modulus " + z_poly_string(modulus) + " is reducible over F_" + std::to_string(p));
    }
    auto data = std::make_shared<detail::FieldData>();
    data->kind = Kind::Extension;
    data->p = p;
    data->modulus = std::move(modulus);
    return Field(std::move(data));
}

Field::Kind Field::kind() const noexcept { return data_->kind; }
std::uint64_t Field::characteristic() const noexcept { return data_->p; }
int Field::degree() const noexcept { return data_->kind == Kind::Extension ? detail::fp_degree(data_->modulus) : 1; }
const std::vector<std::uint64_t> &Field::modulus() const noexcept { return data_->modulus; }

Field Field::prime_subfield() const
{
    switch (kind()) {
        case Kind::Rational: return *this;
        case Kind::Prime: return *this;
        case Kind::Extension: return Field::prime(characteristic());
    }
    return *this;
}

mpz_class Field::order() const
{
    if (is_rational()) return 0;
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), characteristic(), static_cast<unsigned long>(degree()));
    return q;
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(long long n) const
{
    switch (kind()) {
        case Kind::Rational: return FieldValue(*this, mpq_class(static_cast<long>(n)));
        case Kind::Prime: {
            const long long p = static_cast<long long>(characteristic());
            return FieldValue(*this, static_cast<u64>(((n % p) + p) % p));
        }
        case Kind::Extension: return from_mpz(mpz_class(static_cast<long>(n)));
    }
    return FieldValue();
}

FieldValue Field::from_mpz(const mpz_class &n) const
{
    switch (kind()) {
        case Kind::Rational: return FieldValue(*this, mpq_class(n));
        case Kind::Prime: return FieldValue(*this, static_cast<u64>(mpz_fdiv_ui(n.get_mpz_t(), characteristic())));
        case Kind::Extension: {
            std::vector<u64> c(static_cast<std::size_t>(degree()), 0);
            c[0] = mpz_fdiv_ui(n.get_mpz_t(), characteristic());
            return FieldValue(*this, std::move(c));
        }
    }
    return FieldValue();
}

FieldValue Field::from_rational(const mpq_class &q) const
{
    if (is_rational()) {
        if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
        mpq_class c = q;
        c.canonicalize();
        return FieldValue(*this, std::move(c));
    }
    FieldValue den = from_mpz(q.get_den());
    if (den.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "denominator " + q.get_den().get_str() + " vanishes in " + descriptor());
    }
    return from_mpz(q.get_num()) / den;
}

FieldValue Field::from_coefficients(std::vector<std::uint64_t> coeffs) const
{
    if (kind() != Kind::Extension) {
        if (coeffs.size() > 1) {
            for (std::size_t i = 1; i < coeffs.size(); ++i) {
                if (coeffs[i] != 0) throw Error(ErrorKind::NotAnExtensionField, descriptor() + " has no generator z");
            }
        }
        return from_int(coeffs.empty() ? 0 : static_cast<long long>(coeffs[0]));
    }
    for (auto &c : coeffs) c %= characteristic();
    detail::fp_trim(coeffs);
    coeffs = detail::fp_mod(coeffs, modulus(), characteristic());
    coeffs.resize(static_cast<std::size_t>(degree()), 0);
    return FieldValue(*this, std::move(coeffs));
}

FieldValue Field::generator() const
{
    if (kind() != Kind::Extension) throw Error(ErrorKind::NotAnExtensionField, descriptor() + " has no generator z");
    return from_coefficients({0, 1});
}

std::vector<FieldValue> Field::elements(std::uint64_t limit) const
{
    if (is_rational()) throw Error(ErrorKind::InvalidArgument, "cannot enumerate Q");
    const mpz_class q = order();
    if (q > mpz_class(std::to_string(limit))) throw Error(ErrorKind::InvalidArgument, "field too large to enumerate");
    const u64 n = q.get_ui();
    std::vector<FieldValue> out;
    out.reserve(n);
    const u64 p = characteristic();
    for (u64 k = 0; k < n; ++k) {
        std::vector<u64> c(static_cast<std::size_t>(degree()), 0);
        u64 r = k;
        for (auto &ci : c) {
            ci = r % p;
            r /= p;
        }
        out.push_back(kind() == Kind::Prime ? from_int(static_cast<long long>(c[0])) : from_coefficients(c));
    }
    return out;
}

std::string Field::descriptor() const
{
    switch (kind()) {
        case Kind::Rational: return "q";
        case Kind::Prime: return "fp:" + std::to_string(characteristic());
        case Kind::Extension: {
            std::string m = z_poly_string(modulus());
            std::string compact;
            for (char ch : m) {
                if (ch != ' ') compact += ch;
            }
            return "fq:" + std::to_string(characteristic()) + ":" + compact;
        }
    }
    return "q";
}

bool Field::operator==(const Field &other) const noexcept
{
    if (data_ == other.data_) return true;
    return data_->kind == other.data_->kind && data_->p == other.data_->p && data_->modulus == other.data_->modulus;
}

// ---------------------------------------------------------------------------

FieldValue::FieldValue() : field_(), payload_(mpq_class(0)) {}

void FieldValue::require_same(const FieldValue &b) const
{
    if (!(field_ == b.field_)) {
        throw Error(ErrorKind::DescriptorMismatch, field_.descriptor() + " vs " + b.field_.descriptor());
    }
}

bool FieldValue::is_zero() const noexcept
{
    switch (payload_.index()) {
        case 0: return sgn(std::get<0>(payload_)) == 0;
        case 1: return std::get<1>(payload_) == 0;
        default: {
            for (u64 c : std::get<2>(payload_)) {
                if (c != 0) return false;
            }
            return true;
        }
    }
}

bool FieldValue::is_one() const noexcept
{
    switch (payload_.index()) {
        case 0: return std::get<0>(payload_) == 1;
        case 1: return std::get<1>(payload_) == 1;
        default: {
            const auto &c = std::get<2>(payload_);
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] != (i == 0 ? 1u : 0u)) return false;
            }
            return true;
        }
    }
}

FieldValue FieldValue::operator-() const
{
    const u64 p = field_.characteristic();
    switch (payload_.index()) {
        case 0: return FieldValue(field_, mpq_class(-std::get<0>(payload_)));
        case 1: return FieldValue(field_, detail::submod(0, std::get<1>(payload_), p));
        default: {
            auto c = std::get<2>(payload_);
            for (auto &x : c) x = detail::submod(0, x, p);
            return FieldValue(field_, std::move(c));
        }
    }
}

FieldValue &FieldValue::operator+=(const FieldValue &b)
{
    require_same(b);
    const u64 p = field_.characteristic();
    switch (payload_.index()) {
        case 0: std::get<0>(payload_) += std::get<0>(b.payload_); break;
        case 1: std::get<1>(payload_) = detail::addmod(std::get<1>(payload_), std::get<1>(b.payload_), p); break;
        default: {
            auto &c = std::get<2>(payload_);
            const auto &d = std::get<2>(b.payload_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::addmod(c[i], d[i], p);
        }
    }
    return *this;
}

FieldValue &FieldValue::operator-=(const FieldValue &b)
{
    require_same(b);
    const u64 p = field_.characteristic();
    switch (payload_.index()) {
        case 0: std::get<0>(payload_) -= std::get<0>(b.payload_); break;
        case 1: std::get<1>(payload_) = detail::submod(std::get<1>(payload_), std::get<1>(b.payload_), p); break;
        default: {
            auto &c = std::get<2>(payload_);
            const auto &d = std::get<2>(b.payload_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::submod(c[i], d[i], p);
        }
    }
    return *this;
}

FieldValue &FieldValue::operator*=(const FieldValue &b)
{
    require_same(b);
    const u64 p = field_.characteristic();
    switch (payload_.index()) {
        case 0: std::get<0>(payload_) *= std::get<0>(b.payload_); break;
        case 1: std::get<1>(payload_) = detail::mulmod(std::get<1>(payload_), std::get<1>(b.payload_), p); break;
        default: {
            auto prod = detail::fp_mulmod(std::get<2>(payload_), std::get<2>(b.payload_), field_.modulus(), p);
            prod.resize(static_cast<std::size_t>(field_.degree()), 0);
            std::get<2>(payload_) = std::move(prod);
        }
    }
    return *this;
}

FieldValue FieldValue::inverse() const
{
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + field_.descriptor());
    const u64 p = field_.characteristic();
    switch (payload_.index()) {
        case 0: return FieldValue(field_, mpq_class(1 / std::get<0>(payload_)));
        case 1: return FieldValue(field_, detail::invmod(std::get<1>(payload_), p));
        default: {
            auto a = std::get<2>(payload_);
            detail::fp_trim(a);
            auto [g, s] = detail::fp_gcd_inverse(a, field_.modulus(), p);
            s.resize(static_cast<std::size_t>(field_.degree()), 0);
            return FieldValue(field_, std::move(s));
        }
    }
}

FieldValue &FieldValue::operator/=(const FieldValue &b)
{
    require_same(b);
    return *this *= b.inverse();
}

FieldValue FieldValue::pow(long long e) const
{
    if (e < 0) return inverse().pow(-e);
    FieldValue result = field_.one();
    FieldValue base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

FieldValue FieldValue::frobenius() const
{
    if (field_.kind() != Field::Kind::Extension) return *this;
    return pow(static_cast<long long>(field_.characteristic()));
}

bool FieldValue::operator==(const FieldValue &b) const
{
    require_same(b);
    return payload_ == b.payload_;
}

const mpq_class &FieldValue::rational() const
{
    if (payload_.index() != 0) throw Error(ErrorKind::DescriptorMismatch, "not a rational value");
    return std::get<0>(payload_);
}

std::uint64_t FieldValue::residue() const
{
    if (payload_.index() != 1) throw Error(ErrorKind::DescriptorMismatch, "not a prime-field value");
    return std::get<1>(payload_);
}

const std::vector<std::uint64_t> &FieldValue::coefficients() const
{
    if (payload_.index() != 2) throw Error(ErrorKind::NotAnExtensionField, "not an extension-field value");
    return std::get<2>(payload_);
}

std::string FieldValue::coefficient_string() const
{
    switch (payload_.index()) {
        case 0: return std::get<0>(payload_).get_str();
        case 1: return std::to_string(std::get<1>(payload_));
        default: {
            auto c = std::get<2>(payload_);
            detail::fp_trim(c);
            if (c.size() <= 1) return z_poly_string(c);
            return "(" + z_poly_string(c) + ")";
        }
    }
}

std::string FieldValue::to_string() const
{
    switch (payload_.index()) {
        case 0: return std::get<0>(payload_).get_str();
        case 1: return std::to_string(std::get<1>(payload_)) + " mod " + std::to_string(field_.characteristic());
        default: {
            auto c = std::get<2>(payload_);
            detail::fp_trim(c);
            return z_poly_string(c);
        }
    }
}

std::strong_ordering FieldValue::canonical_compare(const FieldValue &b) const
{
    require_same(b);
    switch (payload_.index()) {
        case 0: {
            const int c = cmp(std::get<0>(payload_), std::get<0>(b.payload_));
            return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        case 1: return std::get<1>(payload_) <=> std::get<1>(b.payload_);
        default: {
            const auto &x = std::get<2>(payload_);
            const auto &y = std::get<2>(b.payload_);
            return std::lexicographical_compare_three_way(x.rbegin(), x.rend(), y.rbegin(), y.rend());
        }
    }
}

FieldValue arith(const FieldValue &a, const FieldValue &b, ArithOp op)
{
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return a;
}

namespace {

// Multiplication-by-a matrix over F_p: column j holds a*z^j in the z-basis.
std::vector<std::vector<u64>> multiplication_matrix(const FieldValue &a)
{
    const Field &F = a.field();
    const int d = F.degree();
    const u64 p = F.characteristic();
    std::vector<std::vector<u64>> m(static_cast<std::size_t>(d), std::vector<u64>(static_cast<std::size_t>(d), 0));
    std::vector<u64> zj = {1};
    for (int j = 0; j < d; ++j) {
        auto col = detail::fp_mulmod(a.coefficients(), zj, F.modulus(), p);
        for (std::size_t i = 0; i < col.size(); ++i) m[i][static_cast<std::size_t>(j)] = col[i];
        zj = detail::fp_mulmod(zj, {0, 1}, F.modulus(), p);
    }
    return m;
}

} // namespace

FieldValue norm_to_base(const FieldValue &a)
{
    if (a.field().kind() != Field::Kind::Extension) {
        throw Error(ErrorKind::NotAnExtensionField, a.field().descriptor() + " is not an extension field");
    }
    const Field base = a.field().prime_subfield();
    const u64 p = base.characteristic();
    auto m = multiplication_matrix(a);
    const std::size_t n = m.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return base.zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = detail::submod(0, det, p);
        }
        det = detail::mulmod(det, m[col][col], p);
        const u64 inv = detail::invmod(m[col][col], p);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const u64 f = detail::mulmod(m[r][col], inv, p);
            for (std::size_t c = col; c < n; ++c) m[r][c] = detail::submod(m[r][c], detail::mulmod(f, m[col][c], p), p);
        }
    }
    return base.from_int(static_cast<long long>(det));
}

FieldValue trace_to_base(const FieldValue &a)
{
    if (a.field().kind() != Field::Kind::Extension) {
        throw Error(ErrorKind::NotAnExtensionField, a.field().descriptor() + " is not an extension field");
    }
    const Field base = a.field().prime_subfield();
    const u64 p = base.characteristic();
    const auto m = multiplication_matrix(a);
    u64 tr = 0;
    for (std::size_t i = 0; i < m.size(); ++i) tr = detail::addmod(tr, m[i][i], p);
    return base.from_int(static_cast<long long>(tr));
}

FieldValue embed_prime(const FieldValue &a, const Field &extension)
{
    if (a.field() == extension) return a;
    if (a.field().kind() != Field::Kind::Prime || extension.characteristic() != a.field().characteristic()) {
        throw Error(ErrorKind::DescriptorMismatch, a.field().descriptor() + " does not embed in " + extension.descriptor());
    }
    return extension.from_int(static_cast<long long>(a.residue()));
}

} // namespace punctured
