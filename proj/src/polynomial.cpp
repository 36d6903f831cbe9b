#include <punctured/polynomial.hpp>

#include <algorithm>

namespace punctured {

Polynomial::Polynomial(Field field, std::vector<std::string> variables) : field_(std::move(field)), vars_(std::move(variables))
{
    if (vars_.empty() || vars_.size() > 2) throw Error(ErrorKind::InvalidArgument, "polynomials take one or two variables");
    if (vars_.size() == 2 && vars_[0] == vars_[1]) throw Error(ErrorKind::InvalidArgument, "repeated variable " + vars_[0]);
}

Polynomial Polynomial::constant(const Field &field, std::vector<std::string> variables, const FieldValue &c)
{
    Polynomial p(field, std::move(variables));
    p.add_term({0, 0}, c);
    return p;
}

Polynomial Polynomial::variable(const Field &field, std::vector<std::string> variables, int index)
{
    Polynomial p(field, std::move(variables));
    if (index < 0 || index >= p.nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    Exponent e{0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, field.one());
    return p;
}

Polynomial Polynomial::from_upoly(const UPoly &a, const std::string &var)
{
    Polynomial p(a.field(), {var});
    for (int k = 0; k <= a.degree(); ++k) p.add_term({k, 0}, a.coeff(k));
    return p;
}

FieldValue Polynomial::coeff(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(Exponent e, const FieldValue &c)
{
    if (e[0] < 0 || e[1] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in a polynomial");
    if (nvars() == 1 && e[1] != 0) throw Error(ErrorKind::InvalidArgument, "second exponent in a one-variable polynomial");
    if (!(c.field() == field_)) throw Error(ErrorKind::DescriptorMismatch, "polynomial coefficient field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::degree(int var) const
{
    int d = -1;
    for (const auto &[e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto &[e, c] : terms_) d = std::max(d, e[0] + e[1]);
    return d;
}

void Polynomial::require_compatible(const Polynomial &b) const
{
    if (!(field_ == b.field_)) throw Error(ErrorKind::DescriptorMismatch, "polynomials over different fields");
    if (vars_ != b.vars_) throw Error(ErrorKind::VariableMismatch, "polynomials in different variables");
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(field_, vars_);
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &b)
{
    require_compatible(b);
    for (const auto &[e, c] : b.terms_) add_term(e, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &b)
{
    require_compatible(b);
    for (const auto &[e, c] : b.terms_) add_term(e, -c);
    return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &b)
{
    require_compatible(b);
    Polynomial r(field_, vars_);
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

Polynomial Polynomial::scaled(const FieldValue &c) const
{
    Polynomial r(field_, vars_);
    for (const auto &[e, x] : terms_) r.add_term(e, x * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(field_, vars_, field_.one());
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::vector<UPoly> Polynomial::coefficients_in(int var) const
{
    const int other = 1 - var;
    std::vector<std::vector<FieldValue>> raw(static_cast<std::size_t>(std::max(degree(var) + 1, 0)));
    for (const auto &[e, c] : terms_) {
        auto &row = raw[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])];
        const int k = nvars() == 2 ? e[static_cast<std::size_t>(other)] : 0;
        if (static_cast<int>(row.size()) <= k) row.resize(static_cast<std::size_t>(k + 1), field_.zero());
        row[static_cast<std::size_t>(k)] = c;
    }
    std::vector<UPoly> out;
    for (auto &row : raw) out.emplace_back(field_, std::move(row));
    return out;
}

UPoly Polynomial::to_upoly() const
{
    if (nvars() != 1) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in one variable");
    std::vector<FieldValue> v(static_cast<std::size_t>(std::max(degree(0) + 1, 0)), field_.zero());
    for (const auto &[e, c] : terms_) v[static_cast<std::size_t>(e[0])] = c;
    return UPoly(field_, std::move(v));
}

Polynomial Polynomial::monic_normalized() const
{
    if (is_zero()) return *this;
    return scaled(terms_.rbegin()->second.inverse());
}

bool Polynomial::operator==(const Polynomial &b) const
{
    return field_ == b.field_ && vars_ == b.vars_ && terms_ == b.terms_;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    // Descending total degree, then descending in the first variable.
    std::vector<std::pair<Exponent, FieldValue>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        const int da = a.first[0] + a.first[1], db = b.first[0] + b.first[1];
        if (da != db) return da > db;
        return a.first[0] > b.first[0];
    });
    std::string out;
    for (const auto &[e, c] : order) {
        std::string cs = c.coefficient_string();
        const bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (int v = 0; v < nvars(); ++v) {
            const int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[static_cast<std::size_t>(v)];
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

Polynomial from_coefficients_in_x(const Field &field, const std::vector<UPoly> &coeffs, std::vector<std::string> variables)
{
    Polynomial p(field, std::move(variables));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (int j = 0; j <= coeffs[i].degree(); ++j) p.add_term({static_cast<int>(i), j}, coeffs[i].coeff(j));
    return p;
}

} // namespace punctured
