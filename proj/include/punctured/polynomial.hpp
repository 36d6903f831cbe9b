#pragma once

// Sparse polynomials in one or two named variables with non-negative exponents.

#include <array>
#include <map>
#include <string>
#include <vector>

#include <punctured/field.hpp>
#include <punctured/upoly.hpp>

namespace punctured {

class Polynomial
{
public:
    // For one variable the second exponent is always 0.
    using Exponent = std::array<int, 2>;
    using TermMap = std::map<Exponent, FieldValue>;

    Polynomial() : Polynomial(Field(), {"t"}) {}
    Polynomial(Field field, std::vector<std::string> variables);

    static Polynomial constant(const Field &field, std::vector<std::string> variables, const FieldValue &c);
    static Polynomial variable(const Field &field, std::vector<std::string> variables, int index);
    static Polynomial from_upoly(const UPoly &a, const std::string &var);

    const Field &field() const noexcept { return field_; }
    const std::vector<std::string> &variables() const noexcept { return vars_; }
    int nvars() const noexcept { return static_cast<int>(vars_.size()); }
    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    FieldValue coeff(Exponent e) const;
    // Adds c * monomial(e); zero results are dropped.
    void add_term(Exponent e, const FieldValue &c);

    // -1 for the zero polynomial.
    int degree(int var) const;
    int total_degree() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &b);
    Polynomial &operator-=(const Polynomial &b);
    Polynomial &operator*=(const Polynomial &b);
    Polynomial scaled(const FieldValue &c) const;
    Polynomial pow(unsigned e) const;

    // P = sum_i c_i * var^i; each c_i is a polynomial in the remaining
    // variable, returned as a UPoly.
    std::vector<UPoly> coefficients_in(int var) const;
    // Only for one-variable polynomials.
    UPoly to_upoly() const;
    // Content normalisation: leading coefficient (in the order of `terms()`,
    // highest exponent last) made 1.
    Polynomial monic_normalized() const;

    bool operator==(const Polynomial &b) const;
    std::string to_string() const;

private:
    void require_compatible(const Polynomial &b) const;

    Field field_;
    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
inline Polynomial operator*(Polynomial a, const Polynomial &b) { return a *= b; }

// Builds the two-variable polynomial sum_i c_i(y) x^i.
Polynomial from_coefficients_in_x(const Field &field, const std::vector<UPoly> &coeffs,
                                  std::vector<std::string> variables = {"x", "y"});

} // namespace punctured
