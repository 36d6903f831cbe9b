#pragma once

// Truncated Laurent and power series with tracked precision.
//
// LaurentSeries is the working type: ascending powers of a local variable u,
// known exactly for exponents below `precision()`. TruncatedSeries is the
// at-infinity view used by the public API: a series in descending powers of
// a named variable t, stored internally as a LaurentSeries in u = t^-1.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <punctured/field.hpp>
#include <punctured/polynomial.hpp>

namespace punctured {

class LaurentSeries
{
public:
    // Precision used for exact data (constants, polynomials) that only ever
    // meets truncated operands.
    static constexpr int exact_precision = 1 << 28;

    // The unknown series O(u^prec).
    explicit LaurentSeries(Field field = Field(), int prec = 0);
    LaurentSeries(Field field, const std::map<int, FieldValue> &terms, int prec);

    static LaurentSeries monomial(const FieldValue &c, int exponent, int prec);
    static LaurentSeries from_upoly(const UPoly &a, int prec);

    const Field &field() const noexcept { return field_; }
    int precision() const noexcept { return prec_; }
    // Lowest exponent with a nonzero coefficient, or precision() if none is known.
    int valuation() const noexcept { return coeffs_.empty() ? prec_ : offset_; }
    int relative_precision() const noexcept { return prec_ - valuation(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Highest exponent carrying a nonzero coefficient; valuation() - 1 when zero.
    int top_exponent() const noexcept { return offset_ + static_cast<int>(coeffs_.size()) - 1; }

    // Throws PrecisionExhausted at or beyond the precision.
    FieldValue coeff(int e) const;
    std::vector<std::pair<int, FieldValue>> terms() const;
    FieldValue leading_coefficient() const;

    LaurentSeries operator-() const;
    LaurentSeries &operator+=(const LaurentSeries &b);
    LaurentSeries &operator-=(const LaurentSeries &b);
    LaurentSeries &operator*=(const LaurentSeries &b);
    LaurentSeries scaled(const FieldValue &c) const;
    // Multiplication by u^k.
    LaurentSeries shifted(int k) const;
    // NotAUnit unless a nonzero coefficient is known. Relative precision is kept.
    LaurentSeries inverse() const;
    LaurentSeries pow(long long e) const;
    LaurentSeries derivative() const;
    // Lowers the precision; never raises it.
    LaurentSeries truncated(int prec) const;

    // Equal coefficients on all exponents below min(precisions).
    bool agrees_with(const LaurentSeries &b) const;
    bool operator==(const LaurentSeries &b) const;

    // Ascending text in `var`, e.g. "z*p^-1 + 2 + O(p^3)".
    std::string to_string(const std::string &var = "u") const;

private:
    void normalize();

    Field field_;
    int offset_ = 0;
    std::vector<FieldValue> coeffs_; // nonzero at both ends when nonempty
    int prec_ = 0;
};

inline LaurentSeries operator+(LaurentSeries a, const LaurentSeries &b) { return a += b; }
inline LaurentSeries operator-(LaurentSeries a, const LaurentSeries &b) { return a -= b; }
inline LaurentSeries operator*(LaurentSeries a, const LaurentSeries &b) { return a *= b; }

// Evaluates a at the series s by Horner's rule.
LaurentSeries evaluate(const UPoly &a, const LaurentSeries &s);

class TruncatedSeries
{
public:
    TruncatedSeries() : TruncatedSeries(Field(), "t", 0) {}
    // The unknown series O(var^-N).
    TruncatedSeries(Field field, std::string var, int N);
    // Terms keyed by exponent of `var`; every exponent must exceed -N.
    TruncatedSeries(Field field, std::string var, const std::map<int, FieldValue> &terms, int N);
    TruncatedSeries(std::string var, LaurentSeries in_u) : var_(std::move(var)), s_(std::move(in_u)) {}

    static TruncatedSeries from_polynomial(const Polynomial &p, int N);
    static TruncatedSeries from_upoly(const UPoly &p, const std::string &var, int N);
    static TruncatedSeries monomial(const FieldValue &c, const std::string &var, int exponent, int N);

    const Field &field() const noexcept { return s_.field(); }
    const std::string &variable() const noexcept { return var_; }
    // Exponents > -N are known.
    int precision() const noexcept { return s_.precision(); }
    bool is_zero() const noexcept { return s_.is_zero(); }
    // Highest exponent present (the degree); -precision() when zero.
    int degree() const noexcept { return -s_.valuation(); }
    // max(0, degree()).
    int pole_order() const noexcept;
    // Lowest exponent present; only meaningful when nonzero.
    int lowest_exponent() const noexcept { return -s_.top_exponent(); }

    FieldValue coeff(int e) const { return s_.coeff(-e); }
    // Descending by exponent.
    std::vector<std::pair<int, FieldValue>> terms() const;
    const LaurentSeries &in_u() const noexcept { return s_; }

    TruncatedSeries operator-() const { return {var_, -s_}; }
    TruncatedSeries &operator+=(const TruncatedSeries &b);
    TruncatedSeries &operator-=(const TruncatedSeries &b);
    TruncatedSeries &operator*=(const TruncatedSeries &b);
    TruncatedSeries scaled(const FieldValue &c) const { return {var_, s_.scaled(c)}; }
    // Multiplication by var^k.
    TruncatedSeries shifted(int k) const { return {var_, s_.shifted(-k)}; }
    TruncatedSeries inverse() const { return {var_, s_.inverse()}; }
    TruncatedSeries pow(long long e) const { return {var_, s_.pow(e)}; }
    TruncatedSeries truncated(int N) const { return {var_, s_.truncated(N)}; }
    // Terms with exponent >= 0 (an exact polynomial in var).
    UPoly polynomial_part() const;
    // Terms with exponent < 0, same precision.
    TruncatedSeries principal_part_at_zero() const;

    bool agrees_with(const TruncatedSeries &b) const;
    bool operator==(const TruncatedSeries &b) const { return var_ == b.var_ && s_ == b.s_; }

    // "t^2 - t^-2 + O(t^-8)"
    std::string to_string() const;

private:
    void require_compatible(const TruncatedSeries &b) const;

    std::string var_;
    LaurentSeries s_;
};

inline TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
inline TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
inline TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries &b) { return a *= b; }

// Power series in X = x^-1, Y = y^-1, known for total degree below N.
class BiSeries
{
public:
    BiSeries() : BiSeries(Field(), {"x", "y"}, 0) {}
    BiSeries(Field field, std::array<std::string, 2> vars, int N);
    // Keys are (i, j) for the monomial x^-i y^-j.
    BiSeries(Field field, std::array<std::string, 2> vars, const std::map<std::pair<int, int>, FieldValue> &terms, int N);

    static BiSeries one(const Field &field, int N, std::array<std::string, 2> vars = {"x", "y"});

    const Field &field() const noexcept { return field_; }
    const std::array<std::string, 2> &variables() const noexcept { return vars_; }
    int precision() const noexcept { return prec_; }
    FieldValue coeff(int i, int j) const;
    // Nonzero terms ordered by total degree, then by i descending.
    std::vector<std::pair<std::pair<int, int>, FieldValue>> terms() const;
    bool is_zero() const;
    // Lowest total degree with a nonzero coefficient, precision() if none.
    int valuation() const;

    BiSeries operator-() const;
    BiSeries &operator+=(const BiSeries &b);
    BiSeries &operator-=(const BiSeries &b);
    BiSeries &operator*=(const BiSeries &b);
    BiSeries scaled(const FieldValue &c) const;
    // NotAUnit unless the constant term is nonzero.
    BiSeries inverse() const;
    BiSeries truncated(int N) const;

    // Constant term 1 and no pure x^-i or y^-j terms: the group G.
    bool in_G() const;

    bool agrees_with(const BiSeries &b) const;
    bool operator==(const BiSeries &b) const;

    // "1 + 3/2*x^-1*y^-1 - x^-2*y^-3 + O(deg 8)"
    std::string to_string() const;

private:
    std::size_t index(int i, int j) const;
    void require_compatible(const BiSeries &b) const;

    Field field_;
    std::array<std::string, 2> vars_;
    int prec_ = 0;
    std::vector<FieldValue> c_; // triangular: all (i, j) with i + j < prec_
};

inline BiSeries operator+(BiSeries a, const BiSeries &b) { return a += b; }
inline BiSeries operator-(BiSeries a, const BiSeries &b) { return a -= b; }
inline BiSeries operator*(BiSeries a, const BiSeries &b) { return a *= b; }

// Shared helper for printing a signed term list.
void append_term(std::string &out, const FieldValue &c, const std::string &monomial);

} // namespace punctured
