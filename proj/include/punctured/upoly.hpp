#pragma once

// Dense univariate polynomials over an exact field, low degree first.

#include <string>
#include <utility>
#include <vector>

#include <punctured/field.hpp>

namespace punctured {

class UPoly
{
public:
    explicit UPoly(Field field = Field()) : field_(std::move(field)) {}
    UPoly(Field field, std::vector<FieldValue> coeffs);

    static UPoly constant(const FieldValue &c);
    static UPoly monomial(const FieldValue &c, int degree);
    // x - a
    static UPoly linear(const FieldValue &root);

    const Field &field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<FieldValue> &coefficients() const noexcept { return coeffs_; }
    FieldValue coeff(int k) const;
    FieldValue lead() const;

    UPoly operator-() const;
    UPoly &operator+=(const UPoly &b);
    UPoly &operator-=(const UPoly &b);
    UPoly &operator*=(const UPoly &b);
    UPoly scaled(const FieldValue &c) const;
    std::pair<UPoly, UPoly> divmod(const UPoly &b) const;
    UPoly monic() const;
    UPoly derivative() const;
    FieldValue operator()(const FieldValue &x) const;

    bool operator==(const UPoly &b) const;

    std::string to_string(const std::string &var = "t") const;

private:
    void trim();

    Field field_;
    std::vector<FieldValue> coeffs_;
};

inline UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
inline UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
inline UPoly operator*(UPoly a, const UPoly &b) { return a *= b; }

UPoly gcd(UPoly a, UPoly b); // monic, or zero

struct Factor {
    UPoly poly; // monic irreducible
    int multiplicity = 1;
};

// Complete factorisation into monic irreducibles over F_p (Cantor-Zassenhaus).
// Over Q only linear factors are split off; any remaining part of degree >= 1
// is returned as a single (not necessarily irreducible) entry with
// `fully_split == false`.
struct Factorization {
    FieldValue unit;
    std::vector<Factor> factors;
    bool fully_split = true;
};
Factorization factor(const UPoly &a);

// Roots in the coefficient field (with multiplicity). Supported over Q, F_p,
// and extension fields small enough to enumerate.
std::vector<std::pair<FieldValue, int>> roots(const UPoly &a);

// ord_pi(a) for a nonzero and pi nonconstant.
int valuation(const UPoly &a, const UPoly &pi);

} // namespace punctured
