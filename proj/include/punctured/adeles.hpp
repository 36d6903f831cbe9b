#pragma once

// Function-field arithmetic on P^1 over F_p (all closed points) or Q
// (rational points and infinity).

#include <string>
#include <vector>

#include <punctured/operator.hpp>
#include <punctured/rank.hpp>
#include <punctured/series.hpp>
#include <punctured/upoly.hpp>

namespace punctured {

class RationalFunction
{
public:
    explicit RationalFunction(Field field = Field(), std::string var = "t");
    // Reduced with a monic denominator; DivisionByZero if den = 0.
    RationalFunction(UPoly num, UPoly den, std::string var = "t");
    static RationalFunction polynomial(UPoly p, std::string var = "t");
    static RationalFunction variable(const Field &F, std::string var = "t");
    static RationalFunction constant(const FieldValue &c, std::string var = "t");

    const Field &field() const noexcept { return num_.field(); }
    const std::string &variable() const noexcept { return var_; }
    const UPoly &numerator() const noexcept { return num_; }
    const UPoly &denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction &operator+=(const RationalFunction &b);
    RationalFunction &operator-=(const RationalFunction &b);
    RationalFunction &operator*=(const RationalFunction &b);
    RationalFunction &operator/=(const RationalFunction &b);
    RationalFunction derivative() const;

    bool operator==(const RationalFunction &b) const { return num_ == b.num_ && den_ == b.den_; }
    // "(t^2 + 1) / (t - 1)", or just the numerator when den = 1.
    std::string to_string() const;

private:
    void require_compatible(const RationalFunction &b) const;

    UPoly num_, den_;
    std::string var_;
};

inline RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
inline RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
inline RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
inline RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }

// A closed point of P^1: infinity, or a monic irreducible pi.
class Place
{
public:
    static Place infinity(const Field &k);
    // Over Q, and over non-prime finite fields, only degree 1 is supported.
    static Place finite(const UPoly &pi);
    // The place t = a.
    static Place point(const FieldValue &a);

    bool is_infinity() const noexcept { return infinite_; }
    const Field &base() const noexcept { return base_; }
    const Field &residue_field() const noexcept { return residue_; }
    const UPoly &pi() const;
    int degree() const noexcept { return infinite_ ? 1 : pi_.degree(); }
    // The class of t in the residue field (finite places).
    const FieldValue &theta() const;
    // Value of a base-field element in the residue field.
    FieldValue lift(const FieldValue &c) const;
    FieldValue trace(const FieldValue &c) const;
    FieldValue norm(const FieldValue &c) const;

    // "inf", or pi written in `var`.
    std::string label(const std::string &var = "t") const;
    // Name of the uniformizer variable in printed expansions.
    std::string uniformizer_name() const { return infinite_ ? "u" : "pi"; }

    bool operator==(const Place &b) const;

private:
    Place() = default;
    bool infinite_ = false;
    Field base_, residue_;
    UPoly pi_;
    FieldValue theta_;
};

struct LocalExpansion {
    Place place;
    LaurentSeries series; // in the uniformizer, over the residue field
    int valuation = 0;
    std::string to_string() const { return series.to_string(place.uniformizer_name()); }
};

// Exact to N terms past the valuation. The coefficients lie in the residue
// field embedded as the coefficient field (t = theta + c_1 pi + ...).
LocalExpansion local_expand(const RationalFunction &f, const Place &place, int N);
int ord(const RationalFunction &f, const Place &place);

// Tr_{k(p)/k} res_p(f dg).
FieldValue residue(const RationalFunction &f, const RationalFunction &g, const Place &place);

// Places where some f has a pole (and a zero, if `zeros`), plus infinity.
// Over Q, Unsupported names any irreducible factor of degree >= 2.
std::vector<Place> support_places(const std::vector<RationalFunction> &fs, bool zeros = true);

struct PlaceValue {
    Place place;
    FieldValue value;
};

// Sums over the poles of f and g and infinity: the only places where f dg can have a residue.
struct ResidueReport {
    std::vector<PlaceValue> table;
    FieldValue sum;
    bool passed = false;
};
ResidueReport residue_theorem_check(const RationalFunction &f, const RationalFunction &g);

// (-1)^(ab) lc(f)^b / lc(g)^a with a = ord f, b = ord g, in k(p).
FieldValue hilbert_symbol(const RationalFunction &f, const RationalFunction &g, const Place &place);

struct WeilReport {
    std::vector<PlaceValue> table; // norms to k
    FieldValue product;
    bool passed = false;
};
WeilReport weil_reciprocity_check(const RationalFunction &f, const RationalFunction &g);

// Multiplication by a on K_p / O_p with basis e_k = pi^-(k+1), using the
// monomial splitting. Only defined modulo finite rank: the ideal
// {x : a x in O_p} has codimension max(0, -ord a) in O_p.
struct AdeleLocalAction {
    WindowedOperator op;
    int codimension = 0;
};
AdeleLocalAction adele_local_action(const LocalExpansion &a, int window);

struct Prop71Report {
    int precision = 0;
    int kernel_dim = 0, cokernel_dim = 0;
    bool constants_vanish = false;
    RankCertificate intertwining;
    bool passed = false;
};
// u : k[t]_{deg <= N} -> (K_inf / O_inf)_{pole <= N} over the given field.
Prop71Report prop71_check(int N, const Field &F = Field::rationals());

} // namespace punctured
