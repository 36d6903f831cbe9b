#pragma once

// Unit groups of the affine-plane computation.
//
// Each chart ring is a series in a level variable with Laurent-polynomial
// coefficients in a ratio variable:
//   G12: level X = x^-1, ratio s = x/y; x^a y^b = s^-b X^-(a+b)
//   G1 : level X = x^-1, ratio r = y/x; x^a y^b = r^b  X^-(a+b)
//   G2 : level Y = y^-1, ratio q = x/y; x^a y^b = q^a  Y^-(a+b)
// so in every chart the level of x^a y^b is -(a+b). Precision N means levels
// below N are known, written "O(deg N)" as for BiSeries.

#include <map>
#include <string>
#include <vector>

#include <punctured/field.hpp>
#include <punctured/series.hpp>

namespace punctured {

enum class Chart { G1, G2, G12 };
std::string chart_name(Chart c);

class LaurentPoly
{
public:
    explicit LaurentPoly(Field field = Field()) : field_(std::move(field)) {}
    LaurentPoly(Field field, const std::map<int, FieldValue> &terms);
    static LaurentPoly monomial(const FieldValue &c, int e);

    const Field &field() const noexcept { return field_; }
    const std::map<int, FieldValue> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    int min_exponent() const;
    int max_exponent() const;
    FieldValue coeff(int e) const;
    void add_term(int e, const FieldValue &c);

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &b);
    LaurentPoly &operator-=(const LaurentPoly &b);
    LaurentPoly operator*(const LaurentPoly &b) const;
    LaurentPoly scaled(const FieldValue &c) const;
    LaurentPoly shifted(int k) const;
    // Terms with exponent in [lo, hi].
    LaurentPoly restricted(int lo, int hi) const;

    bool operator==(const LaurentPoly &b) const { return field_ == b.field_ && terms_ == b.terms_; }
    std::string to_string(const std::string &var) const;

private:
    Field field_;
    std::map<int, FieldValue> terms_;
};

inline LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
inline LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }

// A general element of a chart ring (not necessarily a unit).
class ChartSeries
{
public:
    ChartSeries() : ChartSeries(Chart::G12, Field(), 0) {}
    ChartSeries(Chart chart, Field field, int N);

    // c * x^a * y^b.
    static ChartSeries monomial(Chart chart, const FieldValue &c, int a, int b, int N);
    static ChartSeries constant(Chart chart, const FieldValue &c, int N) { return monomial(chart, c, 0, 0, N); }
    // Places a Laurent polynomial at one level directly.
    static ChartSeries from_level(Chart chart, const LaurentPoly &p, int level, int N);

    Chart chart() const noexcept { return chart_; }
    const Field &field() const noexcept { return field_; }
    int precision() const noexcept { return prec_; }
    // Lowest level with a nonzero coefficient, precision() if none.
    int valuation() const noexcept;
    bool is_zero() const noexcept { return valuation() >= prec_; }
    LaurentPoly level(int k) const;
    // The exponents (a, b) of x^a y^b for ratio exponent e at level k.
    std::pair<int, int> xy_exponents(int k, int e) const;

    ChartSeries operator-() const;
    ChartSeries &operator+=(const ChartSeries &b);
    ChartSeries &operator-=(const ChartSeries &b);
    ChartSeries &operator*=(const ChartSeries &b);
    ChartSeries scaled(const FieldValue &c) const;
    // NotAUnit unless the lowest known level is a single monomial.
    ChartSeries inverse() const;
    ChartSeries pow(long long e) const;
    ChartSeries truncated(int N) const;

    bool agrees_with(const ChartSeries &b) const;
    bool operator==(const ChartSeries &b) const;
    std::string to_string() const;

private:
    void require_compatible(const ChartSeries &b) const;
    void normalize();

    Chart chart_;
    Field field_;
    int offset_ = 0;
    std::vector<LaurentPoly> c_;
    int prec_ = 0;
};

inline ChartSeries operator+(ChartSeries a, const ChartSeries &b) { return a += b; }
inline ChartSeries operator-(ChartSeries a, const ChartSeries &b) { return a -= b; }
inline ChartSeries operator*(ChartSeries a, const ChartSeries &b) { return a *= b; }

// scalar * ratio^n * (1 + sum_{k>=1} level^k a_k), n = 0 outside G12.
class ChartUnit
{
public:
    ChartUnit() : ChartUnit(one(Chart::G12, Field(), 1)) {}
    // Throws NotAUnit or MalformedCocycle when s is not a unit of its chart.
    explicit ChartUnit(ChartSeries s);

    static ChartUnit one(Chart chart, const Field &field, int N);
    // (x/y)^n in G12.
    static ChartUnit ratio_power(const Field &field, int n, int N);
    // scalar * ratio^n * (1 + sum_k level^k tail[k-1]).
    static ChartUnit from_parts(Chart chart, const FieldValue &scalar, int n, const std::vector<LaurentPoly> &tail, int N);

    Chart chart() const noexcept { return s_.chart(); }
    const Field &field() const noexcept { return s_.field(); }
    int order() const noexcept { return s_.precision(); }
    const FieldValue &scalar() const noexcept { return scalar_; }
    int exponent() const noexcept { return n_; }
    const ChartSeries &series() const noexcept { return s_; }
    // Coefficient a_k of the normalised part 1 + sum level^k a_k (a_0 = 1).
    LaurentPoly normalized_term(int k) const;

    ChartUnit operator*(const ChartUnit &b) const;
    ChartUnit inverse() const;
    ChartUnit truncated(int N) const { return ChartUnit(s_.truncated(N)); }

    bool agrees_with(const ChartUnit &b) const { return s_.agrees_with(b.s_); }
    bool operator==(const ChartUnit &b) const { return s_ == b.s_; }
    std::string to_string() const { return s_.to_string(); }

private:
    ChartSeries s_;
    FieldValue scalar_;
    int n_ = 0;
    ChartSeries normalized_; // (scalar * ratio^n)^-1 * s_
};

// G1 or G2 unit re-expanded in G12 coordinates (identity on G12).
ChartUnit chart_embed(const ChartUnit &u);
// (x/y)^n * g for g in G (g need not be checked here; see picard).
ChartUnit chart_embed(int n, const BiSeries &g);
// Plain change of coordinates for ring elements.
ChartSeries to_g12(const ChartSeries &s);
ChartSeries to_g12(const BiSeries &g);

// For c in F^n G12 (n >= 1), the coefficient of x^-n as a Laurent polynomial
// in x/y; for n = 0 the leading scalar * (x/y)^exponent.
LaurentPoly filtration_graded_piece(const ChartUnit &c, int n);

} // namespace punctured
