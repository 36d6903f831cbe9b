#pragma once

// Canonical text syntax for fields, polynomials, series and rational
// functions. Everything printed by a to_string() in this library parses back
// to an equal value.
//
//   expr    := ['-'] term (('+' | '-') term)* [('+' | '-') bigO]  |  bigO
//   term    := factor (('*' | '/' | <juxtaposition>) factor)*
//   factor  := atom ['^' ['-'] integer]
//   atom    := integer | identifier | '(' expr ')' | '-' atom
//   bigO    := 'O' '(' identifier ['^' ['-'] integer] ')'  |  'O' '(' 'deg' integer ')'
//
// Over an extension field the identifier z is the generator.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <punctured/adeles.hpp>
#include <punctured/chart.hpp>
#include <punctured/polynomial.hpp>
#include <punctured/series.hpp>

namespace punctured {

struct Node {
    enum class Kind { Number, Identifier, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind;
    std::size_t offset = 0;
    mpz_class number;     // Number
    std::string name;     // Identifier
    long exponent = 0;    // Pow
    std::shared_ptr<const Node> lhs, rhs;
};
using NodePtr = std::shared_ptr<const Node>;

struct BigO {
    std::size_t offset = 0;
    bool total_degree = false; // O(deg N)
    std::string var;
    long exponent = 0; // O(var^e), or N for O(deg N)
};

struct Expression {
    NodePtr root; // null when the input is only a BigO term
    std::optional<BigO> big_o;
};

Expression parse_expression(const std::string &text);

// "q", "fp:<p>", "fq:<p>:<monic modulus in z>".
Field parse_field(const std::string &text);
FieldValue parse_value(const Field &F, const std::string &text);

// Variables default to {"x", "y"} when the text mentions y, else {"x"}.
Polynomial parse_polynomial(const Field &F, const std::string &text, std::vector<std::string> vars);
UPoly parse_upoly(const Field &F, const std::string &text, const std::string &var = "t");

// Precision from O(var^-N); `default_precision` when absent.
TruncatedSeries parse_truncated_series(const Field &F, const std::string &text, const std::string &var, int default_precision);
// Precision from O(deg N) in both.
BiSeries parse_biseries(const Field &F, const std::string &text, int default_precision);
ChartSeries parse_chart_series(const Field &F, Chart chart, const std::string &text, int default_precision);

RationalFunction parse_rational_function(const Field &F, const std::string &text, const std::string &var = "t");

} // namespace punctured
