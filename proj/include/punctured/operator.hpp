#pragma once

// Column-finite operators on based vector spaces, evaluated on degree windows.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <punctured/field.hpp>
#include <punctured/polynomial.hpp>

namespace punctured {

struct Index {
    int i = 0;
    int j = 0;
    auto operator<=>(const Index &) const = default;
};

enum class BasisKind { Monomials1D, Monomials2D, Sequence, Grid };
std::string basis_kind_name(BasisKind k);
BasisKind basis_kind_from_name(const std::string &s);

// Index sets t^m, x^i y^j, e_i, e_{ij}; degree is m, i + j, i, i + j.
class BasisScheme
{
public:
    BasisScheme() = default;
    explicit BasisScheme(BasisKind kind, std::vector<std::string> names = {});

    static BasisScheme monomials1d(std::string var = "t") { return BasisScheme(BasisKind::Monomials1D, {std::move(var)}); }
    static BasisScheme monomials2d(std::string x = "x", std::string y = "y")
    {
        return BasisScheme(BasisKind::Monomials2D, {std::move(x), std::move(y)});
    }
    static BasisScheme sequence() { return BasisScheme(BasisKind::Sequence, {"e"}); }
    static BasisScheme grid() { return BasisScheme(BasisKind::Grid, {"e"}); }

    BasisKind kind() const noexcept { return kind_; }
    const std::vector<std::string> &names() const noexcept { return names_; }
    bool two_dimensional() const noexcept { return kind_ == BasisKind::Monomials2D || kind_ == BasisKind::Grid; }
    int degree(Index b) const noexcept { return two_dimensional() ? b.i + b.j : b.i; }
    bool valid(Index b) const noexcept { return b.i >= 0 && b.j >= 0 && (two_dimensional() || b.j == 0); }
    // Degree-d indices, ordered by i descending.
    std::vector<Index> of_degree(int d) const;
    // All indices of degree <= W, by degree.
    std::vector<Index> up_to(int W) const;
    std::size_t count_up_to(int W) const;
    std::string index_name(Index b) const;

    bool operator==(const BasisScheme &b) const { return kind_ == b.kind_ && names_ == b.names_; }

private:
    BasisKind kind_ = BasisKind::Monomials1D;
    std::vector<std::string> names_{"t"};
};

// A finite formal linear combination of basis indices.
class Combination
{
public:
    explicit Combination(Field field = Field()) : field_(std::move(field)) {}
    static Combination basis(const Field &field, Index b);

    const Field &field() const noexcept { return field_; }
    const std::map<Index, FieldValue> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    FieldValue coeff(Index b) const;
    void add(Index b, const FieldValue &c);

    Combination operator-() const;
    Combination &operator+=(const Combination &b);
    Combination &operator-=(const Combination &b);
    Combination scaled(const FieldValue &c) const;

    bool operator==(const Combination &b) const { return field_ == b.field_ && terms_ == b.terms_; }
    std::string to_string(const BasisScheme &scheme) const;

private:
    Field field_;
    std::map<Index, FieldValue> terms_;
};

inline Combination operator+(Combination a, const Combination &b) { return a += b; }
inline Combination operator-(Combination a, const Combination &b) { return a -= b; }

// Image of the operator is contained in the span of `span`, for every index,
// not just the window. Attached by constructors that know this by derivation.
struct ImageBound {
    std::vector<Index> span;
    std::string reason;
};

class WindowedOperator
{
public:
    using Rule = std::function<Combination(Index)>;

    WindowedOperator() = default;
    // The rule is certified for source indices of degree <= window and maps a
    // degree-d index into degrees <= d + growth.
    WindowedOperator(std::string name, Field field, BasisScheme source, BasisScheme target, Rule rule, int window, int growth);

    static WindowedOperator identity(const Field &field, const BasisScheme &scheme, int window);
    static WindowedOperator zero(const Field &field, const BasisScheme &source, const BasisScheme &target, int window);
    // Rule given as an explicit table over all source indices of degree <= window.
    static WindowedOperator from_table(std::string name, const Field &field, const BasisScheme &source, const BasisScheme &target,
                                       const std::map<Index, Combination> &table, int window, int growth);

    const std::string &name() const noexcept { return name_; }
    const Field &field() const noexcept { return field_; }
    const BasisScheme &source() const noexcept { return source_; }
    const BasisScheme &target() const noexcept { return target_; }
    int window() const noexcept { return window_; }
    int growth() const noexcept { return growth_; }
    const std::optional<ImageBound> &image_bound() const noexcept { return bound_; }

    // WindowExceeded outside the window.
    Combination apply(Index b) const;
    Combination apply(const Combination &v) const;
    // (index, image) for every source index of degree <= W.
    std::vector<std::pair<Index, Combination>> tabulate(int W) const;

    WindowedOperator renamed(std::string name) const;
    WindowedOperator with_window(int W) const;
    WindowedOperator with_image_bound(ImageBound bound) const;
    WindowedOperator scaled(const FieldValue &c) const;

private:
    std::string name_;
    Field field_;
    BasisScheme source_, target_;
    std::shared_ptr<const Rule> rule_;
    int window_ = 0;
    int growth_ = 0;
    std::optional<ImageBound> bound_;
};

WindowedOperator operator+(const WindowedOperator &a, const WindowedOperator &b);
WindowedOperator operator-(const WindowedOperator &a, const WindowedOperator &b);
// a after b.
WindowedOperator compose(const WindowedOperator &a, const WindowedOperator &b);
WindowedOperator commutator(const WindowedOperator &a, const WindowedOperator &b);

// Multiplication by a polynomial on k[t] (one variable) or k[x,y] (two).
WindowedOperator multiplication_operator(const Polynomial &p, int window);

} // namespace punctured
