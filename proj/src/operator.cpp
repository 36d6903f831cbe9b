#include <punctured/operator.hpp>

#include <algorithm>

namespace punctured {

std::string basis_kind_name(BasisKind k)
{
    switch (k) {
        case BasisKind::Monomials1D: return "monomials1d";
        case BasisKind::Monomials2D: return "monomials2d";
        case BasisKind::Sequence: return "sequence";
        case BasisKind::Grid: return "grid";
    }
    return "?";
}

BasisKind basis_kind_from_name(const std::string &s)
{
    for (BasisKind k : {BasisKind::Monomials1D, BasisKind::Monomials2D, BasisKind::Sequence, BasisKind::Grid})
        if (basis_kind_name(k) == s) return k;
    throw Error(ErrorKind::InvalidArgument, "unknown basis kind '" + s + "'");
}

BasisScheme::BasisScheme(BasisKind kind, std::vector<std::string> names) : kind_(kind), names_(std::move(names))
{
    if (names_.empty()) {
        switch (kind_) {
            case BasisKind::Monomials1D: names_ = {"t"}; break;
            case BasisKind::Monomials2D: names_ = {"x", "y"}; break;
            default: names_ = {"e"}; break;
        }
    }
    const std::size_t want = kind_ == BasisKind::Monomials2D ? 2 : 1;
    if (names_.size() != want) throw Error(ErrorKind::InvalidArgument, "wrong number of names for a " + basis_kind_name(kind_) + " basis");
}

std::vector<Index> BasisScheme::of_degree(int d) const
{
    if (d < 0) return {};
    if (!two_dimensional()) return {Index{d, 0}};
    std::vector<Index> out;
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
    return out;
}

std::vector<Index> BasisScheme::up_to(int W) const
{
    std::vector<Index> out;
    for (int d = 0; d <= W; ++d) {
        auto part = of_degree(d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::size_t BasisScheme::count_up_to(int W) const
{
    if (W < 0) return 0;
    const auto n = static_cast<std::size_t>(W + 1);
    return two_dimensional() ? n * (n + 1) / 2 : n;
}

std::string BasisScheme::index_name(Index b) const
{
    auto pw = [](const std::string &v, int e) {
        if (e == 0) return std::string();
        return e == 1 ? v : v + "^" + std::to_string(e);
    };
    switch (kind_) {
        case BasisKind::Monomials1D: return b.i == 0 ? "1" : pw(names_[0], b.i);
        case BasisKind::Monomials2D: {
            if (b.i == 0 && b.j == 0) return "1";
            std::string s = pw(names_[0], b.i);
            if (b.j) s += (s.empty() ? "" : "*") + pw(names_[1], b.j);
            return s;
        }
        case BasisKind::Sequence: return names_[0] + "_" + std::to_string(b.i);
        case BasisKind::Grid: return names_[0] + "_{" + std::to_string(b.i) + "," + std::to_string(b.j) + "}";
    }
    return "?";
}

// ------------------------------------------------------------------ Combination

Combination Combination::basis(const Field &field, Index b)
{
    Combination c(field);
    c.add(b, field.one());
    return c;
}

FieldValue Combination::coeff(Index b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Combination::add(Index b, const FieldValue &c)
{
    if (!(c.field() == field_)) throw Error(ErrorKind::DescriptorMismatch, "combination coefficient field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Combination Combination::operator-() const
{
    Combination r(field_);
    for (const auto &[b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

Combination &Combination::operator+=(const Combination &b)
{
    for (const auto &[i, c] : b.terms_) add(i, c);
    return *this;
}

Combination &Combination::operator-=(const Combination &b)
{
    for (const auto &[i, c] : b.terms_) add(i, -c);
    return *this;
}

Combination Combination::scaled(const FieldValue &c) const
{
    Combination r(field_);
    for (const auto &[i, x] : terms_) r.add(i, x * c);
    return r;
}

std::string Combination::to_string(const BasisScheme &scheme) const
{
    if (terms_.empty()) return "0";
    std::vector<std::pair<Index, FieldValue>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [&](const auto &a, const auto &b) {
        const int da = scheme.degree(a.first), db = scheme.degree(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::string out;
    for (const auto &[i, c] : order) {
        std::string cs = c.coefficient_string();
        const bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string name = scheme.index_name(i);
        if (name == "1") out += cs;
        else if (cs == "1") out += name;
        else out += cs + "*" + name;
    }
    return out;
}

// ------------------------------------------------------------- WindowedOperator

WindowedOperator::WindowedOperator(std::string name, Field field, BasisScheme source, BasisScheme target, Rule rule, int window, int growth)
    : name_(std::move(name)), field_(std::move(field)), source_(std::move(source)), target_(std::move(target)),
      rule_(std::make_shared<const Rule>(std::move(rule))), window_(window), growth_(growth)
{
    if (window_ < 0) throw Error(ErrorKind::WindowExceeded, "operator " + name_ + " has negative window " + std::to_string(window_));
}

WindowedOperator WindowedOperator::identity(const Field &field, const BasisScheme &scheme, int window)
{
    return WindowedOperator("id", field, scheme, scheme, [field](Index b) { return Combination::basis(field, b); }, window, 0);
}

WindowedOperator WindowedOperator::zero(const Field &field, const BasisScheme &source, const BasisScheme &target, int window)
{
    WindowedOperator z("0", field, source, target, [field](Index) { return Combination(field); }, window, 0);
    return z.with_image_bound({{}, "zero operator"});
}

WindowedOperator WindowedOperator::from_table(std::string name, const Field &field, const BasisScheme &source, const BasisScheme &target,
                                              const std::map<Index, Combination> &table, int window, int growth)
{
    for (Index b : source.up_to(window)) {
        if (!table.count(b)) throw Error(ErrorKind::InvalidArgument, "operator table misses " + source.index_name(b));
    }
    auto shared = std::make_shared<const std::map<Index, Combination>>(table);
    return WindowedOperator(std::move(name), field, source, target, [shared, field](Index b) {
        auto it = shared->find(b);
        return it == shared->end() ? Combination(field) : it->second;
    }, window, growth);
}

Combination WindowedOperator::apply(Index b) const
{
    if (!source_.valid(b)) throw Error(ErrorKind::InvalidArgument, "invalid basis index for " + basis_kind_name(source_.kind()));
    if (source_.degree(b) > window_) {
        throw Error(ErrorKind::WindowExceeded,
                    name_ + " applied to " + source_.index_name(b) + " of degree " + std::to_string(source_.degree(b)) + " outside window " + std::to_string(window_));
    }
    if (!rule_) return Combination(field_);
    return (*rule_)(b);
}

Combination WindowedOperator::apply(const Combination &v) const
{
    Combination r(field_);
    for (const auto &[b, c] : v.terms()) r += apply(b).scaled(c);
    return r;
}

std::vector<std::pair<Index, Combination>> WindowedOperator::tabulate(int W) const
{
    if (W > window_) {
        throw Error(ErrorKind::WindowExceeded, name_ + " tabulated on window " + std::to_string(W) + " beyond its window " + std::to_string(window_));
    }
    std::vector<std::pair<Index, Combination>> out;
    for (Index b : source_.up_to(W)) out.emplace_back(b, apply(b));
    return out;
}

WindowedOperator WindowedOperator::renamed(std::string name) const
{
    WindowedOperator r = *this;
    r.name_ = std::move(name);
    return r;
}

WindowedOperator WindowedOperator::with_window(int W) const
{
    if (W > window_) throw Error(ErrorKind::WindowExceeded, "cannot enlarge the window of " + name_);
    if (W < 0) throw Error(ErrorKind::WindowExceeded, "negative window for " + name_);
    WindowedOperator r = *this;
    r.window_ = W;
    return r;
}

WindowedOperator WindowedOperator::with_image_bound(ImageBound bound) const
{
    WindowedOperator r = *this;
    r.bound_ = std::move(bound);
    return r;
}

WindowedOperator WindowedOperator::scaled(const FieldValue &c) const
{
    auto inner = *this;
    WindowedOperator r(name_.empty() ? name_ : "(" + c.coefficient_string() + ")*" + name_, field_, source_, target_,
                       [inner, c](Index b) { return inner.apply(b).scaled(c); }, window_, growth_);
    if (bound_) r.bound_ = bound_;
    return r;
}

namespace {

void require_same_spaces(const WindowedOperator &a, const WindowedOperator &b, const char *what)
{
    if (!(a.field() == b.field())) throw Error(ErrorKind::DescriptorMismatch, std::string(what) + " of operators over different fields");
    if (!(a.source() == b.source()) || !(a.target() == b.target())) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " of operators on different bases");
    }
}

WindowedOperator combine(const WindowedOperator &a, const WindowedOperator &b, bool subtract)
{
    require_same_spaces(a, b, subtract ? "difference" : "sum");
    const int W = std::min(a.window(), b.window());
    const int G = std::max(a.growth(), b.growth());
    WindowedOperator r("(" + a.name() + (subtract ? " - " : " + ") + b.name() + ")", a.field(), a.source(), a.target(),
                       [a, b, subtract](Index i) { return subtract ? a.apply(i) - b.apply(i) : a.apply(i) + b.apply(i); }, W, G);
    if (a.image_bound() && b.image_bound()) {
        ImageBound bound = *a.image_bound();
        for (Index i : b.image_bound()->span)
            if (std::find(bound.span.begin(), bound.span.end(), i) == bound.span.end()) bound.span.push_back(i);
        bound.reason = a.image_bound()->reason + "; " + b.image_bound()->reason;
        r = r.with_image_bound(std::move(bound));
    }
    return r;
}

} // namespace

WindowedOperator operator+(const WindowedOperator &a, const WindowedOperator &b) { return combine(a, b, false); }
WindowedOperator operator-(const WindowedOperator &a, const WindowedOperator &b) { return combine(a, b, true); }

WindowedOperator compose(const WindowedOperator &a, const WindowedOperator &b)
{
    if (!(a.field() == b.field())) throw Error(ErrorKind::DescriptorMismatch, "composition of operators over different fields");
    if (!(a.source() == b.target())) throw Error(ErrorKind::InvalidArgument, "composition of operators on incompatible bases");
    const int W = std::min(b.window(), a.window() - b.growth());
    if (W < 0) {
        throw Error(ErrorKind::WindowExceeded,
                    "composition " + a.name() + "*" + b.name() + " has empty window (" + std::to_string(a.window()) + " - " + std::to_string(b.growth()) + ")");
    }
    WindowedOperator r(a.name() + "*" + b.name(), a.field(), b.source(), a.target(), [a, b](Index i) { return a.apply(b.apply(i)); }, W,
                       a.growth() + b.growth());
    if (a.image_bound()) r = r.with_image_bound(*a.image_bound());
    return r;
}

WindowedOperator commutator(const WindowedOperator &a, const WindowedOperator &b)
{
    const WindowedOperator ab = compose(a, b), ba = compose(b, a);
    const int W = std::min(ab.window(), ba.window());
    WindowedOperator r("[" + a.name() + ", " + b.name() + "]", a.field(), b.source(), a.target(),
                       [ab, ba](Index i) { return ab.apply(i) - ba.apply(i); }, W, a.growth() + b.growth());
    return r;
}

WindowedOperator multiplication_operator(const Polynomial &p, int window)
{
    const Field F = p.field();
    const BasisScheme scheme = p.nvars() == 1 ? BasisScheme::monomials1d(p.variables()[0])
                                              : BasisScheme::monomials2d(p.variables()[0], p.variables()[1]);
    auto terms = p.terms();
    const bool two = p.nvars() == 2;
    WindowedOperator r("L_{" + p.to_string() + "}", F, scheme, scheme, [terms, F, two](Index b) {
        Combination out(F);
        for (const auto &[e, c] : terms) out.add(Index{b.i + e[0], two ? b.j + e[1] : 0}, c);
        return out;
    }, window, std::max(p.total_degree(), 0));
    return r;
}

} // namespace punctured
