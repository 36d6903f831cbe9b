#include <punctured/parse.hpp>

#include <cctype>
#include <functional>
#include <limits>
#include <map>

namespace punctured {

namespace {

class Parser
{
public:
    explicit Parser(const std::string &s) : s_(s) {}

    Expression run()
    {
        Expression e;
        skip();
        if (at_big_o()) {
            e.big_o = big_o();
        } else {
            e.root = sum(e);
        }
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(pos_, msg); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool at_big_o()
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != 'O') return false;
        std::size_t p = pos_ + 1;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p < s_.size() && s_[p] == '(';
    }

    NodePtr make(Node::Kind k, std::size_t off, NodePtr a = nullptr, NodePtr b = nullptr)
    {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->offset = off;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr sum(Expression &e)
    {
        NodePtr acc = term();
        for (;;) {
            skip();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) return acc;
            const char op = s_[pos_];
            const std::size_t off = pos_++;
            if (at_big_o()) {
                if (op != '+') fail("expected '+' before O(...)");
                e.big_o = big_o();
                return acc;
            }
            acc = make(op == '+' ? Node::Kind::Add : Node::Kind::Sub, off, acc, term());
        }
    }

    bool starts_atom()
    {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        if (at_big_o()) return false;
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    NodePtr term()
    {
        NodePtr acc = factor();
        for (;;) {
            skip();
            if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
                const char op = s_[pos_];
                const std::size_t off = pos_++;
                acc = make(op == '*' ? Node::Kind::Mul : Node::Kind::Div, off, acc, factor());
            } else if (starts_atom()) {
                const std::size_t off = pos_;
                acc = make(Node::Kind::Mul, off, acc, factor());
            } else {
                return acc;
            }
        }
    }

    long integer(bool allow_sign)
    {
        skip();
        bool neg = false;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
            skip();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (std::numeric_limits<int>::max() - 9) / 10) fail("exponent out of range");
            v = v * 10 + (s_[pos_++] - '0');
        }
        return neg ? -v : v;
    }

    NodePtr factor()
    {
        NodePtr base = atom();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            const std::size_t off = pos_++;
            skip();
            long e;
            if (peek('(')) {
                ++pos_;
                e = integer(true);
                if (!peek(')')) fail("expected ')'");
                ++pos_;
            } else {
                e = integer(true);
            }
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Pow;
            n->offset = off;
            n->lhs = base;
            n->exponent = e;
            return n;
        }
        return base;
    }

    NodePtr atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const std::size_t off = pos_;
        const char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return make(Node::Kind::Neg, off, factor());
        }
        if (c == '(') {
            ++pos_;
            Expression inner;
            NodePtr e = sum(inner);
            if (inner.big_o) throw ParseError(inner.big_o->offset, "O(...) is only allowed at the top level");
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Number;
            n->offset = off;
            n->number = mpz_class(s_.substr(pos_, end - pos_));
            pos_ = end;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            if (at_big_o()) fail("O(...) must be the last summand");
            std::size_t end = pos_;
            while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Identifier;
            n->offset = off;
            n->name = s_.substr(pos_, end - pos_);
            pos_ = end;
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    BigO big_o()
    {
        skip();
        BigO b;
        b.offset = pos_;
        ++pos_; // 'O'
        skip();
        ++pos_; // '('
        skip();
        std::size_t end = pos_;
        while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
        if (end == pos_) fail("expected a variable or 'deg' in O(...)");
        const std::string word = s_.substr(pos_, end - pos_);
        pos_ = end;
        if (word == "deg") {
            b.total_degree = true;
            b.exponent = integer(false);
        } else {
            b.var = word;
            b.exponent = 1;
            if (peek('^')) {
                ++pos_;
                skip();
                if (peek('(')) {
                    ++pos_;
                    b.exponent = integer(true);
                    if (!peek(')')) fail("expected ')'");
                    ++pos_;
                } else {
                    b.exponent = integer(true);
                }
            }
        }
        if (!peek(')')) fail("expected ')' closing O(...)");
        ++pos_;
        return b;
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

// Generic evaluation over a value type with the usual operators.
template <class V> struct Ops {
    std::function<V(const FieldValue &, std::size_t)> constant;
    std::function<V(const std::string &, std::size_t)> variable;
    std::function<V(const V &, const V &, std::size_t)> divide;
    std::function<V(const V &, long, std::size_t)> power;
};

// Whether a subtree mentions no variable (z over an extension counts as constant).
bool is_constant(const Node &n, const Field &F)
{
    switch (n.kind) {
    case Node::Kind::Number: return true;
    case Node::Kind::Identifier: return n.name == "z" && F.degree() > 1;
    case Node::Kind::Pow:
    case Node::Kind::Neg: return is_constant(*n.lhs, F);
    default: return is_constant(*n.lhs, F) && is_constant(*n.rhs, F);
    }
}

std::size_t first_variable(const Node &n, const Field &F)
{
    if (n.kind == Node::Kind::Identifier) return n.offset;
    if (n.lhs && !is_constant(*n.lhs, F)) return first_variable(*n.lhs, F);
    if (n.rhs && !is_constant(*n.rhs, F)) return first_variable(*n.rhs, F);
    return n.offset;
}

FieldValue constant_value(const Node &n, const Field &F)
{
    switch (n.kind) {
    case Node::Kind::Number: return F.from_mpz(n.number);
    case Node::Kind::Identifier:
        if (n.name == "z" && F.degree() > 1) return F.generator();
        throw ParseError(n.offset, "unexpected variable " + n.name + " in a constant");
    case Node::Kind::Neg: return -constant_value(*n.lhs, F);
    case Node::Kind::Add: return constant_value(*n.lhs, F) + constant_value(*n.rhs, F);
    case Node::Kind::Sub: return constant_value(*n.lhs, F) - constant_value(*n.rhs, F);
    case Node::Kind::Mul: return constant_value(*n.lhs, F) * constant_value(*n.rhs, F);
    case Node::Kind::Div: {
        const FieldValue d = constant_value(*n.rhs, F);
        if (d.is_zero()) throw ParseError(n.offset, "division by zero in " + F.descriptor());
        return constant_value(*n.lhs, F) / d;
    }
    case Node::Kind::Pow: {
        const FieldValue b = constant_value(*n.lhs, F);
        if (b.is_zero() && n.exponent < 0) throw ParseError(n.offset, "zero to a negative power");
        return b.pow(n.exponent);
    }
    }
    throw ParseError(n.offset, "bad constant");
}

// Evaluates with constant folding first; V needs +, -, * and the Ops hooks.
template <class V> V evaluate(const Node &n, const Field &F, const Ops<V> &ops)
{
    if (is_constant(n, F)) return ops.constant(constant_value(n, F), n.offset);
    switch (n.kind) {
    case Node::Kind::Identifier: return ops.variable(n.name, n.offset);
    case Node::Kind::Neg: return ops.constant(F.zero(), n.offset) - evaluate(*n.lhs, F, ops);
    case Node::Kind::Add: return evaluate(*n.lhs, F, ops) + evaluate(*n.rhs, F, ops);
    case Node::Kind::Sub: return evaluate(*n.lhs, F, ops) - evaluate(*n.rhs, F, ops);
    case Node::Kind::Mul: return evaluate(*n.lhs, F, ops) * evaluate(*n.rhs, F, ops);
    case Node::Kind::Div: return ops.divide(evaluate(*n.lhs, F, ops), evaluate(*n.rhs, F, ops), n.offset);
    case Node::Kind::Pow: return ops.power(evaluate(*n.lhs, F, ops), n.exponent, n.offset);
    case Node::Kind::Number: break;
    }
    throw ParseError(n.offset, "bad expression");
}

// Laurent polynomials in up to two variables, used for polynomial and
// bivariate-series input.
struct LaurentTerms {
    Field F;
    std::map<std::array<int, 2>, FieldValue> t;

    void add(const std::array<int, 2> &e, const FieldValue &c)
    {
        if (c.is_zero()) return;
        auto it = t.find(e);
        if (it == t.end()) {
            t.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    LaurentTerms operator+(const LaurentTerms &b) const
    {
        LaurentTerms r = *this;
        for (const auto &[e, c] : b.t) r.add(e, c);
        return r;
    }
    LaurentTerms operator-(const LaurentTerms &b) const
    {
        LaurentTerms r = *this;
        for (const auto &[e, c] : b.t) r.add(e, -c);
        return r;
    }
    LaurentTerms operator*(const LaurentTerms &b) const
    {
        LaurentTerms r{F, {}};
        for (const auto &[e1, c1] : t)
            for (const auto &[e2, c2] : b.t) r.add({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
        return r;
    }
};

Ops<LaurentTerms> laurent_ops(const Field &F, const std::vector<std::string> &vars)
{
    Ops<LaurentTerms> ops;
    ops.constant = [F](const FieldValue &c, std::size_t) {
        LaurentTerms r{F, {}};
        r.add({0, 0}, c);
        return r;
    };
    ops.variable = [F, vars](const std::string &name, std::size_t off) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == name) {
                LaurentTerms r{F, {}};
                std::array<int, 2> e{0, 0};
                e[i] = 1;
                r.add(e, F.one());
                return r;
            }
        }
        std::string expected;
        for (const auto &v : vars) expected += (expected.empty() ? "" : ", ") + v;
        throw ParseError(off, "unknown variable " + name + " (expected " + expected + ")");
    };
    const auto monomial_inverse = [](const LaurentTerms &b, std::size_t off) {
        if (b.t.size() != 1) throw ParseError(off, "only division by a monomial is supported here");
        const auto &[e, c] = *b.t.begin();
        LaurentTerms r{b.F, {}};
        r.add({-e[0], -e[1]}, c.inverse());
        return r;
    };
    ops.divide = [monomial_inverse](const LaurentTerms &a, const LaurentTerms &b, std::size_t off) {
        if (b.t.empty()) throw ParseError(off, "division by zero");
        return a * monomial_inverse(b, off);
    };
    ops.power = [F, monomial_inverse](const LaurentTerms &a, long e, std::size_t off) {
        LaurentTerms base = a;
        if (e < 0) {
            if (a.t.empty()) throw ParseError(off, "zero to a negative power");
            base = monomial_inverse(a, off);
            e = -e;
        }
        LaurentTerms r{F, {}};
        r.add({0, 0}, F.one());
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    };
    return ops;
}

LaurentTerms parse_laurent(const Field &F, const Expression &e, const std::vector<std::string> &vars)
{
    if (!e.root) return LaurentTerms{F, {}};
    return evaluate(*e.root, F, laurent_ops(F, vars));
}

std::size_t find_offset(const std::string &text, const std::string &needle)
{
    const auto p = text.find(needle);
    return p == std::string::npos ? 0 : p;
}

} // namespace

Expression parse_expression(const std::string &text) { return Parser(text).run(); }

Field parse_field(const std::string &text)
{
    if (text == "q" || text == "Q") return Field::rationals();
    const auto parse_prime = [&text](std::size_t from, std::size_t to) {
        const std::string s = text.substr(from, to - from);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw ParseError(from, "expected a prime");
        if (s.size() > 12) throw ParseError(from, "prime too large");
        return std::stoull(s);
    };
    if (text.rfind("fp:", 0) == 0) {
        try {
            return Field::prime(parse_prime(3, text.size()));
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            throw ParseError(3, e.message());
        }
    }
    if (text.rfind("fq:", 0) == 0) {
        const auto colon = text.find(':', 3);
        if (colon == std::string::npos) throw ParseError(text.size(), "expected fq:<p>:<modulus>");
        const std::uint64_t p = parse_prime(3, colon);
        Field Fp;
        try {
            Fp = Field::prime(p);
        } catch (const Error &e) {
            throw ParseError(3, e.message());
        }
        UPoly m(Fp);
        try {
            m = parse_upoly(Fp, text.substr(colon + 1), "z");
        } catch (const ParseError &e) {
            throw ParseError(colon + 1 + e.offset(), e.reason());
        }
        std::vector<std::uint64_t> mod;
        for (const auto &c : m.coefficients()) mod.push_back(c.residue());
        try {
            return Field::extension(p, mod);
        } catch (const Error &e) {
            throw ParseError(colon + 1, e.message());
        }
    }
    throw ParseError(0, "unknown field '" + text + "' (expected q, fp:<p> or fq:<p>:<modulus>)");
}

FieldValue parse_value(const Field &F, const std::string &text)
{
    std::string s = text;
    const auto mod = s.find(" mod ");
    if (mod != std::string::npos) s = s.substr(0, mod);
    const Expression e = parse_expression(s);
    if (e.big_o) throw ParseError(e.big_o->offset, "O(...) in a field element");
    if (!e.root) throw ParseError(0, "empty field element");
    if (!is_constant(*e.root, F)) throw ParseError(first_variable(*e.root, F), "not a constant of " + F.descriptor());
    return constant_value(*e.root, F);
}

Polynomial parse_polynomial(const Field &F, const std::string &text, std::vector<std::string> vars)
{
    const Expression e = parse_expression(text);
    if (e.big_o) throw ParseError(e.big_o->offset, "a polynomial has no O(...) term");
    if (vars.empty()) vars = text.find('y') != std::string::npos ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
    const LaurentTerms t = parse_laurent(F, e, vars);
    Polynomial p(F, vars);
    for (const auto &[ex, c] : t.t) {
        if (ex[0] < 0 || ex[1] < 0) throw ParseError(0, "negative exponent in a polynomial");
        p.add_term(vars.size() == 1 ? Polynomial::Exponent{ex[0], 0} : ex, c);
    }
    return p;
}

UPoly parse_upoly(const Field &F, const std::string &text, const std::string &var)
{
    const Polynomial p = parse_polynomial(F, text, {var});
    return p.to_upoly();
}

TruncatedSeries parse_truncated_series(const Field &F, const std::string &text, const std::string &var, int default_precision)
{
    const Expression e = parse_expression(text);
    int N = default_precision;
    if (e.big_o) {
        if (e.big_o->total_degree || e.big_o->var != var) throw ParseError(e.big_o->offset, "expected O(" + var + "^-N)");
        N = static_cast<int>(-e.big_o->exponent);
    }
    if (N < 0) throw ParseError(e.big_o ? e.big_o->offset : 0, "negative precision");
    constexpr int exact = LaurentSeries::exact_precision;
    Ops<TruncatedSeries> ops;
    ops.constant = [&](const FieldValue &c, std::size_t) { return TruncatedSeries::monomial(c, var, 0, exact); };
    ops.variable = [&](const std::string &name, std::size_t off) {
        if (name != var) throw ParseError(off, "unknown variable " + name + " (expected " + var + ")");
        return TruncatedSeries::monomial(F.one(), var, 1, exact);
    };
    const auto invert = [&](const TruncatedSeries &b, std::size_t off) {
        const auto terms = b.terms();
        if (terms.empty()) throw ParseError(off, "division by zero");
        if (terms.size() == 1 && b.precision() >= exact / 2)
            return TruncatedSeries::monomial(terms[0].second.inverse(), var, -terms[0].first, exact);
        const int W = N + 2 * std::abs(b.degree()) + 16;
        return b.truncated(std::min(b.precision(), W)).inverse();
    };
    ops.divide = [&](const TruncatedSeries &a, const TruncatedSeries &b, std::size_t off) { return a * invert(b, off); };
    ops.power = [&](const TruncatedSeries &a, long k, std::size_t off) {
        if (k >= 0) return a.pow(k);
        return invert(a, off).pow(-k);
    };
    if (!e.root) return TruncatedSeries(F, var, N);
    const TruncatedSeries v = evaluate(*e.root, F, ops);
    if (e.big_o) {
        for (const auto &[ex, c] : v.terms())
            if (ex <= -N) throw ParseError(e.big_o->offset, "term " + var + "^" + std::to_string(ex) + " lies inside O(" + var + "^" + std::to_string(-N) + ")");
    }
    return v.truncated(std::min(v.precision(), N));
}

BiSeries parse_biseries(const Field &F, const std::string &text, int default_precision)
{
    const Expression e = parse_expression(text);
    int N = default_precision;
    if (e.big_o) {
        if (!e.big_o->total_degree) throw ParseError(e.big_o->offset, "expected O(deg N)");
        N = static_cast<int>(e.big_o->exponent);
    }
    const LaurentTerms t = parse_laurent(F, e, {"x", "y"});
    std::map<std::pair<int, int>, FieldValue> m;
    for (const auto &[ex, c] : t.t) {
        if (ex[0] > 0 || ex[1] > 0) throw ParseError(0, "positive power of x or y in a series in x^-1, y^-1");
        if (-ex[0] - ex[1] >= N) {
            if (e.big_o) throw ParseError(e.big_o->offset, "a term lies inside O(deg " + std::to_string(N) + ")");
            continue;
        }
        m.emplace(std::pair{-ex[0], -ex[1]}, c);
    }
    return BiSeries(F, {"x", "y"}, m, N);
}

ChartSeries parse_chart_series(const Field &F, Chart chart, const std::string &text, int default_precision)
{
    const Expression e = parse_expression(text);
    int N = default_precision;
    if (e.big_o) {
        if (!e.big_o->total_degree) throw ParseError(e.big_o->offset, "expected O(deg N)");
        N = static_cast<int>(e.big_o->exponent);
    }
    const LaurentTerms t = parse_laurent(F, e, {"x", "y"});
    ChartSeries s(chart, F, N);
    for (const auto &[ex, c] : t.t) {
        if (-ex[0] - ex[1] >= N) {
            if (e.big_o) throw ParseError(e.big_o->offset, "a term lies inside O(deg " + std::to_string(N) + ")");
            continue;
        }
        try {
            s += ChartSeries::monomial(chart, c, ex[0], ex[1], N);
        } catch (const Error &err) {
            throw ParseError(find_offset(text, "x"), err.message());
        }
    }
    return s;
}

RationalFunction parse_rational_function(const Field &F, const std::string &text, const std::string &var)
{
    const Expression e = parse_expression(text);
    if (e.big_o) throw ParseError(e.big_o->offset, "a rational function has no O(...) term");
    if (!e.root) throw ParseError(0, "empty input");
    Ops<RationalFunction> ops;
    ops.constant = [&](const FieldValue &c, std::size_t) { return RationalFunction::constant(c, var); };
    ops.variable = [&](const std::string &name, std::size_t off) {
        if (name != var) throw ParseError(off, "unknown variable " + name + " (expected " + var + ")");
        return RationalFunction::variable(F, var);
    };
    ops.divide = [](const RationalFunction &a, const RationalFunction &b, std::size_t off) {
        if (b.is_zero()) throw ParseError(off, "division by zero");
        return a / b;
    };
    ops.power = [&](const RationalFunction &a, long k, std::size_t off) {
        if (k < 0 && a.is_zero()) throw ParseError(off, "zero to a negative power");
        RationalFunction base = k < 0 ? RationalFunction::constant(F.one(), var) / a : a;
        RationalFunction r = RationalFunction::constant(F.one(), var);
        for (long i = 0; i < std::abs(k); ++i) r *= base;
        return r;
    };
    return evaluate(*e.root, F, ops);
}

} // namespace punctured
