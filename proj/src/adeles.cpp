#include <punctured/adeles.hpp>

#include <punctured/linalg.hpp>

namespace punctured {

// ------------------------------------------------------------ RationalFunction

RationalFunction::RationalFunction(Field field, std::string var)
    : num_(field), den_(UPoly::constant(field.one())), var_(std::move(var))
{
}

RationalFunction::RationalFunction(UPoly num, UPoly den, std::string var) : num_(std::move(num)), den_(std::move(den)), var_(std::move(var))
{
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (!(num_.field() == den_.field())) throw Error(ErrorKind::DescriptorMismatch, "numerator and denominator over different fields");
    if (num_.is_zero()) {
        den_ = UPoly::constant(den_.field().one());
        return;
    }
    const UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const FieldValue lc = den_.lead().inverse();
    num_ = num_.scaled(lc);
    den_ = den_.scaled(lc);
}

RationalFunction RationalFunction::polynomial(UPoly p, std::string var)
{
    const Field F = p.field();
    return RationalFunction(std::move(p), UPoly::constant(F.one()), std::move(var));
}

RationalFunction RationalFunction::variable(const Field &F, std::string var) { return polynomial(UPoly::monomial(F.one(), 1), std::move(var)); }

RationalFunction RationalFunction::constant(const FieldValue &c, std::string var) { return polynomial(UPoly::constant(c), std::move(var)); }

void RationalFunction::require_compatible(const RationalFunction &b) const
{
    if (!(field() == b.field())) throw Error(ErrorKind::DescriptorMismatch, "rational functions over " + field().descriptor() + " and " + b.field().descriptor());
    if (var_ != b.var_) throw Error(ErrorKind::VariableMismatch, "rational functions in " + var_ + " and " + b.var_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, var_); }

RationalFunction &RationalFunction::operator+=(const RationalFunction &b)
{
    require_compatible(b);
    return *this = RationalFunction(num_ * b.den_ + b.num_ * den_, den_ * b.den_, var_);
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &b) { return *this += -b; }

RationalFunction &RationalFunction::operator*=(const RationalFunction &b)
{
    require_compatible(b);
    return *this = RationalFunction(num_ * b.num_, den_ * b.den_, var_);
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &b)
{
    require_compatible(b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
    return *this = RationalFunction(num_ * b.den_, den_ * b.num_, var_);
}

RationalFunction RationalFunction::derivative() const
{
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, var_);
}

std::string RationalFunction::to_string() const
{
    const auto wrap = [this](const UPoly &p) {
        const std::string s = p.to_string(var_);
        const bool simple = s.find_first_of(" ") == std::string::npos;
        return simple ? s : "(" + s + ")";
    };
    if (den_.degree() == 0) return num_.to_string(var_);
    return wrap(num_) + " / " + wrap(den_);
}

// ---------------------------------------------------------------------- Place

Place Place::infinity(const Field &k)
{
    Place p;
    p.infinite_ = true;
    p.base_ = k;
    p.residue_ = k;
    p.pi_ = UPoly(k);
    p.theta_ = k.zero();
    return p;
}

Place Place::finite(const UPoly &pi)
{
    const Field &k = pi.field();
    if (pi.degree() < 1) throw Error(ErrorKind::InvalidArgument, "a place needs a nonconstant pi");
    if (!pi.lead().is_one()) throw Error(ErrorKind::InvalidArgument, "pi = " + pi.to_string() + " is not monic");
    Place p;
    p.base_ = k;
    p.pi_ = pi;
    if (pi.degree() == 1) {
        p.residue_ = k;
        p.theta_ = -pi.coeff(0);
        return p;
    }
    if (k.is_rational() || k.degree() > 1) {
        throw Error(ErrorKind::Unsupported, "places of degree >= 2 are only supported over prime fields; got " + pi.to_string() + " over " +
                                                k.descriptor());
    }
    const Factorization fz = factor(pi);
    if (fz.factors.size() != 1 || fz.factors[0].multiplicity != 1) {
        throw Error(ErrorKind::InvalidArgument, "pi = " + pi.to_string() + " is not irreducible over " + k.descriptor());
    }
    std::vector<std::uint64_t> mod;
    for (const auto &c : pi.coefficients()) mod.push_back(c.residue());
    p.residue_ = Field::extension(k.characteristic(), mod);
    p.theta_ = p.residue_.generator();
    return p;
}

Place Place::point(const FieldValue &a) { return finite(UPoly::linear(a)); }

const UPoly &Place::pi() const
{
    if (infinite_) throw Error(ErrorKind::InvalidArgument, "the place at infinity has no pi");
    return pi_;
}

const FieldValue &Place::theta() const
{
    if (infinite_) throw Error(ErrorKind::InvalidArgument, "the place at infinity has no theta");
    return theta_;
}

FieldValue Place::lift(const FieldValue &c) const { return residue_ == base_ ? c : embed_prime(c, residue_); }

FieldValue Place::trace(const FieldValue &c) const { return residue_ == base_ ? c : trace_to_base(c); }

FieldValue Place::norm(const FieldValue &c) const { return residue_ == base_ ? c : norm_to_base(c); }

std::string Place::label(const std::string &var) const { return infinite_ ? "inf" : pi_.to_string(var); }

bool Place::operator==(const Place &b) const
{
    if (infinite_ != b.infinite_ || !(base_ == b.base_)) return false;
    return infinite_ || pi_ == b.pi_;
}

// ----------------------------------------------------------------- expansions

namespace {

UPoly lifted(const UPoly &a, const Place &p)
{
    std::vector<FieldValue> c;
    for (const auto &x : a.coefficients()) c.push_back(p.lift(x));
    return UPoly(p.residue_field(), c);
}

UPoly reversed(const UPoly &a)
{
    std::vector<FieldValue> c(a.coefficients().rbegin(), a.coefficients().rend());
    return UPoly(a.field(), c);
}

// t as a power series in T = pi(t) with t(0) = theta, to precision M.
LaurentSeries reversion(const Place &p, int M)
{
    const UPoly pi = lifted(p.pi(), p);
    const UPoly dpi = pi.derivative();
    const FieldValue d0 = dpi(p.theta());
    if (d0.is_zero()) throw Error(ErrorKind::Unsupported, "pi = " + p.pi().to_string() + " is inseparable");
    const LaurentSeries T = LaurentSeries::monomial(p.residue_field().one(), 1, M);
    LaurentSeries t = LaurentSeries::monomial(p.theta(), 0, M);
    // Simplified Newton with the constant derivative d0: one new coefficient per step.
    for (int k = 1; k < M; ++k) {
        const LaurentSeries err = evaluate(pi, t) - T;
        if (err.is_zero()) break;
        t -= err.scaled(d0.inverse());
    }
    return t;
}

LaurentSeries expand_at(const RationalFunction &f, const Place &p, int prec)
{
    const UPoly &num = f.numerator(), &den = f.denominator();
    if (p.is_infinity()) {
        // f(1/u) = u^(deg den - deg num) rev(num)(u) / rev(den)(u)
        const int shift = den.degree() - num.degree();
        const int rel = prec - shift;
        if (rel <= 0) return LaurentSeries(p.residue_field(), prec);
        const LaurentSeries n = LaurentSeries::from_upoly(reversed(num), rel);
        const LaurentSeries d = LaurentSeries::from_upoly(reversed(den), rel);
        return (n * d.inverse()).shifted(shift).truncated(prec);
    }
    const int vn = valuation(num, p.pi()), vd = valuation(den, p.pi());
    for (int M = prec + 2 * vd + std::max(0, -vn) + 2;; M += 8) {
        const LaurentSeries t = reversion(p, M);
        const LaurentSeries n = evaluate(lifted(num, p), t).truncated(M), d = evaluate(lifted(den, p), t).truncated(M);
        const LaurentSeries q = n * d.inverse();
        if (q.precision() >= prec) return q.truncated(prec);
    }
}

} // namespace

int ord(const RationalFunction &f, const Place &place)
{
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "ord of the zero function");
    if (place.is_infinity()) return f.denominator().degree() - f.numerator().degree();
    return valuation(f.numerator(), place.pi()) - valuation(f.denominator(), place.pi());
}

LocalExpansion local_expand(const RationalFunction &f, const Place &place, int N)
{
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "the zero function has no local expansion");
    if (!(f.field() == place.base())) throw Error(ErrorKind::DescriptorMismatch, "function and place over different fields");
    const int v = ord(f, place);
    return {place, expand_at(f, place, v + N), v};
}

FieldValue residue(const RationalFunction &f, const RationalFunction &g, const Place &place)
{
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroFunction, "residue of f dg with f or g zero");
    const int vf = ord(f, place);
    // g' is needed past -vf, and f past -ord(g').
    int Pg = std::max(1 - vf, 1) + 2;
    LaurentSeries dg;
    for (int attempt = 0;; ++attempt) {
        dg = expand_at(g, place, Pg).derivative();
        if (!dg.is_zero()) break;
        if (attempt == 3 || g.derivative().is_zero()) {
            throw Error(ErrorKind::Unsupported, "dg vanishes identically at " + place.label(g.variable()) + " (inseparable g = " + g.to_string() + ")");
        }
        Pg += std::max(Pg, 8);
    }
    const LaurentSeries ef = expand_at(f, place, std::max(-dg.valuation(), vf + 1) + 2);
    const LaurentSeries prod = ef * dg;
    if (prod.precision() <= -1) throw Error(ErrorKind::PrecisionExhausted, "residue coefficient beyond the working precision");
    return place.trace(prod.coeff(-1));
}

std::vector<Place> support_places(const std::vector<RationalFunction> &fs, bool zeros)
{
    std::vector<Place> out;
    const auto add = [&out](const Place &p) {
        for (const auto &q : out)
            if (q == p) return;
        out.push_back(p);
    };
    for (const auto &f : fs) {
        for (const UPoly *u : {&f.numerator(), &f.denominator()}) {
            if (u->degree() < 1 || (!zeros && u == &f.numerator())) continue;
            const Factorization fz = factor(*u);
            if (!fz.fully_split) {
                for (const auto &fc : fz.factors) {
                    if (fc.poly.degree() >= 2) {
                        throw Error(ErrorKind::Unsupported, "irreducible factor " + fc.poly.to_string(f.variable()) + " of degree " +
                                                                std::to_string(fc.poly.degree()) + " over " + f.field().descriptor() +
                                                                " is not a supported place");
                    }
                }
            }
            for (const auto &fc : fz.factors) add(Place::finite(fc.poly));
        }
    }
    if (!fs.empty()) add(Place::infinity(fs.front().field()));
    return out;
}

ResidueReport residue_theorem_check(const RationalFunction &f, const RationalFunction &g)
{
    ResidueReport r;
    r.sum = f.field().zero();
    for (const Place &p : support_places({f, g}, false)) {
        const FieldValue v = residue(f, g, p);
        r.sum += v;
        r.table.push_back({p, v});
    }
    r.passed = r.sum.is_zero();
    return r;
}

FieldValue hilbert_symbol(const RationalFunction &f, const RationalFunction &g, const Place &place)
{
    const LocalExpansion ef = local_expand(f, place, 1), eg = local_expand(g, place, 1);
    const int a = ef.valuation, b = eg.valuation;
    FieldValue s = ef.series.leading_coefficient().pow(b) / eg.series.leading_coefficient().pow(a);
    if ((a * b) % 2 != 0) s = -s;
    return s;
}

WeilReport weil_reciprocity_check(const RationalFunction &f, const RationalFunction &g)
{
    WeilReport r;
    r.product = f.field().one();
    for (const Place &p : support_places({f, g})) {
        const FieldValue v = p.norm(hilbert_symbol(f, g, p));
        r.product *= v;
        r.table.push_back({p, v});
    }
    r.passed = r.product.is_one();
    return r;
}

AdeleLocalAction adele_local_action(const LocalExpansion &a, int window)
{
    if (a.series.is_zero()) throw Error(ErrorKind::ZeroFunction, "multiplication by zero is not an adele action");
    if (a.series.precision() <= window) {
        throw Error(ErrorKind::PrecisionExhausted, "action on window " + std::to_string(window) + " needs a known past " + a.place.uniformizer_name() +
                                                       "^" + std::to_string(window));
    }
    const Field F = a.series.field();
    const std::vector<std::pair<int, FieldValue>> terms = a.series.terms();
    // a * pi^-(k+1) = sum_n a_n pi^(n-k-1), kept where n - k - 1 < 0.
    WindowedOperator op("mult(" + a.to_string() + ")", F, BasisScheme::sequence(), BasisScheme::sequence(), [F, terms](Index b) {
        Combination out(F);
        for (const auto &[n, c] : terms)
            if (n <= b.i) out.add({b.i - n, 0}, c);
        return out;
    }, window, std::max(0, -a.valuation));
    return {std::move(op), std::max(0, -a.valuation)};
}

Prop71Report prop71_check(int N, const Field &F)
{
    Prop71Report r;
    r.precision = N;
    // u(t^m) = t^m mod O_inf = e_{m-1} for m >= 1, and 0 for m = 0.
    const WindowedOperator u("u", F, BasisScheme::monomials1d("t"), BasisScheme::sequence(), [F](Index b) {
        return b.i == 0 ? Combination(F) : Combination::basis(F, {b.i - 1, 0});
    }, N + 1, -1);
    DenseMatrix m;
    for (int k = 0; k < N; ++k) {
        std::vector<FieldValue> row;
        for (int j = 0; j <= N; ++j) row.push_back(u.apply(Index{j, 0}).coeff({k, 0}));
        m.push_back(std::move(row));
    }
    const int rk = rank(m);
    r.kernel_dim = (N + 1) - rk;
    r.cokernel_dim = N - rk;
    r.constants_vanish = u.apply(Index{0, 0}).is_zero();

    const RationalFunction t = RationalFunction::variable(F);
    const AdeleLocalAction at = adele_local_action(local_expand(t, Place::infinity(F), N + 3), N + 1);
    const WindowedOperator lt = multiplication_operator(Polynomial::from_upoly(UPoly::monomial(F.one(), 1), "t"), N + 1);
    r.intertwining = rank_on_window(compose(u, lt) - compose(at.op, u), N);
    r.passed = r.kernel_dim == 1 && r.cokernel_dim == 0 && r.constants_vanish && r.intertwining.rank <= 1;
    return r;
}

} // namespace punctured
