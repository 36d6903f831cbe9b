#include <punctured/almost.hpp>

#include <algorithm>

namespace punctured {

const WindowedOperator &AlmostModulePresentation::generator(const std::string &name) const
{
    for (const auto &[n, op] : generators)
        if (n == name) return op;
    throw Error(ErrorKind::InvalidArgument, "presentation has no generator " + name);
}

namespace {

RankCertificate unit_certificate(const Field &F, const BasisScheme &scheme, int window)
{
    const WindowedOperator id = WindowedOperator::identity(F, scheme, window);
    return rank_on_window((id - id).with_image_bound({{}, "the unit acts as the identity"}), window);
}

WindowedOperator shift_y_grid(const Field &F, int window)
{
    return WindowedOperator("Phi_y", F, BasisScheme::grid(), BasisScheme::grid(), [F](Index b) { return Combination::basis(F, {b.i, b.j + 1}); },
                            window, 1);
}

} // namespace

AlmostModulePresentation build_M_g(const BiSeries &g, int window)
{
    if (!g.in_G()) throw Error(ErrorKind::NotInG, g.to_string() + " is not of the form 1 + x^-1 y^-1 k[[x^-1, y^-1]]");
    if (g.precision() < window + 3) {
        throw Error(ErrorKind::PrecisionExhausted, "M_g on window " + std::to_string(window) + " needs g to total degree " +
                                                       std::to_string(window + 2) + ", have O(deg " + std::to_string(g.precision()) + ")");
    }
    const Field F = g.field();
    // lambda_{i,l} for i + l < precision.
    std::vector<std::vector<FieldValue>> lambda(static_cast<std::size_t>(g.precision()));
    for (int i = 0; i < g.precision(); ++i)
        for (int l = 0; i + l < g.precision(); ++l) lambda[static_cast<std::size_t>(i)].push_back(g.coeff(i, l));

    const WindowedOperator phi_x("Phi_x", F, BasisScheme::grid(), BasisScheme::grid(), [F, lambda](Index b) {
        Combination out = Combination::basis(F, {b.i + 1, b.j});
        const auto &row = lambda[static_cast<std::size_t>(b.i + 1)];
        for (int l = 1; l <= b.j; ++l) out.add({0, b.j - l}, -row[static_cast<std::size_t>(l)]);
        return out;
    }, window + 1, 1);
    const WindowedOperator phi_y = shift_y_grid(F, window + 2);

    AlmostModulePresentation p;
    p.field = F;
    p.scheme = BasisScheme::grid();
    p.window = window;
    p.generators = {{"x", phi_x}, {"y", phi_y}};
    const WindowedOperator c = commutator(phi_x, phi_y).with_image_bound({{{0, 0}}, "[Phi_x, Phi_y](e_{ij}) = -lambda_{i+1,j+1} e_{0,0}"});
    p.relations.push_back({"x*y", "y*x", rank_on_window(c, window)});
    p.unit = unit_certificate(F, p.scheme, window);
    return p;
}

AlmostModulePresentation build_N_h(const TruncatedSeries &h, int window)
{
    if (h.precision() < window + 2) {
        throw Error(ErrorKind::PrecisionExhausted, "N_h on window " + std::to_string(window) + " needs h known down to " + h.variable() + "^" +
                                                       std::to_string(-(window + 1)) + ", have " + h.to_string());
    }
    const Field F = h.field();
    const int d = h.is_zero() ? 0 : h.degree();
    std::vector<std::pair<int, FieldValue>> mu = h.terms();

    const WindowedOperator psi_x("Psi_x", F, BasisScheme::sequence(), BasisScheme::sequence(), [F, mu](Index b) {
        Combination out(F);
        for (const auto &[j, c] : mu)
            if (j >= -b.i) out.add({b.i + j, 0}, c);
        return out;
    }, window + 1, d);
    const WindowedOperator psi_y("Psi_y", F, BasisScheme::sequence(), BasisScheme::sequence(),
                                 [F](Index b) { return Combination::basis(F, {b.i + 1, 0}); }, window + 1 + std::max(d, 0), 1);

    AlmostModulePresentation p;
    p.field = F;
    p.scheme = BasisScheme::sequence();
    p.window = window;
    p.generators = {{"x", psi_x}, {"y", psi_y}};
    const WindowedOperator c = commutator(psi_x, psi_y).with_image_bound({{{0, 0}}, "[Psi_x, Psi_y](e_i) = mu_{-i-1} e_0"});
    p.relations.push_back({"x*y", "y*x", rank_on_window(c, window)});
    p.unit = unit_certificate(F, p.scheme, window);
    return p;
}

SesReport verify_ses(const TruncatedSeries &h, int window)
{
    for (const auto &[e, c] : h.terms()) {
        if (e >= 0) throw Error(ErrorKind::NotInG, "h = " + h.to_string() + " has a polynomial part");
    }
    const Field F = h.field();
    SesReport r;
    r.window = window;
    // g = 1 - x^-1 h, so lambda_{1,l} = -mu_{-l}.
    std::map<std::pair<int, int>, FieldValue> gt{{{0, 0}, F.one()}};
    for (const auto &[e, c] : h.terms()) gt.emplace(std::pair{1, -e}, -c);
    r.g = BiSeries(F, {"x", "y"}, gt, h.precision() + 1);

    const AlmostModulePresentation M = build_M_g(r.g, window + 1);
    const AlmostModulePresentation N = build_N_h(h, window + 1);

    const BasisScheme A = BasisScheme::monomials2d(), V = BasisScheme::grid(), Wb = BasisScheme::sequence();
    const WindowedOperator iota("iota", F, A, V, [F](Index b) { return Combination::basis(F, {b.i + 1, b.j}); }, window + 1, 1);
    const WindowedOperator pi("pi", F, V, Wb, [F](Index b) {
        return b.i == 0 ? Combination::basis(F, {b.j, 0}) : Combination(F);
    }, window + 1, 0);

    Polynomial px(F, {"x", "y"}), py(F, {"x", "y"});
    px.add_term({1, 0}, F.one());
    py.add_term({0, 1}, F.one());
    const std::vector<std::pair<std::string, WindowedOperator>> mult = {{"x", multiplication_operator(px, window + 1)},
                                                                        {"y", multiplication_operator(py, window + 1)}};

    // Graded exactness: k[x,y]_{D-1} -> V_D -> W_D.
    r.exact = true;
    for (int D = 0; D <= window; ++D) {
        GradedPiece piece;
        piece.degree = D;
        const auto src = A.of_degree(D - 1), mid = V.of_degree(D);
        piece.dim_source = static_cast<int>(src.size());
        piece.dim_middle = static_cast<int>(mid.size());
        piece.dim_target = 1;
        IncrementalEchelon ei(F), ep(F);
        piece.composite_zero = true;
        for (Index b : src) {
            SparseRow row;
            const Combination img = iota.apply(b);
            for (const auto &[t, c] : img.terms()) row.emplace(t.i * (window + 2) + t.j, c);
            ei.insert(row);
            if (!pi.apply(img).is_zero()) piece.composite_zero = false;
        }
        for (Index b : mid) {
            SparseRow row;
            const Combination img = pi.apply(b);
            for (const auto &[t, c] : img.terms()) row.emplace(t.i, c);
            ep.insert(row);
        }
        piece.rank_iota = ei.rank();
        piece.rank_pi = ep.rank();
        piece.exact = piece.composite_zero && piece.rank_iota == piece.dim_source && piece.rank_pi == piece.dim_target &&
                      piece.rank_iota == piece.dim_middle - piece.rank_pi;
        r.exact = r.exact && piece.exact;
        r.pieces.push_back(piece);
    }

    r.defects_bounded = true;
    for (const auto &[name, L] : mult) {
        const WindowedOperator d1 = compose(iota, L) - compose(M.generator(name), iota);
        r.defects.push_back({"iota", name, rank_on_window(d1, window)});
        const WindowedOperator d2 = compose(pi, M.generator(name)) - compose(N.generator(name), pi);
        r.defects.push_back({"pi", name, rank_on_window(d2, window)});
    }
    for (const auto &d : r.defects) r.defects_bounded = r.defects_bounded && d.certificate.rank <= 1 && d.certificate.stable;
    r.passed = r.exact && r.defects_bounded;
    return r;
}

TruncatedSeries char_phi_h(const TruncatedSeries &h, const Polynomial &f, int required)
{
    if (f.nvars() != 2) throw Error(ErrorKind::VariableMismatch, "expected a polynomial in two variables");
    if (f.variables()[1] != h.variable()) {
        throw Error(ErrorKind::VariableMismatch, "second variable " + f.variables()[1] + " does not match " + h.variable());
    }
    const auto coeffs = f.coefficients_in(0); // f = sum_i a_i(y) x^i
    TruncatedSeries acc(h.field(), h.variable(), LaurentSeries::exact_precision);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * h + TruncatedSeries::from_upoly(coeffs[i], h.variable(), LaurentSeries::exact_precision);
    }
    if (acc.precision() < required) {
        throw Error(ErrorKind::PrecisionExhausted, "phi_h(f) is known only to O(" + h.variable() + "^" + std::to_string(-acc.precision()) + ")");
    }
    return acc;
}

} // namespace punctured

namespace punctured {

GroupLawExperiment group_law_experiment(const BiSeries &g1, const BiSeries &g2, int window)
{
    const BiSeries g12 = g1 * g2;
    const auto comm = [window](const BiSeries &g) {
        const AlmostModulePresentation p = build_M_g(g, window);
        return commutator(p.generator("x"), p.generator("y")).with_image_bound({{{0, 0}}, "commutator of M_g"});
    };
    const WindowedOperator c12 = comm(g12), c1 = comm(g1), c2 = comm(g2);
    GroupLawExperiment e;
    e.product = rank_on_window(c12, window);
    e.first = rank_on_window(c1, window);
    e.second = rank_on_window(c2, window);
    e.difference = rank_on_window(c12 - c1 - c2, window);
    return e;
}

} // namespace punctured
