#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <punctured/json_io.hpp>
#include <punctured/parse.hpp>
#include <punctured/suites.hpp>

namespace punctured::cli {

namespace {

using json = json_io::json;

struct Outcome {
    explicit Outcome(std::string v) : verdict(std::move(v)) {}
    std::string verdict;
    json body = json::object();
    std::string text;
    int code = 0;
};

struct Globals {
    std::string field = "q";
    bool field_given = false;
    bool json = false;
    std::optional<int> window, prec, order;
    std::uint64_t seed = SuiteOptions{}.seed;

    Field parsed_field() const { return parse_field(field); }

    int window_or(int fallback) const
    {
        const int w = window.value_or(fallback);
        if (w < 0) throw Error(ErrorKind::InvalidArgument, "--window must be >= 0");
        return w;
    }
    int prec_or(int fallback) const
    {
        const int p = prec.value_or(fallback);
        if (p < 1) throw Error(ErrorKind::InvalidArgument, "--prec must be >= 1");
        return p;
    }
    int order_or(int fallback) const
    {
        const int o = order.value_or(fallback);
        if (o < 1) throw Error(ErrorKind::InvalidArgument, "--order must be >= 1");
        return o;
    }
};

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::NotStabilized:
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::WindowExceeded:
    case ErrorKind::WildBranch:
    case ErrorKind::NotInFiltrationLevel: return 1;
    default: return 2;
    }
}

// "@path" reads the payload from a file.
std::string payload(const std::string &arg)
{
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + arg.substr(1));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string describe(const RankCertificate &c)
{
    std::ostringstream s;
    s << "rank " << c.rank << " on window " << c.window << " (" << rank_status_name(c.status);
    if (c.upper_bound()) s << ", bound " << *c.upper_bound();
    if (c.exact()) s << ", exact";
    s << ")";
    return s.str();
}

std::string verified(bool ok) { return ok ? "verified" : "failed"; }

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

// infinity

Outcome to_operator(const Globals &g, const std::string &arg, bool known_terms)
{
    const Field F = g.parsed_field();
    const int W = g.window_or(20);
    const TruncatedSeries f = parse_truncated_series(F, payload(arg), "t", g.prec_or(W + 16));
    const CalkinClass1D cls = phi_of_series(f, W, known_terms ? TruncationPolicy::KnownTerms : TruncationPolicy::Strict);
    Outcome o{"ok"};
    o.body["series"] = json_io::encode(f);
    o.body["window"] = W;
    o.body["operator"] = json_io::encode(cls.op);
    o.body["membership"] = json_io::encode(cls.membership);
    std::ostringstream s;
    s << "f = " << f.to_string() << "\n";
    for (const auto &[b, img] : cls.op.tabulate(W))
        s << "  " << pad(cls.op.source().index_name(b), 6) << " -> " << img.to_string(cls.op.target()) << "\n";
    s << "[phi(f), R_t]: " << describe(cls.membership.certificates.at(0)) << "\n";
    o.text = s.str();
    return o;
}

Outcome from_operator(const Globals &g, const std::string &arg)
{
    const std::string text = payload(arg);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
    const WindowedOperator op = json_io::decode_operator(j);
    if (g.field_given && !(g.parsed_field() == op.field()))
        throw Error(ErrorKind::DescriptorMismatch, "operator is over " + op.field().descriptor() + ", not " + g.field);
    const SeriesReadback back = series_of_operator(calkin_class(op), g.prec_or(12));
    Outcome o{"ok"};
    o.body["series"] = json_io::encode(back.series);
    o.body["probe_rows"] = {back.probe_first, back.probe_last};
    o.body["round_trip"] = json_io::encode(back.round_trip);
    o.text = "series = " + back.series.to_string() + "\nprobe rows " + std::to_string(back.probe_first) + ".." +
             std::to_string(back.probe_last) + "\nround trip: " + calkin_verdict_name(back.round_trip.kind) + ", " +
             describe(back.round_trip.certificate) + "\n";
    return o;
}

Outcome verify_hom(const Globals &g, const std::string &fa, const std::string &ga)
{
    const Field F = g.parsed_field();
    const int W = g.window_or(20);
    const TruncatedSeries f = parse_truncated_series(F, payload(fa), "t", g.prec_or(W));
    const TruncatedSeries h = parse_truncated_series(F, payload(ga), "t", g.prec_or(W));
    const HomomorphismReport r = verify_homomorphism(f, h, W);
    const bool ok = r.verdict.kind == CalkinVerdictKind::EquivalentWithRank;
    Outcome o{calkin_verdict_name(r.verdict.kind)};
    o.code = ok ? 0 : 1;
    o.body["product"] = json_io::encode(r.product);
    o.body["rank"] = r.verdict.rank;
    o.body["defect_bound"] = r.defect_bound;
    o.body["certificate"] = json_io::encode(r.verdict.certificate);
    o.text = "fg = " + r.product.to_string() + "\nphi(f)phi(g) - phi(fg): " + describe(r.verdict.certificate) +
             "\nstructural bound " + std::to_string(r.defect_bound) + "\n";
    return o;
}

Outcome infinity_residue(const Globals &g, const std::string &fa, const std::string &pa)
{
    const Field F = g.parsed_field();
    const TruncatedSeries f = parse_truncated_series(F, payload(fa), "t", g.prec_or(20));
    const Polynomial p = parse_polynomial(F, payload(pa), {"t"});
    const FieldValue r = residue_pairing_at_infinity(f, p);
    Outcome o{"ok"};
    o.body["series"] = json_io::encode(f);
    o.body["polynomial"] = json_io::encode(p);
    o.body["residue"] = r.to_string();
    o.text = "res_inf(f p dt) = " + r.to_string() + "\n";
    return o;
}

// almost

std::string presentation_text(const AlmostModulePresentation &p)
{
    std::ostringstream s;
    s << "basis " << basis_kind_name(p.scheme.kind()) << ", window " << p.window << "\n";
    for (const auto &[name, op] : p.generators) {
        s << "generator " << name << " (window " << op.window() << ", growth " << op.growth() << ")\n";
        for (const auto &[b, img] : op.tabulate(std::min(op.window(), 3)))
            s << "  " << pad(op.source().index_name(b), 8) << " -> " << img.to_string(op.target()) << "\n";
        if (op.window() > 3) s << "  ...\n";
    }
    for (const auto &r : p.relations) s << r.lhs << " - " << r.rhs << ": " << describe(r.certificate) << "\n";
    s << "unit: " << describe(p.unit) << "\n";
    return s.str();
}

Outcome build_mg(const Globals &g, const std::string &arg)
{
    const Field F = g.parsed_field();
    const int W = g.window_or(14);
    const BiSeries gs = parse_biseries(F, payload(arg), g.prec_or(W + 3));
    const AlmostModulePresentation p = build_M_g(gs, W);
    Outcome o{"ok"};
    o.body["g"] = json_io::encode(gs);
    o.body["presentation"] = json_io::encode(p);
    o.text = "g = " + gs.to_string() + "\n" + presentation_text(p);
    return o;
}

Outcome build_nh(const Globals &g, const std::string &arg)
{
    const Field F = g.parsed_field();
    const int W = g.window_or(14);
    const TruncatedSeries h = parse_truncated_series(F, payload(arg), "y", g.prec_or(W + 2));
    const AlmostModulePresentation p = build_N_h(h, W);
    Outcome o{"ok"};
    o.body["h"] = json_io::encode(h);
    o.body["presentation"] = json_io::encode(p);
    o.text = "h = " + h.to_string() + "\n" + presentation_text(p);
    return o;
}

Outcome ses(const Globals &g, const std::string &arg)
{
    const Field F = g.parsed_field();
    const int W = g.window_or(14);
    const TruncatedSeries h = parse_truncated_series(F, payload(arg), "y", g.prec_or(W + 8));
    const SesReport r = verify_ses(h, W);
    Outcome o{verified(r.passed)};
    o.code = r.passed ? 0 : 1;
    o.body["h"] = json_io::encode(h);
    o.body["report"] = json_io::encode(r);
    std::ostringstream s;
    s << "g = 1 - x^-1 h = " << r.g.to_string() << "\n";
    s << "degree  dim k[x,y]  dim V  dim W  rank iota  rank pi  exact\n";
    for (const auto &p : r.pieces)
        s << pad(std::to_string(p.degree), 8) << pad(std::to_string(p.dim_source), 11) << pad(std::to_string(p.dim_middle), 7)
          << pad(std::to_string(p.dim_target), 7) << pad(std::to_string(p.rank_iota), 11) << pad(std::to_string(p.rank_pi), 9)
          << (p.exact ? "yes" : "no") << "\n";
    for (const auto &d : r.defects) s << "defect " << d.map << " / " << d.generator << ": " << describe(d.certificate) << "\n";
    o.text = s.str();
    return o;
}

// pic

Outcome pic_factor(const Globals &g, const std::string &arg)
{
    const Field F = g.parsed_field();
    const int N = g.order_or(12);
    const ChartUnit c(parse_chart_series(F, Chart::G12, payload(arg), N));
    const FactorizationResult r = factor_cocycle(c, N);
    const bool sound = factorization_defect(c, r).agrees_with(ChartUnit::one(Chart::G12, F, N));
    Outcome o{verified(sound)};
    o.code = sound ? 0 : 1;
    o.body["cocycle"] = json_io::encode(c);
    o.body["order"] = N;
    o.body["factorization"] = json_io::encode(r);
    o.text = "c  = " + c.to_string() + "\nn  = " + std::to_string(r.n) + "\nscalar = " + r.scalar_normalization.to_string() +
             "\ng  = " + r.g.to_string() + "\nu1 = " + r.u1.to_string() + "\nu2 = " + r.u2.to_string() +
             "\nresidual = " + r.residual.to_string() + "\n";
    return o;
}

Outcome pic_partition(const Globals &g)
{
    const PartitionReport r = verify_partition_of_graded(g.order_or(12), g.parsed_field());
    Outcome o{verified(r.passed)};
    o.code = r.passed ? 0 : 1;
    o.body["report"] = json_io::encode(r);
    std::ostringstream s;
    s << "degree 0: " << (r.degree_zero_ok ? "ok" : "FAIL") << "\n";
    const auto range = [](const std::vector<int> &v) {
        if (v.empty()) return std::string("-");
        return std::to_string(v.front()) + ".." + std::to_string(v.back());
    };
    for (const auto &l : r.levels)
        s << "n = " << pad(std::to_string(l.n), 3) << " G1 " << pad(range(l.g1), 8) << " G " << pad(range(l.g), 8) << " G2 "
          << pad(range(l.g2), 8) << (l.disjoint && l.spanning && l.matches_rule ? "ok" : "FAIL") << "\n";
    o.text = s.str();
    return o;
}

// hensel

Outcome hensel_roots(const Globals &g, const std::string &arg)
{
    const Field F = g.parsed_field();
    const int N = g.prec_or(20);
    const Polynomial P = parse_polynomial(F, payload(arg), {"x", "y"});
    const auto coeffs = P.coefficients_in(0);
    const bool monic = !coeffs.empty() && coeffs.back().degree() == 0;
    const RootReport r = monic ? laurent_roots(P, N) : laurent_roots_any(P, N);
    Outcome o{"ok"};
    o.body["polynomial"] = json_io::encode(P);
    o.body["roots"] = json_io::encode(r);
    std::ostringstream s;
    s << "P = " << P.to_string() << "\n";
    for (const auto &root : r.roots) s << "root " << root.h.to_string() << (root.exact ? " (exact)" : "") << "\n";
    for (const auto &u : r.unresolved) s << "unresolved: slope " << u.slope << ", " << u.count << " roots, " << u.reason << "\n";
    o.text = s.str();
    return o;
}

Outcome hensel_witness(const Globals &g, const std::string &arg, int dx, int dy)
{
    const Field F = g.parsed_field();
    const TruncatedSeries h = parse_truncated_series(F, payload(arg), "y", g.prec_or(40));
    const auto w = algebraicity_witness(h, dx, dy);
    Outcome o{w ? "found" : "none"};
    o.code = w ? 0 : 1;
    o.body["h"] = json_io::encode(h);
    o.body["degrees"] = {dx, dy};
    o.body["witness"] = w ? json_io::encode(*w) : json(nullptr);
    o.text = w ? "P = " + w->P.to_string() + "\n" : "no witness with deg_x <= " + std::to_string(dx) + ", deg_y <= " + std::to_string(dy) + "\n";
    return o;
}

Outcome hensel_pipeline(const Globals &g, const std::string &arg, int dx, int dy)
{
    const Field F = g.parsed_field();
    const TruncatedSeries h = parse_truncated_series(F, payload(arg), "y", g.prec_or(40));
    const Th84Report r = th84_pipeline(h, dx, dy);
    Outcome o{verified(r.vanishes)};
    o.code = r.vanishes ? 0 : 1;
    o.body["report"] = json_io::encode(r);
    o.text = (r.witness ? "P = " + r.witness->P.to_string() : std::string("no witness")) + "\nP(h, y) = " + r.residual.to_string() + "\n";
    return o;
}

// adele

std::string place_table(const std::vector<PlaceValue> &table)
{
    std::ostringstream s;
    for (const auto &pv : table) s << "  " << pad(pv.place.label(), 16) << pv.value.to_string() << "\n";
    return s.str();
}

Outcome adele_residues(const Globals &g, const std::string &fa, const std::string &ga)
{
    const Field F = g.parsed_field();
    const RationalFunction f = parse_rational_function(F, payload(fa)), h = parse_rational_function(F, payload(ga));
    const ResidueReport r = residue_theorem_check(f, h);
    Outcome o{verified(r.passed)};
    o.code = r.passed ? 0 : 1;
    o.body["f"] = json_io::encode(f);
    o.body["g"] = json_io::encode(h);
    o.body["report"] = json_io::encode(r);
    o.text = "Tr res(f dg):\n" + place_table(r.table) + "sum = " + r.sum.to_string() + "\n";
    return o;
}

Outcome adele_weil(const Globals &g, const std::string &fa, const std::string &ga)
{
    const Field F = g.parsed_field();
    const RationalFunction f = parse_rational_function(F, payload(fa)), h = parse_rational_function(F, payload(ga));
    const WeilReport r = weil_reciprocity_check(f, h);
    Outcome o{verified(r.passed)};
    o.code = r.passed ? 0 : 1;
    o.body["f"] = json_io::encode(f);
    o.body["g"] = json_io::encode(h);
    o.body["report"] = json_io::encode(r);
    o.text = "Nm (f, g):\n" + place_table(r.table) + "product = " + r.product.to_string() + "\n";
    return o;
}

Outcome adele_prop71(const Globals &g)
{
    const Prop71Report r = prop71_check(g.prec_or(15), g.parsed_field());
    Outcome o{verified(r.passed)};
    o.code = r.passed ? 0 : 1;
    o.body["report"] = json_io::encode(r);
    o.text = "precision " + std::to_string(r.precision) + ": ker " + std::to_string(r.kernel_dim) + ", coker " +
             std::to_string(r.cokernel_dim) + ", constants vanish: " + (r.constants_vanish ? "yes" : "no") +
             "\nintertwining defect: " + describe(r.intertwining) + "\n";
    return o;
}

// suite

Outcome suite(const Globals &g, const std::string &name)
{
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    SuiteOptions options;
    options.seed = g.seed;
    options.order = g.order_or(12);
    options.window = g.window.value_or(0);
    if (options.window < 0) throw Error(ErrorKind::InvalidArgument, "--window must be >= 0");
    bool ok = true;
    json suites = json::array();
    std::ostringstream s;
    for (const auto &n : names) {
        const SuiteReport r = run_suite(n, options);
        ok = ok && r.ok();
        json failures = json::array();
        for (const auto &c : r.checks)
            if (!c.passed) failures.push_back({{"id", c.id}, {"detail", c.detail}});
        suites.push_back({{"name", n}, {"passed", r.passed()}, {"total", r.checks.size()}, {"failures", failures}});
        s << n << ": " << r.passed() << "/" << r.checks.size() << " checks pass\n";
        for (const auto &c : r.checks)
            if (!c.passed) s << "  FAIL " << c.id << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    Outcome o{ok ? "passed" : "failed"};
    o.code = ok ? 0 : 1;
    o.body["seed"] = g.seed;
    o.body["suites"] = suites;
    o.text = s.str();
    return o;
}

void emit(const Globals &g, const Outcome &o, std::ostream &out)
{
    if (g.json) {
        json doc = {{"verdict", o.verdict}};
        for (const auto &[k, v] : o.body.items()) doc[k] = v;
        out << doc.dump(2) << "\n";
    } else {
        out << o.text << "verdict: " << o.verdict << "\n";
    }
}

int fail(const Globals &g, const std::string &kind, const std::string &message, int code, std::ostream &out, std::ostream &err)
{
    if (g.json) {
        json doc = {{"verdict", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
        out << doc.dump(2) << "\n";
    } else {
        err << "error: " << kind << ": " << message << "\n";
    }
    return code;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Globals g;
    CLI::App app{"Exact computations at the formal punctured neighborhood of infinity", "punctured"};
    app.require_subcommand(1);
    app.fallthrough();
    auto *field_opt = app.add_option("--field", g.field, "q | fp:<p> | fq:<p>:<modulus in z>");
    app.add_flag("--json", g.json, "Emit a single JSON object");
    app.add_option("--window", g.window, "Operator window (degree bound)");
    app.add_option("--prec", g.prec, "Series precision for inputs without an O(...) term");
    app.add_option("--order", g.order, "Cocycle order / partition bound");
    app.add_option("--seed", g.seed, "Suite seed");

    std::function<Outcome()> action;
    std::string a1, a2;
    bool known_terms = false;
    int dx = 2, dy = 2;

    const auto group = [&](const std::string &name, const std::string &help) {
        auto *sub = app.add_subcommand(name, help);
        sub->require_subcommand(1);
        sub->fallthrough();
        return sub;
    };
    const auto verb = [&](CLI::App *parent, const std::string &name, const std::string &help, int nargs) {
        auto *sub = parent->add_subcommand(name, help);
        sub->fallthrough();
        if (nargs >= 1) sub->add_option("first", a1, "Input (inline, or @file)")->required();
        if (nargs >= 2) sub->add_option("second", a2, "Second input (inline, or @file)")->required();
        return sub;
    };

    auto *inf = group("infinity", "k[t] <-> k((t^-1)) correspondence");
    auto *to_op = verb(inf, "to-operator", "phi(f) on the window, with its [phi, R_t] certificate", 1);
    to_op->add_flag("--known-terms", known_terms, "Act by the known terms only");
    to_op->callback([&] { action = [&] { return to_operator(g, a1, known_terms); }; });
    verb(inf, "from-operator", "Read a series back from a JSON operator", 1)->callback([&] { action = [&] { return from_operator(g, a1); }; });
    verb(inf, "verify-hom", "phi(f)phi(g) = phi(fg) modulo finite rank", 2)->callback([&] { action = [&] { return verify_hom(g, a1, a2); }; });
    verb(inf, "residue", "res_inf(f p(t) dt)", 2)->callback([&] { action = [&] { return infinity_residue(g, a1, a2); }; });

    auto *alm = group("almost", "almost modules over k[x,y]");
    verb(alm, "build-mg", "M_g for g in G", 1)->callback([&] { action = [&] { return build_mg(g, a1); }; });
    verb(alm, "build-nh", "N_h for h in k((y^-1))", 1)->callback([&] { action = [&] { return build_nh(g, a1); }; });
    verb(alm, "verify-ses", "0 -> k[x,y] -> M_{1 - x^-1 h} -> N_h -> 0", 1)->callback([&] { action = [&] { return ses(g, a1); }; });

    auto *pic = group("pic", "Picard cocycles on G12");
    verb(pic, "factor", "Factor a G12 cocycle", 1)->callback([&] { action = [&] { return pic_factor(g, a1); }; });
    verb(pic, "verify-partition", "Graded pieces partition between G1, G and G2", 0)->callback([&] { action = [&] { return pic_partition(g); }; });

    auto *hen = group("hensel", "Laurent roots and algebraicity witnesses");
    verb(hen, "roots", "Roots of P(x, y) in k((y^-1))", 1)->callback([&] { action = [&] { return hensel_roots(g, a1); }; });
    for (const char *name : {"witness", "th84-pipeline"}) {
        const bool pipeline = std::string(name) == "th84-pipeline";
        auto *v = verb(hen, name, pipeline ? "Witness search, then P(h, y) = 0" : "Polynomial annihilating a series", 1);
        v->add_option("--dx", dx, "x-degree bound")->capture_default_str();
        v->add_option("--dy", dy, "y-degree bound")->capture_default_str();
        v->callback([&, pipeline] {
            action = [&, pipeline] { return pipeline ? hensel_pipeline(g, a1, dx, dy) : hensel_witness(g, a1, dx, dy); };
        });
    }

    auto *ade = group("adele", "Residues and reciprocity on P^1");
    verb(ade, "residues", "Traced residues of f dg at every place", 2)->callback([&] { action = [&] { return adele_residues(g, a1, a2); }; });
    verb(ade, "weil", "Normed tame symbols of (f, g)", 2)->callback([&] { action = [&] { return adele_weil(g, a1, a2); }; });
    verb(ade, "prop71", "k[t] against K_inf / O_inf", 0)->callback([&] { action = [&] { return adele_prop71(g); }; });

    auto *sui = app.add_subcommand("suite", "Randomized property suites");
    sui->fallthrough();
    sui->add_option("name", a1, "calkin | almost | picard | hensel | adeles | all")->required();
    sui->callback([&] { action = [&] { return suite(g, a1); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        return fail(g, "Usage", e.what(), 2, out, err);
    }
    g.field_given = field_opt->count() > 0;

    try {
        const Outcome o = action();
        emit(g, o, out);
        return o.code;
    } catch (const Error &e) {
        return fail(g, error_kind_name(e.kind()), e.message(), exit_code(e.kind()), out, err);
    } catch (const json::exception &e) {
        return fail(g, "Parse", e.what(), 2, out, err);
    }
}

} // namespace punctured::cli
