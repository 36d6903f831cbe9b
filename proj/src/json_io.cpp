#include <punctured/json_io.hpp>

#include <punctured/parse.hpp>

namespace punctured::json_io {

namespace {

Error bad(const std::string &what) { return Error(ErrorKind::Parse, "json: " + what); }

const json &at(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing \"") + key + "\"");
    return j.at(key);
}

void expect_type(const json &j, const std::string &type)
{
    if (at(j, "type") != type) throw bad("expected type " + type);
}

json encode_index(Index b) { return json::array({b.i, b.j}); }

Index decode_index(const json &j)
{
    if (!j.is_array() || j.size() != 2) throw bad("index must be [i, j]");
    return {j[0].get<int>(), j[1].get<int>()};
}

json encode_scheme(const BasisScheme &s) { return {{"kind", basis_kind_name(s.kind())}, {"names", s.names()}}; }

BasisScheme decode_scheme(const json &j)
{
    return BasisScheme(basis_kind_from_name(at(j, "kind").get<std::string>()), at(j, "names").get<std::vector<std::string>>());
}

json encode_combination(const Combination &c)
{
    json out = json::array();
    for (const auto &[b, v] : c.terms()) out.push_back(json::array({b.i, b.j, v.to_string()}));
    return out;
}

Combination decode_combination(const Field &F, const json &j)
{
    Combination c(F);
    for (const auto &t : j) c.add({t.at(0).get<int>(), t.at(1).get<int>()}, decode_value(F, t.at(2)));
    return c;
}

json encode_bound(const std::optional<ImageBound> &b)
{
    if (!b) return nullptr;
    json span = json::array();
    for (Index i : b->span) span.push_back(encode_index(i));
    return {{"span", span}, {"reason", b->reason}};
}

std::optional<ImageBound> decode_bound(const json &j)
{
    if (j.is_null()) return std::nullopt;
    ImageBound b;
    for (const auto &i : at(j, "span")) b.span.push_back(decode_index(i));
    b.reason = at(j, "reason").get<std::string>();
    return b;
}

RankStatus decode_status(const std::string &s)
{
    for (RankStatus r : {RankStatus::Proved, RankStatus::Stable, RankStatus::Growing})
        if (rank_status_name(r) == s) return r;
    throw bad("unknown rank status " + s);
}

Chart decode_chart(const std::string &s)
{
    for (Chart c : {Chart::G1, Chart::G2, Chart::G12})
        if (chart_name(c) == s) return c;
    throw bad("unknown chart " + s);
}

json place_values(const std::vector<PlaceValue> &table)
{
    json out = json::object();
    for (const auto &pv : table) out[pv.place.label()] = pv.value.to_string();
    return out;
}

json value_list(const std::vector<FieldValue> &v)
{
    json out = json::array();
    for (const auto &c : v) out.push_back(c.to_string());
    return out;
}

} // namespace

json encode(const FieldValue &a) { return a.to_string(); }

json encode(const TruncatedSeries &s)
{
    json terms = json::array();
    for (const auto &[e, c] : s.terms()) terms.push_back(json::array({e, c.to_string()}));
    return {{"type", "truncated_series"}, {"field", s.field().descriptor()}, {"var", s.variable()},
            {"precision", s.precision()}, {"terms", terms}, {"text", s.to_string()}};
}

json encode(const BiSeries &g)
{
    json terms = json::array();
    for (const auto &[ij, c] : g.terms()) terms.push_back(json::array({ij.first, ij.second, c.to_string()}));
    return {{"type", "biseries"}, {"field", g.field().descriptor()}, {"precision", g.precision()},
            {"terms", terms}, {"text", g.to_string()}};
}

json encode(const ChartSeries &s)
{
    // Terms are x^a y^b exponent pairs, in level order.
    json terms = json::array();
    for (int k = s.valuation(); k < s.precision(); ++k) {
        const LaurentPoly level = s.level(k);
        for (const auto &[e, c] : level.terms()) {
            const auto [a, b] = s.xy_exponents(k, e);
            terms.push_back(json::array({a, b, c.to_string()}));
        }
    }
    return {{"type", "chart_series"}, {"chart", chart_name(s.chart())}, {"field", s.field().descriptor()},
            {"precision", s.precision()}, {"terms", terms}, {"text", s.to_string()}};
}

json encode(const ChartUnit &u)
{
    json j = encode(u.series());
    j["type"] = "chart_unit";
    j["scalar"] = u.scalar().to_string();
    j["exponent"] = u.exponent();
    return j;
}

json encode(const Polynomial &p)
{
    json terms = json::array();
    for (const auto &[e, c] : p.terms()) {
        json t = json::array();
        for (int v = 0; v < p.nvars(); ++v) t.push_back(e[v]);
        t.push_back(c.to_string());
        terms.push_back(t);
    }
    return {{"type", "polynomial"}, {"field", p.field().descriptor()}, {"vars", p.variables()},
            {"terms", terms}, {"text", p.to_string()}};
}

json encode(const UPoly &p, const std::string &var) { return encode(Polynomial::from_upoly(p, var)); }

json encode(const RationalFunction &f)
{
    return {{"type", "rational_function"}, {"field", f.field().descriptor()}, {"var", f.variable()},
            {"numerator", value_list(f.numerator().coefficients())},
            {"denominator", value_list(f.denominator().coefficients())}, {"text", f.to_string()}};
}

json encode(const LaurentSeries &s, const std::string &var)
{
    json terms = json::array();
    for (const auto &[e, c] : s.terms()) terms.push_back(json::array({e, c.to_string()}));
    return {{"type", "laurent_series"}, {"field", s.field().descriptor()}, {"var", var},
            {"precision", s.precision()}, {"terms", terms}, {"text", s.to_string(var)}};
}

json encode(const WindowedOperator &op)
{
    json table = json::array();
    for (const auto &[b, img] : op.tabulate(op.window())) table.push_back(json::array({encode_index(b), encode_combination(img)}));
    return {{"type", "operator"}, {"name", op.name()}, {"field", op.field().descriptor()},
            {"source", encode_scheme(op.source())}, {"target", encode_scheme(op.target())},
            {"window", op.window()}, {"growth", op.growth()}, {"image_bound", encode_bound(op.image_bound())},
            {"table", table}};
}

json encode(const RankCertificate &c)
{
    json images = json::array();
    for (const auto &[b, img] : c.images) images.push_back(json::array({encode_index(b), encode_combination(img)}));
    json j = {{"type", "rank_certificate"}, {"operator", c.operator_name}, {"field", c.field.descriptor()},
              {"source", encode_scheme(c.source)}, {"target", encode_scheme(c.target)}, {"window", c.window},
              {"rank", c.rank}, {"history", c.history}, {"stable", c.stable}, {"status", rank_status_name(c.status)},
              {"proof", encode_bound(c.proof)}, {"proof_checked", c.proof_checked}};
    j["upper_bound"] = c.upper_bound() ? json(*c.upper_bound()) : json(nullptr);
    j["exact"] = c.exact();
    j["images"] = images;
    return j;
}

json encode(const CalkinVerdict &v)
{
    return {{"verdict", calkin_verdict_name(v.kind)}, {"rank", v.rank}, {"certificate", encode(v.certificate)}};
}

json encode(const MembershipReport &m)
{
    json certs = json::array();
    for (const auto &c : m.certificates) certs.push_back(encode(c));
    return {{"member", m.member}, {"generators", m.generators}, {"certificates", certs}};
}

json encode(const AlmostModulePresentation &p)
{
    json gens = json::object();
    for (const auto &[name, op] : p.generators) gens[name] = encode(op);
    json rels = json::array();
    for (const auto &r : p.relations) rels.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}, {"certificate", encode(r.certificate)}});
    return {{"field", p.field.descriptor()}, {"scheme", encode_scheme(p.scheme)}, {"window", p.window},
            {"generators", gens}, {"relations", rels}, {"unit", encode(p.unit)}};
}

json encode(const SesReport &r)
{
    json pieces = json::array();
    for (const auto &g : r.pieces)
        pieces.push_back({{"degree", g.degree}, {"dims", {g.dim_source, g.dim_middle, g.dim_target}},
                          {"rank_iota", g.rank_iota}, {"rank_pi", g.rank_pi}, {"composite_zero", g.composite_zero},
                          {"exact", g.exact}});
    json defects = json::array();
    for (const auto &d : r.defects)
        defects.push_back({{"map", d.map}, {"generator", d.generator}, {"certificate", encode(d.certificate)}});
    return {{"window", r.window}, {"g", encode(r.g)}, {"graded_exact", r.exact}, {"defects_bounded", r.defects_bounded},
            {"pieces", pieces}, {"defects", defects}};
}

json encode(const FactorizationResult &r)
{
    return {{"n", r.n}, {"g", encode(r.g)}, {"u1", encode(r.u1)}, {"u2", encode(r.u2)},
            {"scalar", r.scalar_normalization.to_string()}, {"residual", encode(r.residual)},
            {"residual_levels", r.residual_levels}};
}

json encode(const PartitionReport &r)
{
    json levels = json::array();
    for (const auto &l : r.levels)
        levels.push_back({{"n", l.n}, {"G1", l.g1}, {"G", l.g}, {"G2", l.g2}, {"disjoint", l.disjoint},
                          {"spanning", l.spanning}, {"matches_rule", l.matches_rule}});
    return {{"bound", r.bound}, {"degree_zero_ok", r.degree_zero_ok}, {"levels", levels}};
}

json encode(const LaurentRoot &r)
{
    return {{"h", encode(r.h)}, {"leading_exponent", r.leading_exponent},
            {"leading_coefficient", r.leading_coefficient.to_string()}, {"exact", r.exact},
            {"residual", encode(r.residual)}, {"residual_valuations", r.residual_valuations},
            {"valuation_cap", r.valuation_cap}};
}

json encode(const RootReport &r)
{
    json roots = json::array();
    for (const auto &x : r.roots) roots.push_back(encode(x));
    json unresolved = json::array();
    for (const auto &u : r.unresolved) unresolved.push_back({{"slope", u.slope}, {"count", u.count}, {"reason", u.reason}});
    return {{"roots", roots}, {"unresolved", unresolved}};
}

json encode(const Witness &w)
{
    return {{"P", encode(w.P)}, {"precision", w.precision}, {"equations", w.equations}};
}

json encode(const Th84Report &r)
{
    return {{"h", encode(r.h)}, {"witness", r.witness ? encode(*r.witness) : json(nullptr)},
            {"residual", encode(r.residual)}, {"vanishes", r.vanishes}};
}

json encode(const ResidueReport &r)
{
    return {{"table", place_values(r.table)}, {"sum", r.sum.to_string()}};
}

json encode(const WeilReport &r)
{
    return {{"table", place_values(r.table)}, {"product", r.product.to_string()}};
}

json encode(const Prop71Report &r)
{
    return {{"precision", r.precision}, {"kernel_dim", r.kernel_dim}, {"cokernel_dim", r.cokernel_dim},
            {"constants_vanish", r.constants_vanish}, {"intertwining", encode(r.intertwining)}};
}

Field decode_field(const json &j) { return parse_field(at(j, "field").get<std::string>()); }

FieldValue decode_value(const Field &F, const json &j)
{
    if (!j.is_string()) throw bad("field elements are strings");
    return parse_value(F, j.get<std::string>());
}

TruncatedSeries decode_truncated_series(const json &j)
{
    expect_type(j, "truncated_series");
    const Field F = decode_field(j);
    std::map<int, FieldValue> terms;
    for (const auto &t : at(j, "terms")) terms.emplace(t.at(0).get<int>(), decode_value(F, t.at(1)));
    return TruncatedSeries(F, at(j, "var").get<std::string>(), terms, at(j, "precision").get<int>());
}

BiSeries decode_biseries(const json &j)
{
    expect_type(j, "biseries");
    const Field F = decode_field(j);
    std::map<std::pair<int, int>, FieldValue> terms;
    for (const auto &t : at(j, "terms")) terms.emplace(std::pair{t.at(0).get<int>(), t.at(1).get<int>()}, decode_value(F, t.at(2)));
    return BiSeries(F, {"x", "y"}, terms, at(j, "precision").get<int>());
}

ChartSeries decode_chart_series(const json &j)
{
    if (at(j, "type") != "chart_series" && j.at("type") != "chart_unit") throw bad("expected type chart_series");
    const Field F = decode_field(j);
    const Chart chart = decode_chart(at(j, "chart").get<std::string>());
    const int N = at(j, "precision").get<int>();
    ChartSeries s(chart, F, N);
    for (const auto &t : at(j, "terms"))
        s += ChartSeries::monomial(chart, decode_value(F, t.at(2)), t.at(0).get<int>(), t.at(1).get<int>(), N);
    return s;
}

ChartUnit decode_chart_unit(const json &j)
{
    expect_type(j, "chart_unit");
    return ChartUnit(decode_chart_series(j));
}

Polynomial decode_polynomial(const json &j)
{
    expect_type(j, "polynomial");
    const Field F = decode_field(j);
    const auto vars = at(j, "vars").get<std::vector<std::string>>();
    if (vars.empty() || vars.size() > 2) throw bad("polynomials have one or two variables");
    Polynomial p(F, vars);
    for (const auto &t : at(j, "terms")) {
        if (t.size() != vars.size() + 1) throw bad("polynomial term arity");
        Polynomial::Exponent e{t.at(0).get<int>(), vars.size() == 2 ? t.at(1).get<int>() : 0};
        p.add_term(e, decode_value(F, t.back()));
    }
    return p;
}

RationalFunction decode_rational_function(const json &j)
{
    expect_type(j, "rational_function");
    const Field F = decode_field(j);
    const auto read = [&](const char *key) {
        std::vector<FieldValue> c;
        for (const auto &v : at(j, key)) c.push_back(decode_value(F, v));
        return UPoly(F, c);
    };
    return RationalFunction(read("numerator"), read("denominator"), at(j, "var").get<std::string>());
}

LaurentSeries decode_laurent_series(const json &j)
{
    expect_type(j, "laurent_series");
    const Field F = decode_field(j);
    std::map<int, FieldValue> terms;
    for (const auto &t : at(j, "terms")) terms.emplace(t.at(0).get<int>(), decode_value(F, t.at(1)));
    return LaurentSeries(F, terms, at(j, "precision").get<int>());
}

WindowedOperator decode_operator(const json &j)
{
    expect_type(j, "operator");
    const Field F = decode_field(j);
    std::map<Index, Combination> table;
    for (const auto &row : at(j, "table")) table.emplace(decode_index(row.at(0)), decode_combination(F, row.at(1)));
    WindowedOperator op = WindowedOperator::from_table(at(j, "name").get<std::string>(), F, decode_scheme(at(j, "source")),
                                                       decode_scheme(at(j, "target")), table, at(j, "window").get<int>(),
                                                       at(j, "growth").get<int>());
    if (auto b = decode_bound(j.value("image_bound", json(nullptr)))) op = op.with_image_bound(*b);
    return op;
}

RankCertificate decode_rank_certificate(const json &j)
{
    expect_type(j, "rank_certificate");
    RankCertificate c;
    c.operator_name = at(j, "operator").get<std::string>();
    c.field = decode_field(j);
    c.source = decode_scheme(at(j, "source"));
    c.target = decode_scheme(at(j, "target"));
    c.window = at(j, "window").get<int>();
    for (const auto &row : at(j, "images")) c.images.emplace_back(decode_index(row.at(0)), decode_combination(c.field, row.at(1)));
    c.rank = at(j, "rank").get<int>();
    c.history = at(j, "history").get<std::vector<int>>();
    c.stable = at(j, "stable").get<bool>();
    c.status = decode_status(at(j, "status").get<std::string>());
    c.proof = decode_bound(at(j, "proof"));
    c.proof_checked = at(j, "proof_checked").get<bool>();
    return c;
}

bool reencode(const json &j, json &out)
{
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) return false;
    const std::string type = j.at("type").get<std::string>();
    if (type == "truncated_series") out = encode(decode_truncated_series(j));
    else if (type == "biseries") out = encode(decode_biseries(j));
    else if (type == "chart_series") out = encode(decode_chart_series(j));
    else if (type == "chart_unit") out = encode(decode_chart_unit(j));
    else if (type == "polynomial") out = encode(decode_polynomial(j));
    else if (type == "rational_function") out = encode(decode_rational_function(j));
    else if (type == "laurent_series") out = encode(decode_laurent_series(j), j.at("var").get<std::string>());
    else if (type == "operator") out = encode(decode_operator(j));
    else if (type == "rank_certificate") out = encode(decode_rank_certificate(j));
    else return false;
    return true;
}

} // namespace punctured::json_io
