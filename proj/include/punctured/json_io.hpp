#pragma once

// JSON encodings. Every value object carries a "type" tag, its field
// descriptor, explicit precision, exponent/coefficient arrays, and the
// canonical text as "text". Decoding reads the arrays; "text" is informative.

#include <json.hpp>

#include <punctured/adeles.hpp>
#include <punctured/almost.hpp>
#include <punctured/hensel.hpp>
#include <punctured/infinity.hpp>
#include <punctured/picard.hpp>

namespace punctured::json_io {

using json = nlohmann::ordered_json;

json encode(const FieldValue &a);
json encode(const TruncatedSeries &s);
json encode(const BiSeries &g);
json encode(const ChartSeries &s);
json encode(const ChartUnit &u);
json encode(const Polynomial &p);
json encode(const UPoly &p, const std::string &var);
json encode(const RationalFunction &f);
json encode(const LaurentSeries &s, const std::string &var);
json encode(const WindowedOperator &op);
json encode(const RankCertificate &c);
json encode(const CalkinVerdict &v);
json encode(const MembershipReport &m);
json encode(const AlmostModulePresentation &p);
json encode(const SesReport &r);
json encode(const FactorizationResult &r);
json encode(const PartitionReport &r);
json encode(const LaurentRoot &r);
json encode(const RootReport &r);
json encode(const Witness &w);
json encode(const Th84Report &r);
json encode(const ResidueReport &r);
json encode(const WeilReport &r);
json encode(const Prop71Report &r);

// Decoders take the field from the object's "field" entry.
Field decode_field(const json &j);
FieldValue decode_value(const Field &F, const json &j);
TruncatedSeries decode_truncated_series(const json &j);
BiSeries decode_biseries(const json &j);
ChartSeries decode_chart_series(const json &j);
ChartUnit decode_chart_unit(const json &j);
Polynomial decode_polynomial(const json &j);
RationalFunction decode_rational_function(const json &j);
LaurentSeries decode_laurent_series(const json &j);
WindowedOperator decode_operator(const json &j);
// Images, history and proof; `field`, `source` and `target` are restored too.
RankCertificate decode_rank_certificate(const json &j);

// Decodes any object tagged with a known "type" and encodes it again.
// Returns false for untagged or unknown objects.
bool reencode(const json &j, json &out);

} // namespace punctured::json_io
