#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <punctured/json_io.hpp>

#include "cli.hpp"

using namespace punctured;
using json_io::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.insert(args.begin(), "--json");
    const Run r = run(args);
    CHECK(r.code == expected_code);
    return json::parse(r.out);
}

int check_tree(const json &j)
{
    int seen = 0;
    json again;
    if (json_io::reencode(j, again)) {
        CHECK(again == j);
        ++seen;
    }
    if (j.is_object() || j.is_array())
        for (const auto &child : j) seen += check_tree(child);
    return seen;
}

} // namespace

TEST_CASE("module examples")
{
    const json hom = run_json({"infinity", "verify-hom", "--field", "q", "t^-1", "t^-1", "--window", "30"});
    CHECK(hom["verdict"] == "equivalent");
    CHECK(hom["rank"].get<int>() <= 1);

    const json weil = run_json({"adele", "weil", "--field", "q", "t", "t-1"});
    CHECK(weil["verdict"] == "verified");
    CHECK(weil["report"]["product"] == "1");
    CHECK(weil["report"]["table"] == json{{"t", "-1"}, {"t - 1", "1"}, {"inf", "-1"}});

    const json res = run_json({"adele", "residues", "1/t", "t"});
    CHECK(res["report"]["table"] == json{{"t", "1"}, {"inf", "-1"}});

    const json bad = run_json({"pic", "factor", "--order", "12", "x*y^-1 + (3"}, 2);
    CHECK(bad["verdict"] == "error");
    CHECK(bad["error"]["kind"] == "ParseError");
    CHECK(bad["error"]["message"].get<std::string>().find("at byte 11") != std::string::npos);
}

TEST_CASE("every verb emits one JSON object that re-parses into equal values")
{
    const std::vector<std::vector<std::string>> cases = {
        {"infinity", "to-operator", "t^2 - 1/2*t^-1", "--window", "6"},
        {"infinity", "verify-hom", "t^2 + t^-1", "t^-2 + 3*t^-3", "--window", "10"},
        {"infinity", "residue", "t^-1 + t^-2", "t + 3"},
        {"almost", "build-mg", "--field", "fp:5", "1 + 2*x^-1*y^-1 + x^-2*y^-1", "--window", "4"},
        {"almost", "build-nh", "y + y^-2", "--window", "4"},
        {"almost", "verify-ses", "y^-1 + y^-3", "--window", "5"},
        {"pic", "factor", "--order", "6", "x*y^-1 + 3*x^-1 + x^-2*y"},
        {"pic", "verify-partition", "--order", "5"},
        {"hensel", "roots", "x^2 - y^2 - 2*y", "--prec", "10"},
        {"hensel", "witness", "y^-1 + O(y^-20)", "--dx", "1", "--dy", "1"},
        {"adele", "residues", "--field", "fp:5", "1/(t^2 + 2)", "t^3 + t"},
        {"adele", "weil", "--field", "fp:3", "t^2 + 1", "t/(t - 1)"},
        {"adele", "prop71", "--prec", "6"},
        {"suite", "hensel"},
    };
    for (const auto &args : cases) {
        CAPTURE(args[1]);
        const json j = run_json(args);
        REQUIRE(j.is_object());
        CHECK(j.begin().key() == "verdict");
        check_tree(j);
    }
    const json op = run_json({"infinity", "to-operator", "t^2 - 1/2*t^-1", "--window", "30"})["operator"];
    const json back = run_json({"infinity", "from-operator", op.dump(), "--prec", "8"});
    CHECK(back["series"]["text"] == "t^2 - 1/2*t^-1 + O(t^-8)");
    CHECK(check_tree(back) == 2);
}

TEST_CASE("identical arguments give byte-identical output")
{
    for (const std::vector<std::string> &args : std::vector<std::vector<std::string>>{
             {"suite", "adeles", "--seed", "7"},
             {"--json", "suite", "picard", "--order", "6", "--seed", "3"},
             {"hensel", "roots", "--field", "fp:19", "x^3 - 3*x*y^2 - y^3 - y"},
         }) {
        const Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    CHECK(run({"suite", "adeles", "--seed", "7"}).out.find("80/80 checks pass") != std::string::npos);
    const Run picard = run({"suite", "picard", "--order", "8"});
    CHECK(picard.code == 0);
    CHECK(picard.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"infinity", "verify-hom", "t"}).code == 2);
    CHECK(run({"--field", "fp:6", "adele", "weil", "t", "t"}).code == 2);
    CHECK(run({"adele", "weil", "t", "0"}).code == 2);
    CHECK(run({"adele", "weil", "t^2 + 1", "t"}).code == 2); // place of degree 2 over Q
    CHECK(run({"almost", "build-mg", "1 + x^-1"}).code == 2);
    CHECK(run({"pic", "factor", "x^-1"}).code == 2);
    CHECK(run({"hensel", "roots", "x^2 - y"}).code == 1);
    CHECK(run({"hensel", "witness", "y^-2 + y^-4 + y^-8 + y^-16 + y^-32 + y^-64 + O(y^-70)", "--dx", "6", "--dy", "6"}).code == 1);
    CHECK(run({"infinity", "to-operator", "t^-1 + O(t^-3)", "--window", "10"}).code == 1);
    CHECK(run({"--window", "-1", "infinity", "to-operator", "t"}).code == 2);
    CHECK(run({"infinity", "from-operator", "{\"type\": "}).code == 2);
    CHECK(run({"infinity", "from-operator", "@/nonexistent/op.json"}).code == 2);

    const Run e = run({"adele", "weil", "t", "t + w"});
    CHECK(e.err.find("at byte 4") != std::string::npos);
}
