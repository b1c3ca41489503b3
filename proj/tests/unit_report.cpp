#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gseed/corpus.hpp"
#include "gseed/report.hpp"

using namespace gseed;

TEST_CASE("scalar serializers keep exact decimal strings") {
    CHECK(json_rational(Rat(-22, 7)) == Json("-22/7"));
    CHECK(json_rational(Rat(5)) == Json("5"));
    CHECK(json_integer(Int(1) << 80) == Json("1208925819614629174706176"));

    Json f = json_bigfloat(BigFloat(Rat(1, 2), 128));
    CHECK(f["bits"] == 128);
    CHECK(f["value"] == Json("0.5e0"));
}

TEST_CASE("polynomials serialize ascending") {
    RationalPoly p({Rat(3), Rat(0), Rat(-1, 2)});
    Json arr = json_poly(p);
    REQUIRE(arr.size() == 3);
    CHECK(arr[0] == Json("3"));
    CHECK(arr[1] == Json("0"));
    CHECK(arr[2] == Json("-1/2"));
}

TEST_CASE("structure report is byte-deterministic") {
    GFunctionSpec spec = polylog_spec();
    StructureSummary s = analyze_operator(spec.op);
    Json one = report_structure("geometric", s);
    Json two = report_structure("geometric", analyze_operator(spec.op));
    CHECK(one.dump(2) == two.dump(2));
    CHECK(one["tool"] == Json("gseed"));
    CHECK(one["format_version"] == 1);
    CHECK(one["kind"] == Json("structure"));
    CHECK(one["mu"] == 1);
    CHECK(one["ell"] == 1);
    /* no environment-dependent keys */
    CHECK(one.find("timestamp") == one.end());
    CHECK(one.find("host") == one.end());
}

TEST_CASE("write_report to file round-trips through the parser") {
    GFunctionSpec spec = polylog_spec();
    ThetaForm tf = theta_form(spec.op);
    CoefficientStream A(tf, spec.initial);
    Json doc = report_coefficients("geometric", A, 6);

    std::string path = "report_roundtrip_tmp.json";
    write_report(doc, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    in.close();
    std::remove(path.c_str());

    Json parsed = Json::parse(buffer.str());
    CHECK(parsed == doc);
    CHECK(parsed["coefficients"].size() == 7);
    CHECK(parsed["coefficients"][3] == Json("1"));
    /* trailing newline, exactly one */
    std::string text = buffer.str();
    REQUIRE(!text.empty());
    CHECK(text.back() == '\n');
    CHECK(text[text.size() - 2] != '\n');
}

TEST_CASE("corpus report carries the pass flag and named failures") {
    Json clean = report_corpus(corpus_check(false, 0), false, 0);
    CHECK(clean["passed"] == true);
    CHECK(clean["failures"].empty());
    CHECK(clean.find("seed") == clean.end());

    Json broken = report_corpus(corpus_check(true, 0), true, 0);
    CHECK(broken["passed"] == false);
    CHECK(broken["seed"] == 0);
    REQUIRE(!broken["failures"].empty());
    std::string first = broken["failures"][0].get<std::string>();
    CHECK(first.find("mu") != std::string::npos);
}

TEST_CASE("write_report rejects unwritable paths") {
    Json doc;
    doc["x"] = 1;
    CHECK_THROWS_AS(write_report(doc, "no_such_dir_xyz/report.json"), input_error);
}
