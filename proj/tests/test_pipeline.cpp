#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/pipeline.hpp"

#include <fstream>

using namespace qc;

namespace {

json load_schema(const std::string& name) {
    std::ifstream in(std::string(QC_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// subset of JSON Schema: type, required, properties, items, enum
void validate(const json& v, const json& s, const std::string& path, std::vector<std::string>& errs) {
    if (s.contains("enum")) {
        bool found = false;
        for (const auto& e : s["enum"]) found = found || e == v;
        if (!found) errs.push_back(path + ": value not in enum");
    }
    if (s.contains("type")) {
        const std::string t = s["type"];
        bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                  (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
                  (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number());
        if (!ok) {
            errs.push_back(path + ": expected " + t);
            return;
        }
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& k : s["required"])
                if (!v.contains(k.get<std::string>())) errs.push_back(path + ": missing " + k.get<std::string>());
        if (s.contains("properties"))
            for (const auto& [k, sub] : s["properties"].items())
                if (v.contains(k)) validate(v[k], sub, path + "." + k, errs);
    }
    if (v.is_array() && s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], path + "[" + std::to_string(i) + "]", errs);
}

std::vector<std::string> errors(const json& v, const json& s) {
    std::vector<std::string> e;
    validate(v, s, "$", e);
    return e;
}

const Stage& last(const Report& R) { return R.stages.back(); }

}  // namespace

TEST_CASE("catalog entries") {
    for (const auto& n : catalog_names()) {
        auto e = catalog_get(n);
        CHECK(e.F.is_homogeneous());
        CHECK(e.degree == e.F.degree());
        CHECK(e.degree == (n.find("quartic") != std::string::npos ? 4 : 5));
    }
    CHECK(is_invariant(catalog_get("new_quartic").F, 0));
    CHECK(is_invariant(catalog_get("new_quintic").F, 0));
    CHECK_THROWS_AS(catalog_get("nope"), std::out_of_range);
    CHECK(!catalog_lookup("nope").has_value());
}

TEST_CASE("symmetric-function entries match direct expansion") {
    const std::string t = "(x+y+z+w)";
    auto p = [&](int i) {
        std::string k = std::to_string(i);
        std::string sign = i % 2 ? "-" : "+";
        return "(x^" + k + "+y^" + k + "+z^" + k + "+w^" + k + sign + t + "^" + k + ")";
    };
    auto Q = parse_poly("4*" + p(4) + "-" + p(2) + "^2");
    auto V = parse_poly("12*" + p(5) + "-5*" + p(2) + "*" + p(3));
    CHECK(catalog_get("vdgz_quartic").F == Q);
    CHECK(catalog_get("vdgz_quintic").F == V);
}

TEST_CASE("loading surfaces") {
    CHECK(load_surface("new_quintic").degree == 5);
    CHECK_THROWS_AS(load_surface("no_such_surface"), InputError);
    CHECK_THROWS_AS(load_surface(std::string(QC_SOURCE_DIR) + "/tests/fixtures/bad_polynomial.txt"), InputError);
    auto e = load_surface(std::string(QC_SOURCE_DIR) + "/tests/fixtures/corrupted_quartic.txt");
    CHECK(e.degree == 4);
    CHECK(!(e.F == catalog_get("new_quartic").F));
}

TEST_CASE("squarefree precondition") {
    auto F = catalog_get("new_quartic").F;
    CHECK(squarefree_check(F, 1));
    CHECK(!squarefree_check(parse_poly("(x+y)^2*(z^2+w^2)"), 1));
    CatalogEntry sq;
    sq.name = "square";
    sq.F = parse_poly("(x^2+y*z)^2*x");
    sq.degree = 5;
    CHECK_THROWS_AS(surface_report(sq), InputError);
}

TEST_CASE("surface report validates against the schema") {
    auto schema = load_schema("singularity_certificate.schema.json");
    auto R = surface_report(catalog_get("new_quintic"));
    CHECK(R.pass);
    auto j = R.to_json(false);
    auto errs = errors(j["certificate"], schema);
    for (const auto& e : errs) MESSAGE(e);
    CHECK(errs.empty());
    CHECK(j["certificate"]["verdict"] == "all A2");

    auto Rq = surface_report(catalog_get("new_quartic"));
    CHECK(errors(Rq.to_json(false)["certificate"], schema).empty());
    CHECK(Rq.to_json(false)["certificate"]["free_action"]["free"] == false);
}

TEST_CASE("divisibility report validates against the schema") {
    auto schema = load_schema("divisibility_certificate.schema.json");
    auto R = divisibility(catalog_get("new_quintic"));
    CHECK(R.pass);
    auto j = R.to_json(true);
    auto errs = errors(j, schema);
    for (const auto& e : errs) MESSAGE(e);
    CHECK(errs.empty());
    CHECK(j["det"] == "0");
    CHECK(j["certificate"]["ok"] == true);
    CHECK(j["reference_comparison"]["reference_vector_in_nullspace"] == true);
    CHECK(j["reference_comparison"]["certificate"]["relation"] == "2A1+A1'+2A2+A2'+A3+2A3' ≡ 3L");
    CHECK(!R.transcript.empty());
    // deterministic under the default seed
    CHECK(divisibility(catalog_get("new_quintic")).to_json(true) == j);
}

TEST_CASE("construction replay") {
    auto R = reproduce_construction();
    CHECK(R.pass);
    CHECK(last(R).name == "comparison");
    auto R1 = [] {
        RunOptions o;
        o.action = 1;
        return reproduce_construction(o);
    }();
    CHECK(!R1.pass);
    CHECK(R1.stages.size() == 1);
    CHECK(last(R1).detail.find("no built-in a_1 quartic") != std::string::npos);
}

TEST_CASE("corrupted quartic fails at the node certificate and no later") {
    auto e = load_surface(std::string(QC_SOURCE_DIR) + "/tests/fixtures/corrupted_quartic.txt");
    auto R = reproduce_construction({}, e.F);
    CHECK(!R.pass);
    CHECK(last(R).name == "node certificate");
    CHECK(!last(R).pass);
    for (std::size_t i = 0; i + 1 < R.stages.size(); ++i) CHECK(R.stages[i].pass);
}

TEST_CASE("divisibility needs cusps") {
    auto R = divisibility(catalog_get("vdgz_quartic"));
    CHECK(!R.pass);
    CHECK(R.stages.size() == 1);
    CHECK(last(R).detail.find("needs cusps") != std::string::npos);
}

TEST_CASE("invariant basis table") {
    auto R = invariant_basis_table(5);
    CHECK(R.pass);
    auto j = R.to_json(false);
    CHECK(j.contains("notes"));
}
