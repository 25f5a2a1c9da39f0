#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfb/corpus.hpp"
#include "mfb/io.hpp"

using namespace mfb;

TEST_CASE("expression parsing") {
    QPoly mp = parse_minimal_polynomial("x^2+1");
    CHECK(mp.degree() == 2);
    CHECK(mp[0] == Rat(1));
    CHECK(mp[2] == Rat(1));

    auto qi = NumberField::create("i", mp);
    BivarPoly d = parse_curve("t^2 + s^2", qi);
    CHECK(d.coeff(0, 2) == NFElem(1));
    CHECK(d.coeff(2, 0) == NFElem(1));

    BivarPoly e = parse_curve("(t - i*s)*(t + i*s)", qi);
    CHECK(e == d);

    BivarPoly f = parse_curve("s*t^2 + 2*s^3 - s", NumberField::rationals());
    CHECK(f.coeff(1, 2) == NFElem(1));
    CHECK(f.coeff(3, 0) == NFElem(2));
    CHECK(f.coeff(1, 0) == NFElem(-1));

    CHECK_THROWS_AS(parse_curve("0.5*s", NumberField::rationals()), SchemaError);
    CHECK_THROWS_AS(parse_curve("s + y", NumberField::rationals()), SchemaError);
    CHECK(parse_curve("1/2*s", NumberField::rationals()).coeff(1, 0) == NFElem(Rat(1) / Rat(2)));

    Series lit = parse_series_literal("t^4*i", qi);
    CHECK(lit.coeff(4) == qi->generator());
}

TEST_CASE("plumbing json round trip is byte identical") {
    PlumbingGraph g = corpus::expected_s1();
    auto j = plumbing_to_json(g);
    std::string text = canonical_graph_text(j);
    PlumbingGraph loaded = plumbing_from_json(nlohmann::json::parse(text));
    std::string text2 = canonical_graph_text(plumbing_to_json(loaded));
    CHECK(text == text2);
    CHECK(isomorphic(g, loaded));

    // ids are normalized on load
    nlohmann::json weird = nlohmann::json::parse(
        R"({"vertices":[{"id":7,"euler":-6},{"id":3,"euler":-1}],)"
        R"("edges":[{"a":7,"b":3,"sign":-1},{"a":3,"b":7}]})");
    PlumbingGraph w = plumbing_from_json(weird);
    CHECK(isomorphic(w, g));

    CHECK_THROWS_AS(plumbing_from_json(nlohmann::json::parse(R"({"edges":[]})")), SchemaError);
    CHECK_THROWS_AS(plumbing_from_json(nlohmann::json::parse(
                        R"({"vertices":[{"id":0,"euler":-1}],"edges":[{"a":0,"b":5}]})")),
                    SchemaError);
}

TEST_CASE("dot export") {
    std::string dot = plumbing_to_dot(corpus::expected_s1());
    CHECK(dot.find("e=-6") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos); // the minus edge
}

TEST_CASE("input parsing and the compute driver") {
    nlohmann::json j = nlohmann::json::parse(R"({
        "mode": "sigma10",
        "field": {"generator": "i", "minpoly": "x^2+1"},
        "d": "t^2 + s^2"
    })");
    InputSpec in = parse_input(j);
    CHECK(in.mode == InputSpec::Mode::sigma10);
    ComputeOutput out = run_compute(in);
    CHECK(isomorphic(out.boundary.graph, corpus::expected_s1()));
    CHECK(out.report.find("alpha = -6") != std::string::npos);
    CHECK(out.report.find("Z + Z/6") != std::string::npos);

    // combinatorial mode: H_2 fixture
    nlohmann::json jc = nlohmann::json::parse(R"({
        "mode": "combinatorial",
        "vertices": [{"id":0,"euler":-2},{"id":1,"euler":-2},{"id":2,"euler":-2},{"id":3,"euler":-1}],
        "edges": [[0,1],[1,2],[2,3]],
        "arrowheads": [{"id":1,"attach":3,"m_at_attach":4},{"id":2,"attach":3}],
        "pairs": [{"i":1,"sigma_i":2,"vi":-7}]
    })");
    InputSpec inc = parse_input(jc);
    ComputeOutput outc = run_compute(inc);
    CHECK(isomorphic(outc.boundary.graph, corpus::expected_h(2)));

    // wrong m_at_attach is a computation error, not a schema error
    jc["arrowheads"][0]["m_at_attach"] = 3;
    CHECK_THROWS_AS(run_compute(parse_input(jc)), StageError);

    // malformed pairs: schema error
    nlohmann::json bad = jc;
    bad["pairs"] = nlohmann::json::array();
    bad["pairs"].push_back({{"i", 1}, {"sigma_i", 1}, {"vi", -7}});
    CHECK_THROWS_AS(parse_input(bad), SchemaError);
}

TEST_CASE("literal branch override") {
    nlohmann::json j = nlohmann::json::parse(R"({
        "mode": "sigma10",
        "d": "s^3 + t^4",
        "branches": [{"s": "-t^4", "t": "t^3"}]
    })");
    InputSpec in = parse_input(j);
    REQUIRE(in.literal_branches.size() == 1);
    ComputeOutput out = run_compute(in);
    CHECK(isomorphic(out.boundary.graph, corpus::expected_f4()));

    // a parametrization that does not lie on d is rejected
    nlohmann::json bad = nlohmann::json::parse(R"({
        "mode": "sigma10",
        "d": "s^3 + t^4",
        "branches": [{"s": "t^4", "t": "t^3"}]
    })");
    CHECK_THROWS_AS(run_compute(parse_input(bad)), StageError);
}

TEST_CASE("resolution json includes arrowheads and multiplicities") {
    nlohmann::json j = nlohmann::json::parse(R"({"mode": "sigma10", "d": "t^2 + s^4"})");
    ResolutionGraph g = run_resolve(parse_input(j));
    auto rj = resolution_to_json(g);
    REQUIRE(rj["arrowheads"].size() == 2);
    CHECK(rj["arrowheads"][0]["m"] == nlohmann::json::parse("[1,2]"));
    std::string dot = resolution_to_dot(g);
    CHECK(dot.find("rarrow") != std::string::npos);
}
