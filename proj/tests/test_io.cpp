#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cidim/invariants.hpp"
#include "cidim/io.hpp"
#include "cidim/resolution.hpp"

using namespace cidim;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

AlgebraPtr ring_st() {
    return make_algebra(101, {"s", "t"}, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
}

AlgebraPtr ring_xy() { return make_algebra(101, {"x", "y"}, {}); }

AlgebraPtr ring_x2() { return make_algebra(101, {"x"}, {mono({2})}); }

json ring_json_st() {
    return json{{"characteristic", 101},
                {"variables", {"s", "t"}},
                {"relations", {"s^2", "s*t", "t^2"}}};
}

}  // namespace

TEST_CASE("element text round trip") {
    auto a = ring_st();
    auto e = parse_elem(a, "3*s + 2*t");
    CHECK(elem_str(e) == "3*s + 2*t");
    CHECK(e.is_homogeneous());
    CHECK(e.degree_or(-1) == 1);

    CHECK(elem_str(parse_elem(a, "t*2 + s*3")) == "3*s + 2*t");
    CHECK(elem_str(parse_elem(a, "0")) == "0");
    CHECK(elem_str(parse_elem(a, "s - s")) == "0");
    CHECK(elem_str(parse_elem(a, "-s")) == "100*s");
    CHECK(elem_str(parse_elem(a, "s^2")) == "0");  // dies in the quotient
    CHECK(elem_str(parse_elem(a, "104*s")) == "3*s");
    CHECK(elem_str(parse_elem(a, " 5 ")) == "5");

    auto b = ring_xy();
    CHECK(elem_str(parse_elem(b, "x^2*y - 5")) == "x^2*y + 96");
    CHECK(elem_str(parse_elem(b, "x*x*x")) == "x^3");
    CHECK(elem_str(parse_elem(b, "y + x")) == "x + y");  // canonical descending order
    CHECK(elem_str(parse_elem(b, "2*3*x")) == "6*x");
}

TEST_CASE("element parse errors carry offsets") {
    auto a = ring_st();
    CHECK_THROWS_AS(parse_elem(a, ""), ParseError);
    CHECK_THROWS_AS(parse_elem(a, "s +"), ParseError);
    CHECK_THROWS_AS(parse_elem(a, "s & t"), ParseError);
    CHECK_THROWS_AS(parse_elem(a, "q"), ParseError);
    try {
        parse_elem(a, "s + q^2");
        CHECK(false);
    } catch (const ParseError& err) {
        CHECK(err.offset == 4);
        CHECK(std::string(err.what()).find("unknown variable 'q'") != std::string::npos);
        CHECK(std::string(err.what()).find("(at offset 4)") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_monomial_text(a, "2*s"), ParseError);
    CHECK_THROWS_AS(parse_monomial_text(a, "s + t"), ParseError);
    // monomials are read against the free ambient ring, where s*t survives
    CHECK(parse_monomial_text(make_algebra(101, {"s", "t"}, {}), "s*t") == mono({1, 1}));
}

TEST_CASE("ring json round trip") {
    json j = ring_json_st();
    auto a = ring_from_json(j);
    CHECK(a->same_as(*ring_st()));
    CHECK(ring_to_json(*a) == j);

    json free_ring{{"characteristic", 101}, {"variables", {"x", "y"}}, {"relations", json::array()}};
    auto b = ring_from_json(free_ring);
    CHECK(b->same_as(*ring_xy()));
    CHECK(ring_to_json(*b) == free_ring);

    CHECK_THROWS_AS(ring_from_json(json{{"variables", {"x"}}}), ParseError);
    CHECK_THROWS_AS(ring_from_json(json{{"characteristic", 1}, {"variables", {"x"}}}), ParseError);
    CHECK_THROWS_AS(
        ring_from_json(json{{"characteristic", 101}, {"variables", json::array()}}),
        ParseError);
    CHECK_THROWS_AS(ring_from_json(json{{"characteristic", 101},
                                        {"variables", {"x"}},
                                        {"relations", {"y^2"}}}),
                    ParseError);
}

TEST_CASE("module json round trip") {
    auto a = ring_st();
    json j = json::parse(R"({
        "kind": "module",
        "generator_degrees": [0],
        "relations": {"rows": 1, "cols": 2, "entries": [["s", "t"]]}
    })");
    GradedModule m = module_from_json(a, j);
    CHECK(m.gens.rank() == 1);
    CHECK(m.rels.cols() == 2);
    CHECK(m.rel_degs == std::vector<int>{1, 1});
    CHECK(module_to_json(m) == j);

    json free_j{{"kind", "module"}, {"generator_degrees", {0, 2}}};
    GradedModule f = module_from_json(a, free_j);
    CHECK(f.presented_free());
    CHECK(module_to_json(f) == free_j);

    // relation shape mismatch
    json bad = j;
    bad["relations"]["rows"] = 2;
    CHECK_THROWS_AS(module_from_json(a, bad), ParseError);
    // inhomogeneous relation entry rejected by module construction
    json inh = j;
    inh["relations"]["entries"] = {{"s + 1", "t"}};
    CHECK_THROWS(module_from_json(a, inh));
}

TEST_CASE("complex json round trip") {
    auto a = ring_x2();
    json j = json::parse(R"({
        "kind": "complex",
        "lo": 0,
        "components": [{"generator_degrees": [0]}, {"generator_degrees": [1]}],
        "differentials": [{"rows": 1, "cols": 1, "entries": [["x"]]}]
    })");
    Complex x = complex_from_json(a, j);
    CHECK(x.lo() == 0);
    CHECK(x.hi() == 1);
    CHECK(x.all_free());
    CHECK(complex_to_json(x) == j);

    // object dispatch: module lands in level zero
    Complex y = object_from_json(a, json{{"kind", "module"}, {"generator_degrees", {0, 1}}});
    CHECK(y.lo() == 0);
    CHECK(y.hi() == 0);
    CHECK(y.at(0).gens.rank() == 2);
    CHECK_THROWS_AS(object_from_json(a, json{{"kind", "widget"}}), ParseError);

    // mismatched differential count
    json bad = j;
    bad["differentials"] = json::array();
    CHECK_THROWS_AS(complex_from_json(a, bad), ParseError);
    // d*d = x^2 != 0 over a polynomial ring: rejected by construction
    json notsq = json::parse(R"({
        "kind": "complex",
        "lo": 0,
        "components": [{"generator_degrees": [0]}, {"generator_degrees": [1]},
                       {"generator_degrees": [2]}],
        "differentials": [{"rows": 1, "cols": 1, "entries": [["x"]]},
                          {"rows": 1, "cols": 1, "entries": [["x"]]}]
    })");
    CHECK_THROWS(complex_from_json(ring_xy(), notsq));
}

TEST_CASE("empty complex round trips through the zero complex") {
    auto a = ring_xy();
    json j{{"kind", "complex"},
           {"lo", 0},
           {"components", json::array()},
           {"differentials", json::array()}};
    Complex z = complex_from_json(a, j);
    CHECK(z.empty());
}

TEST_CASE("deformation registry json") {
    auto r = ring_x2();
    json j{{"deformations",
            {{{"ambient_vars", {"x"}},
              {"Q_relations", json::array()},
              {"regular_sequence", {"x^2"}}}}}};
    auto specs = registry_from_json(*r, j);
    REQUIRE(specs.size() == 1);
    CHECK(specs[0].ambient_vars == std::vector<std::string>{"x"});
    CHECK(specs[0].q_relations.empty());
    CHECK(specs[0].regular_sequence == std::vector<Monomial>{mono({2})});
    CHECK(registry_to_json(*r, specs) == j);

    // ambient must actually present r
    json bad{{"deformations",
              {{{"ambient_vars", {"x"}},
                {"Q_relations", json::array()},
                {"regular_sequence", {"x^3"}}}}}};
    CHECK_THROWS(registry_from_json(*r, bad));
}

TEST_CASE("verdict and depth fragments") {
    json fin = verdict_to_json(DimensionVerdict::finite(2, "top level 2"));
    CHECK(fin["kind"] == "finite");
    CHECK(fin["value"] == 2);
    CHECK(fin["display"] == "2");
    CHECK(fin["certified"] == true);
    CHECK(fin["certificate"] == "top level 2");

    json atl = verdict_to_json(DimensionVerdict::at_least(10));
    CHECK(atl["kind"] == "at-least");
    CHECK(atl["display"] == ">= 10");

    json minf = verdict_to_json(DimensionVerdict::minus_infinity());
    CHECK(minf["kind"] == "minus-infinity");
    CHECK(!minf.contains("value"));

    json d = depth_to_json(depth(residue_field(ring_xy()), 10, 20));
    CHECK(d["infinite"] == false);
    CHECK(d["value"] == 0);
    json dz = depth_to_json(depth(Complex::zero_complex(ring_xy()), 10, 20));
    CHECK(dz["infinite"] == true);
    CHECK(dz["display"] == "+inf");
}

TEST_CASE("report fragments re-parse to equal values") {
    auto a = ring_x2();
    GradedModule k = residue_field(a);
    auto r = minimal_free_resolution(k, 6, 20);

    json b = betti_to_json(r);
    json again = json::parse(b.dump());
    CHECK(again == b);
    CHECK(b["minimal"] == true);
    CHECK(b["levels"][0]["total"] == 1);
    CHECK(b["levels"][3]["by_degree"]["3"] == 1);
    CHECK(b["pd"]["kind"] == "at-least");

    json p = poincare_to_json(poincare_series(k, 6, 20));
    CHECK(p["coefficients"] == json({1, 1, 1, 1, 1, 1, 1}));
    CHECK(p["base"] == 0);
    CHECK(json::parse(p.dump()) == p);

    json c = complexity_to_json(complexity_estimate(poincare_series(k, 10, 20)));
    CHECK(c["kind"] == "exact");
    CHECK(c["value"] == 1);
    CHECK(json::parse(c.dump()) == c);

    json h = homology_to_json(homology_dims(Complex::of_module(k), 20));
    CHECK(h["levels"][0]["level"] == 0);
    CHECK(h["levels"][0]["by_degree"]["0"] == 1);
    CHECK(h["window"]["certified"] == true);

    json hc = hierarchy_to_json(hierarchy_check(k, {}, 8, 20, 6));
    CHECK(hc["display"] == "gdim 0 = pci 0 = ci 0 <= pd >= 8");
    CHECK(hc["chain_ok"] == true);
    CHECK(json::parse(hc.dump()) == hc);

    json cb = ci_bound_to_json(ci_dim_upper(k, {}, 8, 20));
    CHECK(cb["dim"]["kind"] == "finite");
    CHECK(cb["dim"]["value"] == 0);
    CHECK(cb["rows"].size() == 2);
    CHECK(json::parse(cb.dump()) == cb);
}

TEST_CASE("table rendering pads columns deterministically") {
    std::string t = render_table({{"n", "total"}, {"0", "1"}, {"10", "2"}});
    CHECK(t == "n   total\n0   1\n10  2\n");
    CHECK(render_table({}) == "");
    // ragged rows keep their own length
    std::string r = render_table({{"a", "bb", "c"}, {"dd"}});
    CHECK(r == "a   bb  c\ndd\n");
}
