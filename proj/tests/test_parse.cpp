#include <catch2/catch_amalgamated.hpp>

#include "gerstkit/parse.hpp"

using namespace gerstkit;

namespace {

PresPtr std2() {
    static PresPtr p = AlgebroidPresentation::standard(2);
    return p;
}

Poly x(int i) { return Poly::variable(std2()->ring(), i); }
Polyvector gen(int i) { return Polyvector::generator(std2(), i); }
Polyvector sc(const Poly& p) { return Polyvector::scalar(std2(), p); }

} // namespace

TEST_CASE("polynomial grammar", "[parse]") {
    CHECK(parse_poly("2*x1^2*x2 - 1/3", std2()) ==
          Poly::constant(std2()->ring(), Rational(2)) * x(0) * x(0) * x(1) -
              Poly::constant(std2()->ring(), Rational(1, 3)));
    CHECK(parse_poly("-x1", std2()) == -x(0));
    CHECK(parse_poly("0", std2()).is_zero());
    CHECK(parse_poly("1/2*x2", std2()) == x(1) * Rational(1, 2));
    CHECK(parse_poly("(x1+1)*(x1-1)", std2()) == x(0) * x(0) - Poly::constant(std2()->ring(), Rational(1)));
}

TEST_CASE("polyvector grammar", "[parse]") {
    CHECK(parse_polyvector("x1*d1/\\d2", std2()) == sc(x(0)) * wedge(gen(0), gen(1)));
    CHECK(parse_polyvector("d2/\\d1", std2()) == -wedge(gen(0), gen(1)));  // normalized
    CHECK(parse_polyvector("e1", std2()) == gen(0));                      // e-alias
    CHECK(parse_polyvector("x1*d1/\\d2 + 2*d1", std2()) ==
          sc(x(0)) * wedge(gen(0), gen(1)) + gen(0).scale(Rational(2)));
}

TEST_CASE("parse errors carry positions", "[parse]") {
    CHECK_THROWS_AS(parse_polyvector("x1 + ", std2()), ParseError);
    CHECK_THROWS_AS(parse_polyvector("d7", std2()), ParseError);   // unknown generator
    CHECK_THROWS_AS(parse_polyvector("2*(x1", std2()), ParseError);
    CHECK_THROWS_AS(parse_polyvector("x1/x2", std2()), ParseError);
    CHECK_THROWS_AS(parse_poly("d1", std2()), std::invalid_argument);  // kind mismatch
}

TEST_CASE("divergence grammar", "[parse]") {
    Divergence d = parse_divergence("c(e1)=x2, c(e2)=0", std2());
    CHECK(d.values[0] == x(1));
    CHECK(d.values[1].is_zero());
    Divergence d2 = parse_divergence("c(d2)=x1*x2", std2());
    CHECK(d2.values[0].is_zero());
    CHECK(d2.values[1] == x(0) * x(1));
}

TEST_CASE("printer then parser is the identity", "[parse]") {
    SplitRng rng(404);
    for (int k = 0; k < 120; ++k) {
        Polyvector v = random_polyvector(std2(), rng, 2, 3, 3) +
                       random_polyvector(std2(), rng, 2, 2, 2);
        Polyvector back = parse_polyvector(v.to_string(), std2());
        CHECK(back == v);
    }
    PresPtr p3 = AlgebroidPresentation::standard(3);
    for (int k = 0; k < 60; ++k) {
        Polyvector v = random_polyvector(p3, rng, 3, 3, 2);
        CHECK(parse_polyvector(v.to_string(), p3) == v);
    }
}

TEST_CASE("parser then printer is the identity up to normalization", "[parse]") {
    // d2/\d1 normalizes to -d1/\d2 and reprints in canonical order
    Polyvector v = parse_polyvector("d2/\\d1", std2());
    CHECK(v.to_string() == "-d1/\\d2");
    CHECK(parse_polyvector(v.to_string(), std2()) == v);
}

TEST_CASE("algebroid JSON loading", "[parse]") {
    nlohmann::json j = nlohmann::json::parse(R"({
        "vars": ["x1", "x2"],
        "gens": ["e1", "e2"],
        "anchor": [["1", "0"], ["0", "1"]],
        "brackets": {"1,2": ["x1", "0"]}
    })");
    PresPtr p = algebroid_from_json(j);
    CHECK(p->num_gens() == 2);
    CHECK(p->ring()->num_vars() == 2);
    TSection br = p->gen_bracket(0, 1);
    CHECK(br.coeffs[0] == Poly::variable(p->ring(), 0));
    CHECK(br.coeffs[1].is_zero());
    // antisymmetry of the stored structure
    TSection rev = p->gen_bracket(1, 0);
    CHECK(rev.coeffs[0] == -Poly::variable(p->ring(), 0));
}

TEST_CASE("standard(n) shorthand", "[parse]") {
    PresPtr p = load_algebroid("standard(3)");
    CHECK(p->num_gens() == 3);
    CHECK(p->is_standard());
    CHECK_THROWS_AS(load_algebroid("standard(0)"), std::invalid_argument);
    CHECK_THROWS_AS(load_algebroid("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("classical form JSON roundtrip", "[parse]") {
    nlohmann::json j;
    j["arity"] = 2;
    j["values"] = {{"1,2", "x1 + x2"}};
    ClassicalForm f = form_from_json(j, std2());
    CHECK(f.eval_gens({0, 1}) == x(0) + x(1));
    CHECK(f.eval_gens({1, 0}) == -(x(0) + x(1)));
    nlohmann::json out = form_to_json(f);
    ClassicalForm back = form_from_json(out, std2());
    CHECK(back.values == f.values);
    // malformed tuples are rejected
    nlohmann::json bad;
    bad["arity"] = 2;
    bad["values"] = {{"2,1", "x1"}};
    CHECK_THROWS_AS(form_from_json(bad, std2()), std::invalid_argument);
}

TEST_CASE("Heisenberg presentation loads and passes the axiom suite", "[parse]") {
    PresPtr p = algebroid_from_json(nlohmann::json::parse(R"({
        "vars": ["x1", "x2"],
        "gens": ["e1", "e2", "e3"],
        "anchor": [["1", "0"], ["0", "1"], ["0", "0"]],
        "brackets": {"1,2": ["0", "0", "1"]}
    })"));
    CHECK(p->num_gens() == 3);
    Report rep = check_algebroid_axioms(p, 40, 12);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
    // the central generator is bracket-generated: [e1, e2] = e3
    Polyvector br = schouten_bracket(Polyvector::generator(p, 0), Polyvector::generator(p, 1));
    CHECK(br == Polyvector::generator(p, 2));
    // and the Gerstenhaber suite holds over it as well
    Report g = check_gerstenhaber(p, 60, 13);
    INFO(g.to_text());
    CHECK(g.all_passed());
}
