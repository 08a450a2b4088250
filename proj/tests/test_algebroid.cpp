#include <catch2/catch_amalgamated.hpp>

#include "gerstkit/algebroid.hpp"

using namespace gerstkit;

namespace {

PresPtr std2() {
    static PresPtr p = AlgebroidPresentation::standard(2);
    return p;
}

TSection section(const PresPtr& p, std::initializer_list<Poly> cs) {
    TSection s;
    s.coeffs = cs;
    (void)p;
    return s;
}

// Independent oracle: a section acts as the first-order operator
// sum_i tau_i rho_ij d/dx_j; compose two of them and subtract.
Poly commutator_of_derivations(const PresPtr& p, const TSection& t, const TSection& n,
                               const Poly& a) {
    return p->anchor_apply(t, p->anchor_apply(n, a)) - p->anchor_apply(n, p->anchor_apply(t, a));
}

} // namespace

TEST_CASE("anchor on the standard algebroid", "[algebroid]") {
    const PresPtr p = std2();
    Poly x1 = Poly::variable(p->ring(), 0);
    Poly x2 = Poly::variable(p->ring(), 1);
    CHECK(p->anchor_apply(p->gen_section(0), x1) == Poly::constant(p->ring(), Rational(1)));
    // x1 d2 applied to x2^2 -> 2 x1 x2, by direct partial-derivative expansion
    TSection t = section(p, {Poly::zero(p->ring()), x1});
    CHECK(p->anchor_apply(t, x2 * x2) == Poly::constant(p->ring(), Rational(2)) * x1 * x2);
}

TEST_CASE("derivations kill constants", "[algebroid]") {
    const PresPtr p = std2();
    SplitRng rng(11);
    for (int k = 0; k < 30; ++k) {
        TSection t = random_section(p, rng, 3, 2);
        CHECK(p->anchor_apply(t, Poly::constant(p->ring(), Rational(7))).is_zero());
    }
}

TEST_CASE("bracket on the standard algebroid matches the derivation commutator", "[algebroid]") {
    const PresPtr p = std2();
    Poly x1 = Poly::variable(p->ring(), 0);
    Poly x2 = Poly::variable(p->ring(), 1);
    Poly zero = Poly::zero(p->ring());

    // [x1 d2, x2 d1] = x1 d1 - x2 d2, frozen from the commutator applied to
    // x1 and x2 by hand
    TSection a = section(p, {zero, x1});
    TSection b = section(p, {x2, zero});
    TSection br = p->t_bracket(a, b);
    CHECK(br.coeffs[0] == x1);
    CHECK(br.coeffs[1] == -x2);

    // cross-check against the commutator oracle on monomials of degree <= 3
    SplitRng rng(5);
    for (int k = 0; k < 40; ++k) {
        Poly f = random_poly(p->ring(), rng, 3, 2);
        CHECK(p->anchor_apply(br, f) == commutator_of_derivations(p, a, b, f));
    }

    // [d1, x1 d1] = d1
    TSection c = p->gen_section(0);
    TSection d = section(p, {x1, zero});
    TSection br2 = p->t_bracket(c, d);
    CHECK(br2.coeffs[0] == Poly::constant(p->ring(), Rational(1)));
    CHECK(br2.coeffs[1].is_zero());
    for (int k = 0; k < 40; ++k) {
        Poly f = random_poly(p->ring(), rng, 3, 2);
        CHECK(p->anchor_apply(br2, f) == commutator_of_derivations(p, c, d, f));
    }
}

TEST_CASE("bracket antisymmetry on random sections", "[algebroid]") {
    const PresPtr p = std2();
    SplitRng rng(21);
    for (int k = 0; k < 30; ++k) {
        TSection t = random_section(p, rng, 3, 2);
        CHECK(p->t_bracket(t, t).is_zero());
    }
}

TEST_CASE("standard algebroid passes the axiom suite", "[algebroid]") {
    Report rep = check_algebroid_axioms(std2(), 50, 31337);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
}

TEST_CASE("rank-one algebroid passes", "[algebroid]") {
    RingPtr ring = make_ring(1);
    std::vector<std::vector<Poly>> anchor{{Poly::constant(ring, Rational(1))}};
    PresPtr p = std::make_shared<const AlgebroidPresentation>(
        ring, std::vector<std::string>{"e1"}, anchor,
        std::map<std::pair<int, int>, std::vector<Poly>>{});
    Report rep = check_algebroid_axioms(p, 50, 7);
    INFO(rep.to_text());
    CHECK(rep.all_passed());
}

TEST_CASE("perturbed structure function breaks the axioms with a witness", "[algebroid]") {
    // standard(2) with [e1,e2] := x1 e1
    RingPtr ring = make_ring(2);
    Poly one = Poly::constant(ring, Rational(1));
    Poly zero = Poly::zero(ring);
    Poly x1 = Poly::variable(ring, 0);
    std::vector<std::vector<Poly>> anchor{{one, zero}, {zero, one}};
    std::map<std::pair<int, int>, std::vector<Poly>> structure;
    structure[{0, 1}] = {x1, zero};
    PresPtr p = std::make_shared<const AlgebroidPresentation>(
        ring, std::vector<std::string>{"e1", "e2"}, anchor, structure);

    // Oracle: direct evaluation of the failing Jacobi instance
    // (e1, e2, x1 e2): lhs = 0, rhs = x1 e2.
    TSection t = p->gen_section(0);
    TSection n = p->gen_section(1);
    TSection u = section(p, {zero, x1});
    TSection lhs = p->t_bracket(t, p->t_bracket(n, u));
    TSection rhs = p->t_bracket(p->t_bracket(t, n), u) + p->t_bracket(n, p->t_bracket(t, u));
    CHECK(lhs.is_zero());
    CHECK(rhs.coeffs[1] == x1);
    CHECK_FALSE((lhs - rhs).is_zero());

    Report rep = check_algebroid_axioms(p, 60, 42);
    CHECK_FALSE(rep.all_passed());
    bool jacobi_or_hom_failed = false;
    std::string witness;
    for (const auto& c : rep.checks)
        if ((c.name == "jacobi" || c.name == "anchor-is-homomorphism") &&
            c.status == CheckStatus::Fail) {
            jacobi_or_hom_failed = true;
            witness = c.witness;
        }
    CHECK(jacobi_or_hom_failed);
    CHECK_FALSE(witness.empty());
}

TEST_CASE("dimension mismatch is rejected", "[algebroid]") {
    const PresPtr p = std2();
    TSection bad;
    bad.coeffs = {Poly::zero(p->ring())};
    CHECK_THROWS_AS(p->anchor_apply(bad, Poly::variable(p->ring(), 0)), RingMismatch);
    CHECK_THROWS_AS(p->t_bracket(bad, bad), RingMismatch);
}

TEST_CASE("axiom report is deterministic for a fixed seed", "[algebroid]") {
    Report a = check_algebroid_axioms(std2(), 25, 99);
    Report b = check_algebroid_axioms(std2(), 25, 99);
    CHECK(a.to_json().dump() == b.to_json().dump());
}
