#include <catch2/catch_amalgamated.hpp>

#include "gerstkit/poly.hpp"
#include "gerstkit/rng.hpp"

using namespace gerstkit;

namespace {
RingPtr ring2() {
    static RingPtr r = make_ring(2);
    return r;
}
Poly x1() { return Poly::variable(ring2(), 0); }
Poly x2() { return Poly::variable(ring2(), 1); }
Poly konst(int n, int d = 1) { return Poly::constant(ring2(), Rational(n, d)); }
} // namespace

TEST_CASE("rational canonical form", "[poly]") {
    Rational q(2, 4);
    CHECK(to_string(q) == "1/2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rational_from_string("7/21") == Rational(1, 3));
}

TEST_CASE("additive inverse cancels", "[poly]") {
    CHECK((x1() + (-x1())).is_zero());
    CHECK((x1() - x1()).num_terms() == 0);  // canonical form keeps no zeros
}

TEST_CASE("difference of squares", "[poly]") {
    Poly lhs = (x1() + konst(1)) * (x1() - konst(1));
    Poly rhs = x1() * x1() - konst(1);
    CHECK(lhs == rhs);
}

TEST_CASE("rational coefficient cross-multiplication", "[poly]") {
    // (2/3 x2) * (3 x1) = 2 x1 x2, by integer cross-multiplication
    Poly lhs = (x2() * Rational(2, 3)) * (x1() * Rational(3));
    Poly rhs = (x1() * x2()) * Rational(2);
    CHECK(lhs == rhs);
}

TEST_CASE("partial derivatives", "[poly]") {
    Poly p = x1() * x1() * x2();  // x1^2 x2
    CHECK(p.derivative(0) == konst(2) * x1() * x2());
    CHECK(x1().derivative(1).is_zero());
    CHECK_THROWS_AS(p.derivative(5), std::out_of_range);
}

TEST_CASE("Leibniz rule on random products", "[poly]") {
    SplitRng rng(2024);
    for (int k = 0; k < 60; ++k) {
        Poly p = random_poly(ring2(), rng, 3, 3);
        Poly q = random_poly(ring2(), rng, 3, 3);
        for (int v = 0; v < 2; ++v) {
            Poly lhs = (p * q).derivative(v);
            Poly rhs = p * q.derivative(v) + p.derivative(v) * q;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ring axioms on random triples", "[poly]") {
    SplitRng rng(77);
    for (int k = 0; k < 60; ++k) {
        Poly a = random_poly(ring2(), rng, 3, 3);
        Poly b = random_poly(ring2(), rng, 3, 3);
        Poly c = random_poly(ring2(), rng, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("ring mismatch is rejected", "[poly]") {
    RingPtr other = make_ring(3);
    CHECK_THROWS_AS(x1() + Poly::variable(other, 2), RingMismatch);
    CHECK_THROWS_AS(x1() * Poly::variable(other, 0), RingMismatch);
}

TEST_CASE("random_element is deterministic", "[poly]") {
    Poly a = random_element(ring2(), 3, 4, 99);
    Poly b = random_element(ring2(), 3, 4, 99);
    CHECK(a == b);
    CHECK(random_element(ring2(), 3, 4, 100) != a);
}

TEST_CASE("random_element degenerate bounds give a nonzero constant", "[poly]") {
    Poly p = random_element(ring2(), 0, 1, 5);
    CHECK_FALSE(p.is_zero());
    CHECK(p.is_constant());
}

TEST_CASE("random_element respects the degree bound", "[poly]") {
    for (int s = 0; s < 1000; ++s) {
        Poly p = random_element(ring2(), 3, 4, static_cast<std::uint64_t>(s));
        CHECK(p.total_degree() <= 3);
        CHECK(p.num_terms() <= 4);
        CHECK_FALSE(p.is_zero());
    }
}

TEST_CASE("printing", "[poly]") {
    Poly p = konst(2) * x1() * x1() * x2() - konst(1, 3);
    CHECK(p.to_string() == "-1/3 + 2*x1^2*x2");
    CHECK(Poly::zero(ring2()).to_string() == "0");
    CHECK((-x1()).to_string() == "-x1");
}
