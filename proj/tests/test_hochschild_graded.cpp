#include <catch2/catch_amalgamated.hpp>

#include "gerstkit/bv.hpp"
#include "gerstkit/hochschild_graded.hpp"

using namespace gerstkit;

namespace {

PresPtr std2() {
    static PresPtr p = AlgebroidPresentation::standard(2);
    return p;
}

Poly x(int i) { return Poly::variable(std2()->ring(), i); }
Polyvector sc(const Poly& p) { return Polyvector::scalar(std2(), p); }
Polyvector gen(int i) { return Polyvector::generator(std2(), i); }

SampleSpec quick(int trials = 25, std::uint64_t seed = 3) {
    SampleSpec s;
    s.trials = trials;
    s.seed = seed;
    s.enum_cap = 256;
    return s;
}

} // namespace

TEST_CASE("d_H I is m(x,y) = (-1)^{x~} xy", "[hochschild]") {
    GradedHCochain dI = d_hochschild_g(identity_cochain(std2()));
    CHECK(dI.n == 2);
    CHECK(dI.weight() == 2);
    // frozen values
    CHECK(evaluate(dI.cochain, {sc(x(0)), gen(0)}) == sc(x(0)) * gen(0));
    CHECK(evaluate(dI.cochain, {gen(0), gen(1)}) == -wedge(gen(0), gen(1)));
    CHECK(evaluate(dI.cochain, {gen(0), sc(x(1))}) == -(sc(x(1)) * gen(0)));
    // route equality against the closed form
    Cochain m = make_cochain(std2(), slots(2, SlotKind::PolyvectorG), SlotKind::PolyvectorG, 0,
                             [](const std::vector<Polyvector>& a) {
                                 PresPtr p = a[0].presentation();
                                 return multilinear_expand(
                                     p, a,
                                     [&](const std::vector<Polyvector>& v,
                                         const std::vector<int>& g) {
                                         Polyvector w = wedge(v[0], v[1]);
                                         return (g[0] & 1) ? -w : w;
                                     });
                             },
                             "m");
    EqualResult r = cochain_equal(dI.cochain, m, quick(40));
    INFO(r.witness);
    CHECK(r.equal);
}

TEST_CASE("the bracket cochain is a Hochschild cocycle", "[hochschild]") {
    GradedHCochain br = bracket_cochain(std2());
    CHECK(br.weight() == 1);
    SampleSpec spec = quick(60);
    spec.enum_cap = 128;
    EqualResult r = cochain_is_zero(d_hochschild_g(br).cochain, spec);
    INFO(r.witness);
    CHECK(r.equal);
}

TEST_CASE("four-term bracket identity on random triples", "[hochschild]") {
    // x[y,z] - [xy,z] + (-1)^{y~}[x,yz] - (-1)^{y~}[x,y]z = 0
    const PresPtr p = std2();
    SplitRng rng(101);
    SampleSpec spec = quick();
    for (int k = 0; k < 80; ++k) {
        Polyvector xx = sample_arg(p, SlotKind::PolyvectorG, rng, spec, k);
        Polyvector yy = sample_arg(p, SlotKind::PolyvectorG, rng, spec, k + 1);
        Polyvector zz = sample_arg(p, SlotKind::PolyvectorG, rng, spec, k + 2);
        int e = yy.grade() & 1;
        Polyvector acc = wedge(xx, schouten_bracket(yy, zz));
        acc -= schouten_bracket(wedge(xx, yy), zz);
        Polyvector t = schouten_bracket(xx, wedge(yy, zz));
        acc += e ? -t : t;
        Polyvector u = wedge(schouten_bracket(xx, yy), zz);
        acc -= e ? -u : u;
        INFO("x=" << xx.to_string() << " y=" << yy.to_string() << " z=" << zz.to_string());
        CHECK(acc.is_zero());
    }
}

TEST_CASE("bracket cochain evaluates the Schouten bracket", "[hochschild]") {
    GradedHCochain br = bracket_cochain(std2());
    // [d1, x1 d1] = d1 (commutator-of-derivations oracle, frozen)
    CHECK(evaluate(br.cochain, {gen(0), sc(x(0)) * gen(0)}) == gen(0));
}

TEST_CASE("d_H Delta agrees with the bracket at (x1, d1)", "[hochschild]") {
    // Delta of degree -1 built from the zero divergence, bracket-side
    DeltaOp delta = delta_from_divergence(zero_divergence(std2()), Convention::BracketSide);
    GradedHCochain dc = d_hochschild_g(delta.as_hochschild());
    // d_H Delta(x,y) = -x Delta(y) + (-1)^{x~} Delta(xy) + (-1)^{x~+1} Delta(x) y;
    // at (x1, d1): Delta(d1) = 0 and Delta(x1 d1) = -1, so the value is
    // -1 = [x1, d1]. Frozen by hand.
    Polyvector v = evaluate(dc.cochain, {sc(x(0)), gen(0)});
    CHECK(v == -sc(Poly::constant(std2()->ring(), Rational(1))));
    CHECK(schouten_bracket(sc(x(0)), gen(0)) == v);
}

TEST_CASE("d_H^2 = 0 on random graded cochains", "[hochschild]") {
    const PresPtr p = std2();
    SplitRng rng(7);
    SampleSpec spec = quick(10);
    spec.enum_cap = 0;
    for (int arity = 1; arity <= 2; ++arity) {
        for (int deg = -1; deg <= 1; ++deg) {
            GradedHCochain f = random_hochschild_cochain(p, rng, arity, deg);
            EqualResult r = cochain_is_zero(d_hochschild_g(d_hochschild_g(f)).cochain, spec);
            INFO("arity " << arity << " degree " << deg << ": " << r.witness);
            CHECK(r.equal);
        }
    }
}

TEST_CASE("weight bookkeeping of the differential", "[hochschild]") {
    SplitRng rng(15);
    GradedHCochain f = random_hochschild_cochain(std2(), rng, 1, 0);
    GradedHCochain df = d_hochschild_g(f);
    CHECK(df.n == f.n + 1);
    CHECK(df.degree == f.degree);
    CHECK(df.weight() == f.weight() + 1);
    // degree consistency of the output on homogeneous samples
    SampleSpec spec = quick();
    for (int k = 0; k < 25; ++k) {
        auto args = sample_args(df.cochain, rng, spec, k);
        Polyvector out = evaluate(df.cochain, args);
        if (out.is_zero()) continue;
        CHECK(out.grade() == args[0].grade() + args[1].grade() + df.degree);
    }
}

TEST_CASE("derivations are the kernel of d^1_H", "[hochschild]") {
    const PresPtr p = std2();
    SampleSpec spec = quick(30);

    // adjoint cochains d_CH g = [g, .] are derivations
    SplitRng rng(9);
    Polyvector g = random_homogeneous(p, rng, 1, 2, 2);
    GradedHCochain ad{1, 0, make_cochain(p, slots(1, SlotKind::PolyvectorG),
                                         SlotKind::PolyvectorG, 0,
                                         [g](const std::vector<Polyvector>& a) {
                                             return schouten_bracket(g, a[0]);
                                         },
                                         "ad")};
    CHECK(is_derivation(ad, spec).equal);
    CHECK(cochain_is_zero(d_hochschild_g(ad).cochain, spec).equal);

    // I is not a derivation; witness (x1, x1): I(x1^2) = x1^2 vs 2 x1^2
    GradedHCochain I = identity_cochain(p);
    EqualResult r = is_derivation(I, spec);
    CHECK_FALSE(r.equal);
    CHECK_FALSE(cochain_is_zero(d_hochschild_g(I).cochain, spec).equal);
    Polyvector x1v = sc(x(0));
    Polyvector lhs = wedge(x1v, x1v);
    Polyvector rhs = lhs + lhs;
    CHECK(lhs != rhs);

    // the zero map is a derivation (e.g. Delta^2 for a valid divergence)
    DeltaOp delta = delta_from_divergence(zero_divergence(p), Convention::BracketSide);
    GradedHCochain d2{1, -2, make_cochain(p, slots(1, SlotKind::PolyvectorG),
                                          SlotKind::PolyvectorG, -2,
                                          [delta](const std::vector<Polyvector>& a) {
                                              return delta.apply(delta.apply(a[0]));
                                          },
                                          "Delta^2")};
    CHECK(is_derivation(d2, spec).equal);
    CHECK(cochain_is_zero(d2.cochain, spec).equal);
}

TEST_CASE("pi projects the bracket onto -e", "[hochschild]") {
    const PresPtr p = std2();
    BiCochain pib = project_pi(bracket_cochain(p));
    CHECK(pib.i == 0);
    CHECK(pib.j == 1);
    // pi([ , ])(x1; d1) = [x1, d1] = -1 = -e(x1, d1)
    Polyvector v = evaluate(pib.cochain, {sc(x(0)), gen(0)});
    CHECK(v.scalar_part() == -Poly::constant(p->ring(), Rational(1)));
    BiCochain e = canonical_e(p);
    EqualResult r = cochain_equal(pib.cochain, scale_cochain(e.cochain, Rational(-1)), quick(30));
    INFO(r.witness);
    CHECK(r.equal);
}

TEST_CASE("pi kills the product cochain's graded part", "[hochschild]") {
    const PresPtr p = std2();
    GradedHCochain dI = d_hochschild_g(identity_cochain(p));
    BiCochain m = project_pi(dI);
    // m(a, tau) = a tau has no A-component, so pi(m) = 0
    EqualResult r = cochain_is_zero(m.cochain, quick(25));
    INFO(r.witness);
    CHECK(r.equal);
}

TEST_CASE("pi intertwines the differentials up to the weight sign", "[hochschild]") {
    // pi(d_H^graded f) = (-1)^{|f|+1} d_H^ungraded(pi f) on (a_1,...,a_n, tau)
    // tuples; for |f| odd the sign is +1, which is why pi sends the bracket
    // (|[,]| = 1) to a cochain commuting with the bar differential on the nose.
    const PresPtr p = std2();
    SampleSpec spec = quick(25);
    SplitRng rng(33);
    for (int deg = -1; deg <= 0; ++deg) {
        GradedHCochain f = random_hochschild_cochain(p, rng, 1, deg);
        BiCochain route_a = project_pi(d_hochschild_g(f));
        BiCochain route_b = d_hochschild_u(project_pi(f));
        int sign = ((f.weight() + 1) & 1) ? -1 : 1;
        EqualResult r =
            cochain_equal(route_a.cochain, scale_cochain(route_b.cochain, Rational(sign)), spec);
        INFO("degree " << deg << ": " << r.witness);
        CHECK(r.equal);
    }
}

TEST_CASE("derivation kernel iff on a random cochain library", "[hochschild]") {
    // is_derivation(f) agrees with d_H f sampling to zero across a small
    // library of 1-cochains of mixed internal degree
    const PresPtr p = std2();
    SampleSpec spec = quick(20, 77);
    SplitRng rng(770);
    int derivations = 0, non_derivations = 0;
    for (int k = 0; k < 8; ++k) {
        GradedHCochain f = random_hochschild_cochain(p, rng, 1, (k % 3) - 1);
        bool der = is_derivation(f, spec).equal;
        bool ker = cochain_is_zero(d_hochschild_g(f).cochain, spec).equal;
        CHECK(der == ker);
        (der ? derivations : non_derivations) += 1;
    }
    CHECK(non_derivations > 0);  // the library is not vacuous
}
