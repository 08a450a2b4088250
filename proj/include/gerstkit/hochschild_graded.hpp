#pragma once

// Hochschild complex of the graded algebra G = Lambda*T with the weight
// convention |f| = f~ + n; the differential is the graded bar formula
// with its three sign groups. Also the bracket 2-cochain (deg -1,
// |.| = 1), the derivation kernel of d^1_H, and the projection pi onto
// the ungraded complex of the algebroid.

#include "gerstkit/hcc_ungraded.hpp"

namespace gerstkit {

struct GradedHCochain {
    int n = 1;       // arity
    int degree = 0;  // internal degree f~
    Cochain cochain; // n PolyvectorG slots, PolyvectorG codomain

    int weight() const { return degree + n; }  // |f|
};

inline GradedHCochain make_graded_cochain(PresPtr pres, int n, int degree, Evaluator fn,
                                          std::string label) {
    return GradedHCochain{n, degree,
                          make_cochain(std::move(pres), slots(n, SlotKind::PolyvectorG),
                                       SlotKind::PolyvectorG, degree, std::move(fn),
                                       std::move(label))};
}

inline GradedHCochain identity_cochain(const PresPtr& pres) {
    return make_graded_cochain(pres, 1, 0,
                               [](const std::vector<Polyvector>& args) { return args[0]; }, "I");
}

inline GradedHCochain bracket_cochain(const PresPtr& pres) {
    return make_graded_cochain(
        pres, 2, -1,
        [](const std::vector<Polyvector>& args) { return schouten_bracket(args[0], args[1]); },
        "bracket");
}

// Graded bar differential: arity n+1, same internal degree, weight |f| + 1.
inline GradedHCochain d_hochschild_g(const GradedHCochain& f) {
    const PresPtr pres = f.cochain.pres;
    const Cochain inner = f.cochain;
    const int n = f.n;
    const int W = f.weight();
    Evaluator fn = [pres, inner, n, W](const std::vector<Polyvector>& args) {
        return multilinear_expand(
            pres, args, [&](const std::vector<Polyvector>& x, const std::vector<int>& g) {
                Polyvector acc(pres);
                {
                    std::vector<Polyvector> sub(x.begin() + 1, x.end());
                    int e = g[0] * W + W + 1;
                    Polyvector v = wedge(x[0], evaluate(inner, sub));
                    acc += (e & 1) ? -v : v;
                }
                for (int i = 1; i <= n; ++i) {
                    int e = W + 1;
                    for (int p = 1; p <= i; ++p) e += g[static_cast<std::size_t>(p - 1)] + 1;
                    std::vector<Polyvector> sub;
                    for (int k = 0; k < static_cast<int>(x.size()); ++k) {
                        if (k == i - 1) {
                            sub.push_back(wedge(x[static_cast<std::size_t>(k)],
                                                x[static_cast<std::size_t>(k + 1)]));
                            continue;
                        }
                        if (k == i) continue;
                        sub.push_back(x[static_cast<std::size_t>(k)]);
                    }
                    Polyvector v = evaluate(inner, sub);
                    acc += (e & 1) ? -v : v;
                }
                {
                    int e = W;
                    for (int p = 1; p <= n; ++p) e += g[static_cast<std::size_t>(p - 1)] + 1;
                    std::vector<Polyvector> sub(x.begin(), x.end() - 1);
                    Polyvector v = wedge(evaluate(inner, sub), x.back());
                    acc += (e & 1) ? -v : v;
                }
                return acc;
            });
    };
    return make_graded_cochain(pres, n + 1, f.degree, std::move(fn), "d_H(" + inner.label + ")");
}

// Kernel condition of d^1_H: f(xy) = (-1)^{f~ x~} x f(y) + f(x) y.
inline EqualResult is_derivation(const GradedHCochain& f, const SampleSpec& spec) {
    if (f.n != 1) throw std::invalid_argument("is_derivation wants a 1-cochain");
    const PresPtr pres = f.cochain.pres;
    const Cochain inner = f.cochain;
    const int fdeg = f.degree;
    Cochain lhs = make_cochain(
        pres, slots(2, SlotKind::PolyvectorG), SlotKind::PolyvectorG, fdeg,
        [inner](const std::vector<Polyvector>& args) {
            return evaluate(inner, {wedge(args[0], args[1])});
        },
        "f(xy)");
    Cochain rhs = make_cochain(
        pres, slots(2, SlotKind::PolyvectorG), SlotKind::PolyvectorG, fdeg,
        [pres, inner, fdeg](const std::vector<Polyvector>& args) {
            return multilinear_expand(
                pres, args, [&](const std::vector<Polyvector>& x, const std::vector<int>& g) {
                    int e = fdeg * g[0];
                    Polyvector t1 = wedge(x[0], evaluate(inner, {x[1]}));
                    Polyvector t2 = wedge(evaluate(inner, {x[0]}), x[1]);
                    return ((e & 1) ? -t1 : t1) + t2;
                });
        },
        "leibniz");
    return cochain_equal(lhs, rhs, spec);
}

// Restriction to (a_1,...,a_{n-1}, tau) with the codomain projected to A:
// a bicochain at bidegree (0, n-1). The last bar-differential term dies here.
inline BiCochain project_pi(const GradedHCochain& f) {
    if (f.n < 1) throw std::invalid_argument("project_pi wants arity >= 1");
    const PresPtr pres = f.cochain.pres;
    const Cochain inner = f.cochain;
    Evaluator fn = [pres, inner](const std::vector<Polyvector>& args) {
        Polyvector v = evaluate(inner, args);
        return Polyvector::scalar(pres, v.scalar_part());
    };
    return make_bicochain(pres, 0, f.n - 1, std::move(fn), "pi(" + inner.label + ")");
}

// d_H(Delta) = [ , ] as a route equality, together with the unfolded
// (BV1) identity; the two are the same equation in different clothes.
inline Report check_bv1_cochain(const GradedHCochain& delta, const SampleSpec& spec) {
    if (delta.n != 1 || delta.degree != -1)
        throw std::invalid_argument("check_bv1 wants a degree -1 operator");
    const PresPtr pres = delta.cochain.pres;
    Report rep;
    rep.suite = "bv1";
    rep.seed = spec.seed;
    {
        EqualResult r =
            cochain_equal(d_hochschild_g(delta).cochain, bracket_cochain(pres).cochain, spec);
        rep.add("d_H(Delta) = bracket", r.equal, spec.trials, r.witness);
    }
    {
        const Cochain inner = delta.cochain;
        Cochain lhs = make_cochain(
            pres, slots(2, SlotKind::PolyvectorG), SlotKind::PolyvectorG, -1,
            [pres, inner](const std::vector<Polyvector>& args) {
                return multilinear_expand(
                    pres, args, [&](const std::vector<Polyvector>& x, const std::vector<int>& g) {
                        Polyvector v = evaluate(inner, {wedge(x[0], x[1])});
                        v -= wedge(evaluate(inner, {x[0]}), x[1]);
                        Polyvector t = wedge(x[0], evaluate(inner, {x[1]}));
                        return v - ((g[0] & 1) ? -t : t);
                    });
            },
            "BV1-lhs");
        Cochain rhs = make_cochain(
            pres, slots(2, SlotKind::PolyvectorG), SlotKind::PolyvectorG, -1,
            [pres](const std::vector<Polyvector>& args) {
                return multilinear_expand(
                    pres, args, [&](const std::vector<Polyvector>& x, const std::vector<int>& g) {
                        Polyvector t = schouten_bracket(x[0], x[1]);
                        return (g[0] & 1) ? -t : t;
                    });
            },
            "BV1-rhs");
        EqualResult r = cochain_equal(lhs, rhs, spec);
        rep.add("(BV1)", r.equal, spec.trials, r.witness);
    }
    return rep;
}

// Random graded Hochschild cochain of the given arity and internal degree.
inline GradedHCochain random_hochschild_cochain(const PresPtr& pres, SplitRng& rng, int arity,
                                                int degree) {
    Cochain c = random_graded_cochain(pres, rng, arity, degree);
    return GradedHCochain{arity, degree, std::move(c)};
}

} // namespace gerstkit
