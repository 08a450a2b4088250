#pragma once

// Generic multilinear cochains: an arity signature over {ScalarA, SectionT,
// PolyvectorG}, an internal graded degree, and a pure evaluator. The spaces
// Hom(A^j (x) T (x) Lambda^i T, A) are infinite-dimensional over k, so
// cochains are evaluators rather than coefficient tables and equality is
// sampling-based. A deterministic monomial enumeration (variables and
// generators to total degree <= 2) is always included in equality checks so
// the core identities are not left to chance.

#include "gerstkit/schouten.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gerstkit {

constexpr int kNoGroup = -1;

enum class SlotKind { ScalarA, SectionT, PolyvectorG };

struct AritySlot {
    SlotKind kind = SlotKind::PolyvectorG;
    int group = kNoGroup;  // slots sharing a group are mutually alternating
};

inline std::vector<AritySlot> slots(int n, SlotKind kind, int group = kNoGroup) {
    return std::vector<AritySlot>(static_cast<std::size_t>(n), AritySlot{kind, group});
}

using Evaluator = std::function<Polyvector(const std::vector<Polyvector>&)>;

struct Cochain {
    PresPtr pres;
    std::vector<AritySlot> signature;
    SlotKind codomain = SlotKind::PolyvectorG;
    int degree = 0;  // internal degree f~; meaningful for graded codomains
    Evaluator eval_fn;
    std::string label;

    int arity() const { return static_cast<int>(signature.size()); }
};

inline Cochain make_cochain(PresPtr pres, std::vector<AritySlot> signature, SlotKind codomain,
                            int degree, Evaluator eval_fn, std::string label) {
    if (!eval_fn) throw std::invalid_argument("cochain needs an evaluator");
    for (std::size_t a = 0; a < signature.size(); ++a)
        for (std::size_t b = a + 1; b < signature.size(); ++b)
            if (signature[a].group != kNoGroup && signature[a].group == signature[b].group &&
                signature[a].kind != signature[b].kind)
                throw std::invalid_argument("slots in one symmetry group must share a kind");
    return Cochain{std::move(pres), std::move(signature), codomain, degree, std::move(eval_fn),
                   std::move(label)};
}

inline bool arg_matches(SlotKind kind, const Polyvector& v) {
    switch (kind) {
        case SlotKind::ScalarA:
            for (const auto& [m, c] : v.components())
                if (m != 0) return false;
            return true;
        case SlotKind::SectionT:
            for (const auto& [m, c] : v.components())
                if (mask_grade(m) != 1) return false;
            return true;
        default:
            return true;
    }
}

inline Polyvector evaluate(const Cochain& c, const std::vector<Polyvector>& args) {
    if (static_cast<int>(args.size()) != c.arity())
        throw std::invalid_argument("arity mismatch evaluating cochain " + c.label);
    for (std::size_t i = 0; i < args.size(); ++i)
        if (!arg_matches(c.signature[i].kind, args[i]))
            throw std::invalid_argument("argument kind mismatch at slot " + std::to_string(i) +
                                        " of cochain " + c.label);
    Polyvector out = c.eval_fn(args);
    if (c.codomain == SlotKind::ScalarA && !arg_matches(SlotKind::ScalarA, out))
        throw std::logic_error("cochain " + c.label + " left its scalar codomain");
    return out;
}

// Expands every argument into homogeneous parts and sums fn over the
// product. Every graded formula below is multilinear, so this is how
// mixed-grade inputs are processed.
inline Polyvector multilinear_expand(
    const PresPtr& pres, const std::vector<Polyvector>& args,
    const std::function<Polyvector(const std::vector<Polyvector>&, const std::vector<int>&)>& fn) {
    std::vector<std::vector<std::pair<int, Polyvector>>> parts;
    parts.reserve(args.size());
    for (const auto& a : args) {
        auto p = a.homogeneous_parts();
        if (p.empty()) return Polyvector::zero(pres);
        parts.push_back(std::move(p));
    }
    Polyvector out(pres);
    std::vector<std::size_t> idx(args.size(), 0);
    for (;;) {
        std::vector<Polyvector> h;
        std::vector<int> grades;
        h.reserve(args.size());
        grades.reserve(args.size());
        for (std::size_t i = 0; i < args.size(); ++i) {
            h.push_back(parts[i][idx[i]].second);
            grades.push_back(parts[i][idx[i]].first);
        }
        out += fn(h, grades);
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < parts[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return out;
}

inline Cochain zero_cochain(PresPtr pres, std::vector<AritySlot> signature, SlotKind codomain,
                            int degree = 0) {
    PresPtr p = pres;
    return make_cochain(std::move(pres), std::move(signature), codomain, degree,
                        [p](const std::vector<Polyvector>&) { return Polyvector::zero(p); },
                        "0");
}

inline Cochain add_cochains(const Cochain& a, const Cochain& b) {
    if (a.arity() != b.arity() || a.codomain != b.codomain)
        throw std::invalid_argument("cochain sum: signature mismatch");
    Cochain out = a;
    out.label = "(" + a.label + " + " + b.label + ")";
    Evaluator fa = a.eval_fn, fb = b.eval_fn;
    out.eval_fn = [fa, fb](const std::vector<Polyvector>& args) { return fa(args) + fb(args); };
    return out;
}

inline Cochain scale_cochain(const Cochain& a, const Rational& c) {
    Cochain out = a;
    Evaluator f = a.eval_fn;
    Rational k = c;
    out.eval_fn = [f, k](const std::vector<Polyvector>& args) { return f(args).scale(k); };
    return out;
}

inline Cochain sub_cochains(const Cochain& a, const Cochain& b) {
    return add_cochains(a, scale_cochain(b, Rational(-1)));
}

// ---------------------------------------------------------------------------
// Sampling

struct SampleSpec {
    int trials = 50;
    std::uint64_t seed = 1;
    int grade_bound = 3;
    int degree_bound = 3;
    int max_terms = 2;
    int enum_cap = 4096;  // deterministic-enumeration budget per equality check
};

inline Polyvector sample_arg(const PresPtr& pres, SlotKind kind, SplitRng& rng,
                             const SampleSpec& spec, int grade_hint) {
    switch (kind) {
        case SlotKind::ScalarA:
            return Polyvector::scalar(pres,
                                      random_poly(pres->ring(), rng, spec.degree_bound, spec.max_terms));
        case SlotKind::SectionT:
            return Polyvector::from_section(
                pres, random_section(pres, rng, spec.degree_bound, spec.max_terms));
        default: {
            int g = grade_hint % (std::min(spec.grade_bound, pres->num_gens()) + 1);
            return random_homogeneous(pres, rng, g, spec.degree_bound, spec.max_terms);
        }
    }
}

inline std::vector<Polyvector> sample_args(const Cochain& c, SplitRng& rng, const SampleSpec& spec,
                                           int round) {
    std::vector<Polyvector> args;
    args.reserve(c.signature.size());
    for (std::size_t i = 0; i < c.signature.size(); ++i)
        args.push_back(sample_arg(c.pres, c.signature[i].kind, rng, spec,
                                  round + static_cast<int>(i)));
    return args;
}

// All variables and generators to total degree <= 2, per slot kind.
inline std::vector<Polyvector> enumeration_elements(const PresPtr& pres, SlotKind kind) {
    const RingPtr& ring = pres->ring();
    std::vector<Polyvector> out;
    const int n = ring->num_vars();
    const int m = pres->num_gens();
    auto one = Poly::constant(ring, Rational(1));
    if (kind == SlotKind::ScalarA || kind == SlotKind::PolyvectorG) {
        out.push_back(Polyvector::scalar(pres, one));
        for (int i = 0; i < n; ++i)
            out.push_back(Polyvector::scalar(pres, Poly::variable(ring, i)));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                out.push_back(Polyvector::scalar(
                    pres, Poly::variable(ring, i) * Poly::variable(ring, j)));
    }
    if (kind == SlotKind::SectionT || kind == SlotKind::PolyvectorG) {
        for (int k = 0; k < m; ++k) out.push_back(Polyvector::generator(pres, k));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k)
                out.push_back(
                    Polyvector::basis(pres, GenMask(1) << k, Poly::variable(ring, i)));
    }
    if (kind == SlotKind::PolyvectorG) {
        for (int k = 0; k < m; ++k)
            for (int l = k + 1; l < m; ++l)
                out.push_back(Polyvector::basis(pres, (GenMask(1) << k) | (GenMask(1) << l),
                                                Poly::constant(ring, Rational(1))));
    }
    return out;
}

struct EqualResult {
    bool equal = true;
    std::string witness;
};

inline std::string tuple_string(const std::vector<Polyvector>& args) {
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ", ";
        s += args[i].to_string();
    }
    return s + ")";
}

// Exact equality on the deterministic enumeration plus random homogeneous
// samples within the spec bounds. Returns the first disagreeing tuple.
inline EqualResult cochain_equal(const Cochain& a, const Cochain& b, const SampleSpec& spec) {
    if (a.arity() != b.arity() || a.codomain != b.codomain)
        throw std::invalid_argument("cochain_equal: signature mismatch");
    for (int i = 0; i < a.arity(); ++i)
        if (a.signature[static_cast<std::size_t>(i)].kind !=
            b.signature[static_cast<std::size_t>(i)].kind)
            throw std::invalid_argument("cochain_equal: signature mismatch");

    auto disagree = [&](const std::vector<Polyvector>& args) -> std::optional<std::string> {
        Polyvector va = evaluate(a, args);
        Polyvector vb = evaluate(b, args);
        if (va != vb)
            return tuple_string(args) + ": lhs=" + va.to_string() + ", rhs=" + vb.to_string();
        return std::nullopt;
    };

    const int n = a.arity();
    if (n == 0) {
        if (auto w = disagree({})) return {false, *w};
        return {true, ""};
    }

    if (spec.enum_cap > 0) {  // enum_cap 0 turns the enumeration off
        std::vector<std::vector<Polyvector>> pools;
        pools.reserve(static_cast<std::size_t>(n));
        std::size_t total = 1;
        for (int i = 0; i < n; ++i) {
            pools.push_back(
                enumeration_elements(a.pres, a.signature[static_cast<std::size_t>(i)].kind));
            total *= pools.back().size();
        }
        std::size_t cap = static_cast<std::size_t>(spec.enum_cap);
        std::size_t stride = total <= cap ? 1 : (total + cap - 1) / cap;
        for (std::size_t t = 0; t < total; t += stride) {
            std::vector<Polyvector> args;
            std::size_t rem = t;
            for (int i = 0; i < n; ++i) {
                args.push_back(pools[static_cast<std::size_t>(i)]
                                    [rem % pools[static_cast<std::size_t>(i)].size()]);
                rem /= pools[static_cast<std::size_t>(i)].size();
            }
            if (auto w = disagree(args)) return {false, *w};
        }
    }

    SplitRng rng = SplitRng(spec.seed).split("cochain-equal");
    for (int k = 0; k < spec.trials; ++k) {
        std::vector<Polyvector> args = sample_args(a, rng, spec, k);
        if (auto w = disagree(args)) return {false, *w};
    }
    return {true, ""};
}

inline EqualResult cochain_is_zero(const Cochain& a, const SampleSpec& spec) {
    return cochain_equal(a, zero_cochain(a.pres, a.signature, a.codomain, a.degree), spec);
}

// ---------------------------------------------------------------------------
// Alternation

// Shifted sign for transposing adjacent graded arguments, in the shifted sense:
// PolyvectorG slots use degrees grade-1, SectionT slots plain antisymmetry.
inline int transposition_sign(SlotKind kind, int grade_a, int grade_b) {
    int d = (kind == SlotKind::PolyvectorG) ? (grade_a - 1) * (grade_b - 1) : 0;
    return (d & 1) ? 1 : -1;  // -(-1)^d
}

inline Report check_alternating(const Cochain& c, int group, const SampleSpec& spec) {
    Report rep;
    rep.suite = "alternating:" + c.label;
    rep.seed = spec.seed;
    std::vector<int> positions;
    for (int i = 0; i < c.arity(); ++i)
        if (c.signature[static_cast<std::size_t>(i)].group == group) positions.push_back(i);
    if (positions.empty())
        throw std::invalid_argument("symmetry group not present in signature");
    if (positions.size() == 1) {
        rep.add("alternating(vacuous)", true, 0);
        return rep;
    }
    SplitRng rng = SplitRng(spec.seed).split("alternating");
    for (std::size_t p = 0; p + 1 < positions.size(); ++p) {
        int i = positions[p], j = positions[p + 1];
        bool ok = true;
        std::string w;
        SlotKind kind = c.signature[static_cast<std::size_t>(i)].kind;
        for (int k = 0; k < spec.trials && ok; ++k) {
            std::vector<Polyvector> args = sample_args(c, rng, spec, k);
            std::vector<Polyvector> swapped = args;
            std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
            int s = transposition_sign(kind, args[static_cast<std::size_t>(i)].grade(),
                                       args[static_cast<std::size_t>(j)].grade());
            Polyvector lhs = evaluate(c, args);
            Polyvector rhs = evaluate(c, swapped).scale(Rational(s));
            if (lhs != rhs) {
                ok = false;
                w = tuple_string(args);
            }
        }
        rep.add("transpose(" + std::to_string(i) + "," + std::to_string(j) + ")", ok, spec.trials, w);
    }
    return rep;
}

namespace detail {

// Sign relating f(x_1..x_k) and f(x_{perm_0}, x_{perm_1}, ...) for an
// alternating f: bubble perm to identity, each adjacent swap of elements
// with shifted degrees du, dv contributing -(-1)^{du dv}.
inline int permutation_alternating_sign(std::vector<int> perm, const std::vector<int>& shifted_deg) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        for (std::size_t j = 0; j + 1 < perm.size() - i; ++j) {
            if (perm[j] > perm[j + 1]) {
                int du = shifted_deg[static_cast<std::size_t>(perm[j])];
                int dv = shifted_deg[static_cast<std::size_t>(perm[j + 1])];
                sign *= ((du * dv) & 1) ? 1 : -1;
                std::swap(perm[j], perm[j + 1]);
            }
        }
    }
    return sign;
}

inline void permutations(int k, std::vector<std::vector<int>>& out) {
    std::vector<int> p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

} // namespace detail

// Antisymmetrizes the evaluator over each declared group: shifted signs
// shifted signs for PolyvectorG slots, plain signs for SectionT slots. Fixes
// evaluators that are already alternating.
inline Cochain antisymmetrize(const Cochain& raw) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < raw.arity(); ++i) {
        int g = raw.signature[static_cast<std::size_t>(i)].group;
        if (g != kNoGroup) groups[g].push_back(i);
    }
    bool trivial = true;
    for (const auto& [g, pos] : groups)
        if (pos.size() > 1) trivial = false;
    if (trivial) return raw;

    Cochain out = raw;
    Evaluator f = raw.eval_fn;
    PresPtr pres = raw.pres;
    auto signature = raw.signature;
    auto group_map = groups;
    out.eval_fn = [f, pres, signature, group_map](const std::vector<Polyvector>& args) {
        return multilinear_expand(
            pres, args,
            [&](const std::vector<Polyvector>& h, const std::vector<int>& grades) {
                Polyvector acc(pres);
                Rational weight(1);
                // iterate permutation choices group by group
                std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> work;
                for (const auto& [g, pos] : group_map) {
                    std::vector<std::vector<int>> perms;
                    detail::permutations(static_cast<int>(pos.size()), perms);
                    weight /= Rational(static_cast<int>(perms.size()));
                    work.emplace_back(pos, std::move(perms));
                }
                std::vector<std::size_t> idx(work.size(), 0);
                for (;;) {
                    std::vector<Polyvector> permuted = h;
                    int sign = 1;
                    for (std::size_t w = 0; w < work.size(); ++w) {
                        const auto& pos = work[w].first;
                        const auto& perm = work[w].second[idx[w]];
                        std::vector<int> sdeg;
                        for (int p : pos)
                            sdeg.push_back(signature[static_cast<std::size_t>(p)].kind ==
                                                   SlotKind::PolyvectorG
                                               ? grades[static_cast<std::size_t>(p)] - 1
                                               : 0);
                        sign *= detail::permutation_alternating_sign(perm, sdeg);
                        for (std::size_t k = 0; k < pos.size(); ++k)
                            permuted[static_cast<std::size_t>(pos[k])] =
                                h[static_cast<std::size_t>(pos[static_cast<std::size_t>(
                                    perm[k])])];
                    }
                    acc += f(permuted).scale(Rational(sign));
                    std::size_t i = 0;
                    while (i < idx.size()) {
                        if (++idx[i] < work[i].second.size()) break;
                        idx[i] = 0;
                        ++i;
                    }
                    if (i == idx.size()) break;
                }
                return acc.scale(weight);
            });
    };
    out.label = "alt(" + raw.label + ")";
    return out;
}

// ---------------------------------------------------------------------------
// Random multilinear cochains (test-library material)

namespace detail {

struct LinearAtom {
    int degree = 0;
    std::function<Polyvector(const Polyvector&)> fn;
};

// k-linear grade-homogeneous endomorphisms of Lambda*T: wedges, coefficient
// derivatives, grade filters, and bracket adjoints. Not A-linear in general,
// which is what makes the sampled cochains generic.
inline LinearAtom random_linear_atom(const PresPtr& pres, SplitRng& rng, int target_degree) {
    const RingPtr& ring = pres->ring();
    auto deriv = [pres, ring](int v) {
        return [pres, ring, v](const Polyvector& x) {
            Polyvector out(pres);
            for (const auto& [m, c] : x.components()) out.add_component(m, c.derivative(v));
            return out;
        };
    };
    LinearAtom atom;
    atom.degree = target_degree;
    switch (target_degree) {
        case -1: {
            Poly a = random_poly(ring, rng, 2, 2);
            Polyvector v = Polyvector::scalar(pres, a);
            atom.fn = [v](const Polyvector& x) { return schouten_bracket(v, x); };
            break;
        }
        case 1: {
            Polyvector w = random_homogeneous(pres, rng, 1, 2, 2);
            atom.fn = [w](const Polyvector& x) { return wedge(w, x); };
            break;
        }
        default: {
            int pick = rng.range(0, 2);
            if (pick == 0) {
                Poly p = random_poly(ring, rng, 2, 2);
                atom.fn = [p](const Polyvector& x) { return x.scale(p); };
            } else if (pick == 1) {
                atom.fn = deriv(rng.range(0, ring->num_vars() - 1));
            } else {
                Polyvector v = random_homogeneous(pres, rng, 1, 2, 1);
                atom.fn = [v](const Polyvector& x) { return schouten_bracket(v, x); };
            }
            break;
        }
    }
    // optionally post-compose a degree-0 twist
    if (rng.flip()) {
        auto base = atom.fn;
        if (rng.flip()) {
            auto d = deriv(rng.range(0, ring->num_vars() - 1));
            atom.fn = [base, d](const Polyvector& x) { return d(base(x)); };
        } else {
            Poly p = random_poly(ring, rng, 1, 1);
            atom.fn = [base, p](const Polyvector& x) { return base(x).scale(p); };
        }
    }
    return atom;
}

} // namespace detail

// Random multilinear graded cochain with PolyvectorG slots; the declared
// degree is exact by construction. Used by the d^2 = 0 and square suites.
inline Cochain random_graded_cochain(const PresPtr& pres, SplitRng& rng, int arity,
                                     int want_degree, int alternating_group = kNoGroup) {
    if (want_degree < -arity || want_degree > arity)
        throw std::invalid_argument("random_graded_cochain: degree unreachable at this arity");
    int num_terms = rng.range(1, 2);
    std::vector<std::vector<detail::LinearAtom>> terms;
    for (int t = 0; t < num_terms; ++t) {
        std::vector<detail::LinearAtom> per_slot;
        int remaining = want_degree;
        // per-slot atom degrees lie in {-1, 0, 1}; the bounds keep the
        // running remainder reachable, so the last slot lands exactly
        for (int s = 0; s < arity; ++s) {
            int slots_left = arity - s - 1;
            int lo = std::max(-1, remaining - slots_left);
            int hi = std::min(1, remaining + slots_left);
            int d = (s + 1 == arity) ? remaining : rng.range(lo, hi);
            per_slot.push_back(detail::random_linear_atom(pres, rng, d));
            remaining -= d;
        }
        terms.push_back(std::move(per_slot));
    }
    PresPtr p = pres;
    Evaluator fn = [p, terms](const std::vector<Polyvector>& args) {
        Polyvector out(p);
        for (const auto& per_slot : terms) {
            Polyvector prod = Polyvector::scalar(p, Rational(1));
            for (std::size_t s = 0; s < per_slot.size(); ++s)
                prod = wedge(prod, per_slot[s].fn(args[s]));
            out += prod;
        }
        return out;
    };
    Cochain c = make_cochain(pres, slots(arity, SlotKind::PolyvectorG, alternating_group),
                             SlotKind::PolyvectorG, want_degree, std::move(fn), "random");
    return alternating_group == kNoGroup ? c : antisymmetrize(c);
}

} // namespace gerstkit
