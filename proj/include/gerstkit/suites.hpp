#pragma once

// Named verification suites behind `gerstkit verify` and the acceptance
// runner. Every suite derives its randomness from the single config seed
// through labeled splits, so reports replay byte-for-byte.

#include "gerstkit/bv.hpp"
#include "gerstkit/parse.hpp"

#include <chrono>

namespace gerstkit {

struct RunConfig {
    PresPtr pres;
    int trials = 100;
    std::uint64_t seed = 1;
    int grade_bound = 3;
    int degree_bound = 3;
    Convention convention = Convention::BracketSide;
    std::vector<Poly> divergence_values;  // empty means c = 0

    SampleSpec sample(std::string_view label, int enum_cap = 256) const {
        SampleSpec s;
        s.trials = trials;
        s.seed = SplitRng(seed).split(label).next();
        s.grade_bound = grade_bound;
        s.degree_bound = degree_bound;
        s.enum_cap = enum_cap;
        return s;
    }

    Divergence divergence(Convention conv) const {
        Divergence c = zero_divergence(pres, conv);
        if (!divergence_values.empty()) c.values = divergence_values;
        return c;
    }
};

namespace detail {
struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};
} // namespace detail

inline Report suite_algebroid(const RunConfig& cfg) {
    detail::Timer t;
    Report rep = check_algebroid_axioms(cfg.pres, cfg.trials,
                                        SplitRng(cfg.seed).split("algebroid").next());
    rep.seed = cfg.seed;
    rep.elapsed_ms = t.ms();
    return rep;
}

inline Report suite_gerstenhaber(const RunConfig& cfg) {
    detail::Timer t;
    Report rep = check_gerstenhaber(cfg.pres, cfg.trials,
                                    SplitRng(cfg.seed).split("gerstenhaber").next(),
                                    cfg.grade_bound, cfg.degree_bound);
    rep.seed = cfg.seed;
    rep.elapsed_ms = t.ms();
    return rep;
}

// d_H^2, d_CH^2, square commutativity, d_total^2, and the eps cocycle.
inline Report suite_bicomplex_u(const RunConfig& cfg) {
    detail::Timer t;
    Report rep;
    rep.suite = "bicomplex-u";
    rep.seed = cfg.seed;
    const PresPtr& pres = cfg.pres;
    SplitRng root = SplitRng(cfg.seed).split("bicomplex-u");
    SampleSpec spec = cfg.sample("bicomplex-u", 0);
    spec.trials = std::max(8, cfg.trials / 8);

    SplitRng rng = root.split("cochains");
    const int cap = 3;
    for (int i = 0; i <= cap; ++i) {
        for (int j = 0; j <= cap; ++j) {
            BiCochain f = random_bicochain(pres, rng, i, j);
            std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            EqualResult r1 = cochain_is_zero(d_hochschild_u(d_hochschild_u(f)).cochain, spec);
            rep.add("d_H^2 = 0 at " + at, r1.equal, spec.trials, r1.witness);
            EqualResult r2 = cochain_is_zero(d_chevalley_u(d_chevalley_u(f)).cochain, spec);
            rep.add("d_CH^2 = 0 at " + at, r2.equal, spec.trials, r2.witness);
            EqualResult r3 = cochain_equal(d_hochschild_u(d_chevalley_u(f)).cochain,
                                           d_chevalley_u(d_hochschild_u(f)).cochain, spec);
            rep.add("square d_H d_CH = d_CH d_H at " + at, r3.equal, spec.trials, r3.witness);
        }
    }
    {
        SampleSpec espec = cfg.sample("epsilon");
        BiCochain e = canonical_e(pres);
        EqualResult rh = cochain_is_zero(d_hochschild_u(e).cochain, espec);
        rep.add("d_H e = 0", rh.equal, espec.trials, rh.witness);
        EqualResult rc = cochain_is_zero(d_chevalley_u(e).cochain, espec);
        rep.add("d_CH e = 0", rc.equal, espec.trials, rc.witness);
        TotalCochain zero2;
        zero2.n = 2;
        EqualResult rt = total_equal(d_total(canonical_epsilon(pres)), zero2, espec);
        rep.add("d_total(eps) = 0", rt.equal, espec.trials, rt.witness);
    }
    {
        SampleSpec tspec = cfg.sample("dtotal2", 0);
        tspec.trials = std::max(8, cfg.trials / 8);
        SplitRng rng2 = root.split("total");
        TotalCochain tc;
        tc.n = 1;
        tc.components.emplace(std::make_pair(0, 1), random_bicochain(pres, rng2, 0, 1));
        tc.components.emplace(std::make_pair(1, 0), random_bicochain(pres, rng2, 1, 0));
        TotalCochain zero3;
        zero3.n = 3;
        EqualResult r = total_equal(d_total(d_total(tc)), zero3, tspec);
        rep.add("d_total^2 = 0", r.equal, tspec.trials, r.witness);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

inline Report suite_divergence(const RunConfig& cfg) {
    detail::Timer t;
    Divergence c = cfg.divergence(Convention::PaperSec2);  // printed (Div1)
    Report rep = check_divergence(c, cfg.sample("divergence"));
    rep.suite = "div-check";
    rep.seed = cfg.seed;
    rep.elapsed_ms = t.ms();
    return rep;
}

// d_H[ , ] = 0 and its four-term expansion, d_H^2 = 0, and the
// derivation kernel.
inline Report suite_hochschild_g(const RunConfig& cfg) {
    detail::Timer t;
    Report rep;
    rep.suite = "hochschild-g";
    rep.seed = cfg.seed;
    const PresPtr& pres = cfg.pres;
    {
        SampleSpec spec = cfg.sample("lemma35", 128);
        EqualResult r = cochain_is_zero(d_hochschild_g(bracket_cochain(pres)).cochain, spec);
        rep.add("d_H[ , ] = 0", r.equal, spec.trials, r.witness);
    }
    {
        SampleSpec spec = cfg.sample("four-term");
        SplitRng rng = SplitRng(spec.seed);
        bool ok = true;
        std::string w;
        for (int k = 0; k < cfg.trials && ok; ++k) {
            Polyvector x = sample_arg(pres, SlotKind::PolyvectorG, rng, spec, k);
            Polyvector y = sample_arg(pres, SlotKind::PolyvectorG, rng, spec, k + 1);
            Polyvector z = sample_arg(pres, SlotKind::PolyvectorG, rng, spec, k + 2);
            int e = y.grade() & 1;
            Polyvector acc = wedge(x, schouten_bracket(y, z));
            acc -= schouten_bracket(wedge(x, y), z);
            Polyvector u = schouten_bracket(x, wedge(y, z));
            acc += e ? -u : u;
            Polyvector v = wedge(schouten_bracket(x, y), z);
            acc -= e ? -v : v;
            if (!acc.is_zero()) {
                ok = false;
                w = tuple_string({x, y, z});
            }
        }
        rep.add("four-term bracket identity", ok, cfg.trials, w);
    }
    {
        SampleSpec spec = cfg.sample("dh2", 0);
        spec.trials = std::max(8, cfg.trials / 8);
        SplitRng rng = SplitRng(cfg.seed).split("dh2-cochains");
        for (int arity = 1; arity <= 2; ++arity)
            for (int deg = -1; deg <= 1; ++deg) {
                GradedHCochain f = random_hochschild_cochain(pres, rng, arity, deg);
                EqualResult r = cochain_is_zero(d_hochschild_g(d_hochschild_g(f)).cochain, spec);
                rep.add("d_H^2 = 0 (arity " + std::to_string(arity) + ", degree " +
                            std::to_string(deg) + ")",
                        r.equal, spec.trials, r.witness);
            }
    }
    {
        SampleSpec spec = cfg.sample("derivation-kernel");
        SplitRng rng = SplitRng(cfg.seed).split("derivation");
        Polyvector g = random_homogeneous(pres, rng, 1, 2, 2);
        GradedHCochain ad{1, 0,
                          make_cochain(pres, slots(1, SlotKind::PolyvectorG), SlotKind::PolyvectorG,
                                       0,
                                       [g](const std::vector<Polyvector>& a) {
                                           return schouten_bracket(g, a[0]);
                                       },
                                       "ad")};
        bool ker_ad = cochain_is_zero(d_hochschild_g(ad).cochain, spec).equal;
        bool der_ad = is_derivation(ad, spec).equal;
        rep.add("adjoint: derivation iff d_H-closed", ker_ad && der_ad, spec.trials, "");
        GradedHCochain I = identity_cochain(pres);
        bool ker_i = cochain_is_zero(d_hochschild_g(I).cochain, spec).equal;
        bool der_i = is_derivation(I, spec).equal;
        rep.add("identity: not a derivation, not d_H-closed", !ker_i && !der_i, spec.trials, "");
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

inline Report suite_squares(const RunConfig& cfg, int n_max = 3) {
    detail::Timer t;
    SampleSpec spec = cfg.sample("squares", 128);
    Report rep = verify_squares(cfg.pres, std::min(n_max, cfg.pres->num_gens() + 1), spec);
    rep.seed = cfg.seed;
    rep.elapsed_ms = t.ms();
    return rep;
}

inline Report suite_bv(const RunConfig& cfg) {
    detail::Timer t;
    Divergence c = cfg.divergence(cfg.convention);
    Report pre = check_divergence(c, cfg.sample("bv-divergence"));
    Report rep;
    rep.suite = "bv";
    rep.seed = cfg.seed;
    for (const auto& chk : pre.checks)
        rep.checks.push_back(CheckResult{"divergence: " + chk.name, chk.status, chk.trials,
                                         chk.witness});
    DeltaOp delta(c, cfg.convention, cfg.degree_bound, cfg.grade_bound);
    Report qbv = check_quasi_bv(delta, cfg.sample("bv-quasi", 128));
    rep.append(qbv);
    rep.elapsed_ms = t.ms();
    return rep;
}

inline Report suite_canonical(const RunConfig& cfg) {
    detail::Timer t;
    Report rep = canonical_cochains(cfg.pres, cfg.sample("canonical", 128)).report;
    rep.seed = cfg.seed;
    rep.elapsed_ms = t.ms();
    return rep;
}

inline Report run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "algebroid") return suite_algebroid(cfg);
    if (name == "gerstenhaber") return suite_gerstenhaber(cfg);
    if (name == "bicomplex-u") return suite_bicomplex_u(cfg);
    if (name == "div") return suite_divergence(cfg);
    if (name == "hochschild-g") return suite_hochschild_g(cfg);
    if (name == "squares") return suite_squares(cfg);
    if (name == "bv") return suite_bv(cfg);
    if (name == "canonical") return suite_canonical(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<std::string> all_suites() {
    return {"algebroid", "gerstenhaber", "bicomplex-u", "hochschild-g",
            "squares",   "bv",           "canonical"};
}

} // namespace gerstkit
