#pragma once

// Finite presentations of Lie algebroids (A, T): a free A-module T on
// generators e1..em, an anchor into derivations of A, and a bracket given
// by structure functions [e_i, e_j] = sum_k c^k_ij e_k for i < j.
//
// A presentation is not validated on construction; check_algebroid_axioms
// is the gatekeeper, so tests can build deliberately broken presentations.

#include "gerstkit/poly.hpp"
#include "gerstkit/report.hpp"
#include "gerstkit/rng.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gerstkit {

class AlgebroidPresentation;
using PresPtr = std::shared_ptr<const AlgebroidPresentation>;

// Element sum_i coeffs[i] * e_i of T.
struct TSection {
    std::vector<Poly> coeffs;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const TSection& o) const { return coeffs == o.coeffs; }
};

class AlgebroidPresentation : public std::enable_shared_from_this<AlgebroidPresentation> {
public:
    AlgebroidPresentation(RingPtr ring, std::vector<std::string> gen_names,
                          std::vector<std::vector<Poly>> anchor,
                          std::map<std::pair<int, int>, std::vector<Poly>> structure,
                          bool standard = false)
        : ring_(std::move(ring)), gen_names_(std::move(gen_names)),
          anchor_(std::move(anchor)), structure_(std::move(structure)), standard_(standard) {
        const int m = num_gens();
        const int n = ring_->num_vars();
        if (m < 1) throw std::invalid_argument("presentation needs at least one generator");
        if (static_cast<int>(anchor_.size()) != m)
            throw std::invalid_argument("anchor must have one row per generator");
        for (const auto& row : anchor_)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("anchor row length must equal the variable count");
        for (const auto& [ij, c] : structure_) {
            if (!(0 <= ij.first && ij.first < ij.second && ij.second < m))
                throw std::invalid_argument("structure functions must be keyed by pairs i < j");
            if (static_cast<int>(c.size()) != m)
                throw std::invalid_argument("structure vector length must equal the generator count");
        }
    }

    static PresPtr standard(int n) {
        RingPtr ring = make_ring(n);
        std::vector<std::string> names;
        std::vector<std::vector<Poly>> anchor;
        for (int i = 0; i < n; ++i) {
            names.push_back("d" + std::to_string(i + 1));
            std::vector<Poly> row;
            for (int j = 0; j < n; ++j)
                row.push_back(Poly::constant(ring, Rational(i == j ? 1 : 0)));
            anchor.push_back(std::move(row));
        }
        return std::make_shared<const AlgebroidPresentation>(
            std::move(ring), std::move(names), std::move(anchor),
            std::map<std::pair<int, int>, std::vector<Poly>>{}, true);
    }

    const RingPtr& ring() const { return ring_; }
    int num_gens() const { return static_cast<int>(gen_names_.size()); }
    const std::string& gen_name(int i) const { return gen_names_.at(static_cast<std::size_t>(i)); }
    bool is_standard() const { return standard_; }
    const std::vector<std::vector<Poly>>& anchor_matrix() const { return anchor_; }
    const std::map<std::pair<int, int>, std::vector<Poly>>& structure() const { return structure_; }

    int gen_index(const std::string& name) const {
        for (int i = 0; i < num_gens(); ++i)
            if (gen_names_[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    }

    TSection zero_section() const {
        TSection s;
        s.coeffs.assign(static_cast<std::size_t>(num_gens()), Poly::zero(ring_));
        return s;
    }

    TSection gen_section(int i) const {
        TSection s = zero_section();
        s.coeffs[static_cast<std::size_t>(i)] = Poly::constant(ring_, Rational(1));
        return s;
    }

    // e_i(a) = sum_j rho_ij * da/dx_j
    Poly gen_anchor(int i, const Poly& a) const {
        Poly r = Poly::zero(ring_);
        const auto& row = anchor_.at(static_cast<std::size_t>(i));
        for (int j = 0; j < ring_->num_vars(); ++j)
            r += row[static_cast<std::size_t>(j)] * a.derivative(j);
        return r;
    }

    // tau(a) = [tau, a]
    Poly anchor_apply(const TSection& tau, const Poly& a) const {
        check_section(tau);
        Poly r = Poly::zero(ring_);
        for (int i = 0; i < num_gens(); ++i) {
            const Poly& ti = tau.coeffs[static_cast<std::size_t>(i)];
            if (ti.is_zero()) continue;
            r += ti * gen_anchor(i, a);
        }
        return r;
    }

    // [e_i, e_j]; antisymmetry is definitional, only i < j is stored.
    TSection gen_bracket(int i, int j) const {
        TSection s = zero_section();
        if (i == j) return s;
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = structure_.find({i, j});
        if (it != structure_.end()) {
            for (int k = 0; k < num_gens(); ++k)
                s.coeffs[static_cast<std::size_t>(k)] =
                    flip ? -it->second[static_cast<std::size_t>(k)]
                         : it->second[static_cast<std::size_t>(k)];
        }
        return s;
    }

    // [a_i e_i, b_j e_j] = a_i b_j [e_i,e_j] + a_i e_i(b_j) e_j - b_j e_j(a_i) e_i,
    // summed over i, j. This bilinear extension is the library's definition
    // of the bracket; (LA2) then holds by construction.
    TSection t_bracket(const TSection& tau, const TSection& nu) const {
        check_section(tau);
        check_section(nu);
        TSection out = zero_section();
        for (int i = 0; i < num_gens(); ++i) {
            const Poly& a = tau.coeffs[static_cast<std::size_t>(i)];
            for (int j = 0; j < num_gens(); ++j) {
                const Poly& b = nu.coeffs[static_cast<std::size_t>(j)];
                if (!a.is_zero() && !b.is_zero()) {
                    TSection br = gen_bracket(i, j);
                    Poly ab = a * b;
                    for (int k = 0; k < num_gens(); ++k)
                        out.coeffs[static_cast<std::size_t>(k)] +=
                            ab * br.coeffs[static_cast<std::size_t>(k)];
                }
                if (!a.is_zero() && !b.is_zero())
                    out.coeffs[static_cast<std::size_t>(j)] += a * gen_anchor(i, b);
            }
        }
        for (int j = 0; j < num_gens(); ++j) {
            const Poly& b = nu.coeffs[static_cast<std::size_t>(j)];
            if (b.is_zero()) continue;
            for (int i = 0; i < num_gens(); ++i) {
                const Poly& a = tau.coeffs[static_cast<std::size_t>(i)];
                if (a.is_zero()) continue;
                out.coeffs[static_cast<std::size_t>(i)] -= b * gen_anchor(j, a);
            }
        }
        return out;
    }

    void check_section(const TSection& s) const {
        if (static_cast<int>(s.coeffs.size()) != num_gens())
            throw RingMismatch("section length does not match the generator count");
    }

    std::string section_string(const TSection& s) const {
        std::string out;
        for (int i = 0; i < num_gens(); ++i) {
            const Poly& c = s.coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (c.num_terms() == 1)
                out += (c == Poly::constant(ring_, Rational(1)))
                           ? gen_name(i)
                           : c.to_string() + "*" + gen_name(i);
            else
                out += "(" + c.to_string() + ")*" + gen_name(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    RingPtr ring_;
    std::vector<std::string> gen_names_;
    std::vector<std::vector<Poly>> anchor_;                      // m x n
    std::map<std::pair<int, int>, std::vector<Poly>> structure_; // i < j
    bool standard_;
};

inline TSection operator+(const TSection& a, const TSection& b) {
    TSection r = a;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    return r;
}

inline TSection operator-(const TSection& a, const TSection& b) {
    TSection r = a;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
    return r;
}

inline TSection operator*(const Poly& a, const TSection& s) {
    TSection r = s;
    for (auto& c : r.coeffs) c = a * c;
    return r;
}

inline TSection random_section(const PresPtr& pres, SplitRng& rng, int max_degree, int max_terms) {
    TSection s = pres->zero_section();
    // keep a couple of slots nonzero so sections are generic but small
    int nz = rng.range(1, pres->num_gens());
    for (int k = 0; k < nz; ++k) {
        int i = rng.range(0, pres->num_gens() - 1);
        s.coeffs[static_cast<std::size_t>(i)] = random_poly(pres->ring(), rng, max_degree, max_terms);
    }
    return s;
}

// Axiom suite on random sections: antisymmetry, Jacobi, LA1, LA2, and
// anchor([t,n]) = [anchor(t), anchor(n)] as operators, all exact.
inline Report check_algebroid_axioms(const PresPtr& pres, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    Report rep;
    rep.suite = "algebroid-axioms";
    rep.seed = seed;
    SplitRng root(seed);

    const int deg = 2, terms = 2;
    auto witness3 = [&](const TSection& t, const TSection& n, const TSection& u) {
        return "tau=" + pres->section_string(t) + "; nu=" + pres->section_string(n) +
               "; mu=" + pres->section_string(u);
    };

    {
        SplitRng rng = root.split("antisym");
        bool ok = true;
        std::string w;
        for (int k = 0; k < trials && ok; ++k) {
            TSection t = random_section(pres, rng, deg, terms);
            if (!pres->t_bracket(t, t).is_zero()) {
                ok = false;
                w = "tau=" + pres->section_string(t);
            }
            TSection n = random_section(pres, rng, deg, terms);
            if (ok && !(pres->t_bracket(t, n) + pres->t_bracket(n, t)).is_zero()) {
                ok = false;
                w = "tau=" + pres->section_string(t) + "; nu=" + pres->section_string(n);
            }
        }
        rep.add("antisymmetry", ok, trials, w);
    }
    {
        SplitRng rng = root.split("jacobi");
        bool ok = true;
        std::string w;
        for (int k = 0; k < trials && ok; ++k) {
            TSection t = random_section(pres, rng, deg, terms);
            TSection n = random_section(pres, rng, deg, terms);
            TSection u = random_section(pres, rng, deg, terms);
            TSection lhs = pres->t_bracket(t, pres->t_bracket(n, u));
            TSection rhs = pres->t_bracket(pres->t_bracket(t, n), u) +
                           pres->t_bracket(n, pres->t_bracket(t, u));
            if (!(lhs - rhs).is_zero()) {
                ok = false;
                w = witness3(t, n, u);
            }
        }
        // also probe generator pairs against low-degree sections, where
        // non-constant structure functions bite first
        for (int i = 0; i < pres->num_gens() && ok; ++i)
            for (int j = 0; j < pres->num_gens() && ok; ++j)
                for (int g = 0; g < pres->num_gens() && ok; ++g)
                    for (int v = 0; v < pres->ring()->num_vars() && ok; ++v) {
                        TSection t = pres->gen_section(i);
                        TSection n = pres->gen_section(j);
                        TSection u = Poly::variable(pres->ring(), v) * pres->gen_section(g);
                        TSection lhs = pres->t_bracket(t, pres->t_bracket(n, u));
                        TSection rhs = pres->t_bracket(pres->t_bracket(t, n), u) +
                                       pres->t_bracket(n, pres->t_bracket(t, u));
                        if (!(lhs - rhs).is_zero()) {
                            ok = false;
                            w = witness3(t, n, u);
                        }
                    }
        rep.add("jacobi", ok, trials, w);
    }
    {
        SplitRng rng = root.split("la1");
        bool ok = true;
        std::string w;
        for (int k = 0; k < trials && ok; ++k) {
            TSection t = random_section(pres, rng, deg, terms);
            Poly a = random_poly(pres->ring(), rng, deg, terms);
            Poly b = random_poly(pres->ring(), rng, deg, terms);
            Poly lhs = pres->anchor_apply(a * t, b);
            Poly rhs = a * pres->anchor_apply(t, b);
            if (!(lhs - rhs).is_zero()) {
                ok = false;
                w = "a=" + a.to_string() + "; tau=" + pres->section_string(t) +
                    "; b=" + b.to_string();
            }
        }
        rep.add("LA1", ok, trials, w);
    }
    {
        SplitRng rng = root.split("la2");
        bool ok = true;
        std::string w;
        for (int k = 0; k < trials && ok; ++k) {
            TSection t = random_section(pres, rng, deg, terms);
            TSection n = random_section(pres, rng, deg, terms);
            Poly a = random_poly(pres->ring(), rng, deg, terms);
            TSection lhs = pres->t_bracket(t, a * n);
            TSection rhs = a * pres->t_bracket(t, n) + pres->anchor_apply(t, a) * n;
            if (!(lhs - rhs).is_zero()) {
                ok = false;
                w = "tau=" + pres->section_string(t) + "; a=" + a.to_string() +
                    "; nu=" + pres->section_string(n);
            }
        }
        rep.add("LA2", ok, trials, w);
    }
    {
        SplitRng rng = root.split("anchor-hom");
        bool ok = true;
        std::string w;
        for (int k = 0; k < trials && ok; ++k) {
            TSection t = random_section(pres, rng, deg, terms);
            TSection n = random_section(pres, rng, deg, terms);
            Poly a = random_poly(pres->ring(), rng, deg, terms);
            Poly lhs = pres->anchor_apply(pres->t_bracket(t, n), a);
            Poly rhs = pres->anchor_apply(t, pres->anchor_apply(n, a)) -
                       pres->anchor_apply(n, pres->anchor_apply(t, a));
            if (!(lhs - rhs).is_zero()) {
                ok = false;
                w = "tau=" + pres->section_string(t) + "; nu=" + pres->section_string(n) +
                    "; a=" + a.to_string();
            }
        }
        rep.add("anchor-is-homomorphism", ok, trials, w);
    }
    return rep;
}

} // namespace gerstkit
