#pragma once

// The exterior algebra Lambda*_A(T) over an algebroid presentation.
// A Polyvector stores homogeneous pieces as { generator mask -> Poly };
// index tuples are strictly increasing, encoded as bits, so the grade of
// a component is the popcount of its mask. No zero coefficients are kept.

#include "gerstkit/algebroid.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gerstkit {

using GenMask = std::uint64_t;

inline int mask_grade(GenMask m) { return std::popcount(m); }

// Sign merging e_S ^ e_T: (-1)^{#{(i,j) in S x T : i > j}}; zero on overlap.
inline int wedge_sign(GenMask s, GenMask t) {
    if (s & t) return 0;
    int inversions = 0;
    GenMask rest = t;
    while (rest) {
        GenMask low = rest & (~rest + 1);
        int j = std::countr_zero(low);
        inversions += std::popcount(s >> (j + 1));
        rest ^= low;
    }
    return (inversions & 1) ? -1 : 1;
}

inline std::vector<int> mask_indices(GenMask m) {
    std::vector<int> idx;
    while (m) {
        GenMask low = m & (~m + 1);
        idx.push_back(std::countr_zero(low));
        m ^= low;
    }
    return idx;
}

class Polyvector {
public:
    Polyvector() = default;
    explicit Polyvector(PresPtr pres) : pres_(std::move(pres)) {}

    static Polyvector zero(PresPtr pres) { return Polyvector(std::move(pres)); }

    static Polyvector scalar(PresPtr pres, const Poly& a) {
        Polyvector v(std::move(pres));
        v.set_component(0, a);
        return v;
    }

    static Polyvector scalar(PresPtr pres, const Rational& c) {
        return scalar(pres, Poly::constant(pres->ring(), c));
    }

    static Polyvector generator(PresPtr pres, int i) {
        if (i < 0 || i >= pres->num_gens()) throw std::out_of_range("generator index");
        Polyvector v(pres);
        v.set_component(GenMask(1) << i, Poly::constant(pres->ring(), Rational(1)));
        return v;
    }

    static Polyvector basis(PresPtr pres, GenMask mask, const Poly& coeff) {
        Polyvector v(std::move(pres));
        v.set_component(mask, coeff);
        return v;
    }

    static Polyvector from_section(PresPtr pres, const TSection& s) {
        pres->check_section(s);
        Polyvector v(pres);
        for (int i = 0; i < pres->num_gens(); ++i)
            v.set_component(GenMask(1) << i, s.coeffs[static_cast<std::size_t>(i)]);
        return v;
    }

    const PresPtr& presentation() const { return pres_; }
    const std::map<GenMask, Poly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Poly component(GenMask mask) const {
        auto it = comps_.find(mask);
        return it == comps_.end() ? Poly::zero(pres_->ring()) : it->second;
    }

    // Grade-p part.
    Polyvector grade_part(int p) const {
        Polyvector v(pres_);
        for (const auto& [m, c] : comps_)
            if (mask_grade(m) == p) v.comps_[m] = c;
        return v;
    }

    std::vector<int> grades() const {
        std::vector<int> g;
        for (const auto& [m, c] : comps_) {
            int p = mask_grade(m);
            if (g.empty() || g.back() != p) {
                bool seen = false;
                for (int q : g) seen = seen || q == p;
                if (!seen) g.push_back(p);
            }
        }
        return g;
    }

    bool is_homogeneous() const { return grades().size() <= 1; }

    // Grade of a homogeneous value; 0 for the zero polyvector.
    int grade() const {
        auto g = grades();
        if (g.size() > 1) throw std::logic_error("polyvector is not homogeneous");
        return g.empty() ? 0 : g.front();
    }

    int max_grade() const {
        int g = 0;
        for (const auto& [m, c] : comps_) g = std::max(g, mask_grade(m));
        return g;
    }

    std::vector<std::pair<int, Polyvector>> homogeneous_parts() const {
        std::map<int, Polyvector> by_grade;
        for (const auto& [m, c] : comps_) {
            auto it = by_grade.find(mask_grade(m));
            if (it == by_grade.end()) {
                Polyvector v(pres_);
                v.comps_[m] = c;
                by_grade.emplace(mask_grade(m), std::move(v));
            } else {
                it->second.comps_[m] = c;
            }
        }
        std::vector<std::pair<int, Polyvector>> out;
        for (auto& [g, v] : by_grade) out.emplace_back(g, std::move(v));
        return out;
    }

    Poly scalar_part() const { return component(0); }

    TSection section_part() const {
        TSection s = pres_->zero_section();
        for (int i = 0; i < pres_->num_gens(); ++i)
            s.coeffs[static_cast<std::size_t>(i)] = component(GenMask(1) << i);
        return s;
    }

    Polyvector operator-() const {
        Polyvector v(pres_);
        for (const auto& [m, c] : comps_) v.comps_[m] = -c;
        return v;
    }

    Polyvector operator+(const Polyvector& o) const {
        check_pres(o);
        Polyvector v(pres_ ? pres_ : o.pres_);
        v.comps_ = comps_;
        for (const auto& [m, c] : o.comps_) v.add_component(m, c);
        return v;
    }

    Polyvector operator-(const Polyvector& o) const { return *this + (-o); }

    Polyvector& operator+=(const Polyvector& o) { *this = *this + o; return *this; }
    Polyvector& operator-=(const Polyvector& o) { *this = *this - o; return *this; }

    Polyvector scale(const Rational& c) const {
        Polyvector v(pres_);
        if (c.is_zero()) return v;
        for (const auto& [m, a] : comps_) v.comps_[m] = a * c;
        return v;
    }

    Polyvector scale(const Poly& p) const {
        Polyvector v(pres_);
        for (const auto& [m, a] : comps_) v.add_component(m, a * p);
        return v;
    }

    bool operator==(const Polyvector& o) const { return comps_ == o.comps_; }
    bool operator!=(const Polyvector& o) const { return !(*this == o); }
    bool operator<(const Polyvector& o) const { return comps_ < o.comps_; }

    std::string to_string() const {
        if (comps_.empty()) return "0";
        // order parts by (grade, mask) for a canonical rendering
        std::map<std::pair<int, GenMask>, const Poly*> ordered;
        for (const auto& [m, c] : comps_) ordered[{mask_grade(m), m}] = &c;
        std::string out;
        for (const auto& [key, cp] : ordered) {
            std::string part = part_string(key.second, *cp);
            if (out.empty()) {
                out = part;
            } else if (!part.empty() && part[0] == '-') {
                out += " - " + part.substr(1);
            } else {
                out += " + " + part;
            }
        }
        return out;
    }

    void add_component(GenMask m, const Poly& c) {
        if (c.is_zero()) return;
        auto it = comps_.find(m);
        if (it == comps_.end()) {
            comps_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

private:
    void set_component(GenMask m, const Poly& c) {
        if (!c.is_zero()) comps_[m] = c;
    }

    void check_pres(const Polyvector& o) const {
        if (!pres_ || !o.pres_) return;
        if (pres_ != o.pres_)
            throw RingMismatch("polyvectors over different presentations");
    }

    std::string part_string(GenMask m, const Poly& c) const {
        std::string gens;
        for (int i : mask_indices(m)) {
            if (!gens.empty()) gens += "/\\";
            gens += pres_->gen_name(i);
        }
        if (gens.empty()) return c.to_string();
        if (c.num_terms() == 1) {
            if (c == Poly::constant(pres_->ring(), Rational(1))) return gens;
            if (c == Poly::constant(pres_->ring(), Rational(-1))) return "-" + gens;
            return c.to_string() + "*" + gens;
        }
        return "(" + c.to_string() + ")*" + gens;
    }

    PresPtr pres_;
    std::map<GenMask, Poly> comps_;
};

// Graded-commutative product.
inline Polyvector wedge(const Polyvector& a, const Polyvector& b) {
    if (a.presentation() && b.presentation() && a.presentation() != b.presentation())
        throw RingMismatch("wedge of polyvectors over different presentations");
    Polyvector out(a.presentation() ? a.presentation() : b.presentation());
    for (const auto& [ma, ca] : a.components()) {
        for (const auto& [mb, cb] : b.components()) {
            int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            Poly c = ca * cb;
            if (s < 0) c = -c;
            out.add_component(ma | mb, c);
        }
    }
    return out;
}

inline Polyvector operator*(const Polyvector& a, const Polyvector& b) { return wedge(a, b); }

inline Polyvector random_homogeneous(const PresPtr& pres, SplitRng& rng, int grade,
                                     int max_degree, int max_terms) {
    Polyvector v(pres);
    if (grade > pres->num_gens()) return v;
    if (grade == 0) return Polyvector::scalar(pres, random_poly(pres->ring(), rng, max_degree, max_terms));
    // one or two basis masks with random coefficients
    int parts = rng.range(1, 2);
    for (int k = 0; k < parts; ++k) {
        GenMask m = 0;
        while (mask_grade(m) < grade)
            m |= GenMask(1) << rng.range(0, pres->num_gens() - 1);
        v.add_component(m, random_poly(pres->ring(), rng, max_degree, max_terms));
    }
    if (v.is_zero())
        v.add_component((GenMask(1) << grade) - 1, random_poly(pres->ring(), rng, max_degree, max_terms));
    return v;
}

inline Polyvector random_polyvector(const PresPtr& pres, SplitRng& rng, int grade_bound,
                                    int max_degree, int max_terms) {
    int g = rng.range(0, std::min(grade_bound, pres->num_gens()));
    return random_homogeneous(pres, rng, g, max_degree, max_terms);
}

} // namespace gerstkit
