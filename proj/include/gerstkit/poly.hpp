#pragma once

// Sparse multivariate polynomials over Q: the ground ring A = k[x1..xn].
// Values are immutable after construction and safe to share across threads.

#include "gerstkit/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gerstkit {

struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }

    int num_vars() const { return static_cast<int>(names_.size()); }
    const std::string& var_name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& var_names() const { return names_; }

    // Index of a named variable, -1 if absent.
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const PolyRing& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Ring with variables x1..xn.
inline RingPtr make_ring(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const PolyRing>(std::move(names));
}

// Exponent vector; length always equals the ring's variable count.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, const Rational& c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_[Monomial(static_cast<std::size_t>(p.ring_->num_vars()), 0)] = c;
        return p;
    }

    static Poly variable(RingPtr ring, int i) {
        if (i < 0 || i >= ring->num_vars()) throw std::out_of_range("variable index out of range");
        Poly p(std::move(ring));
        Monomial m(static_cast<std::size_t>(p.ring_->num_vars()), 0);
        m[static_cast<std::size_t>(i)] = 1;
        p.terms_[m] = Rational(1);
        return p;
    }

    static Poly monomial(RingPtr ring, Monomial m, const Rational& c) {
        if (static_cast<int>(m.size()) != ring->num_vars())
            throw std::invalid_argument("exponent vector length mismatch");
        for (int e : m)
            if (e < 0) throw std::invalid_argument("negative exponent");
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_[std::move(m)] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("poly is not constant");
        return terms_.begin()->second;
    }

    int total_degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }

    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly operator+(const Poly& other) const {
        check_same_ring(other);
        Poly r(ring_ ? ring_ : other.ring_);
        r.terms_ = terms_;
        for (const auto& [m, c] : other.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    Poly operator-(const Poly& other) const { return *this + (-other); }

    Poly operator*(const Poly& other) const {
        check_same_ring(other);
        Poly r(ring_ ? ring_ : other.ring_);
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : other.terms_) {
                Monomial m(m1.size());
                for (std::size_t k = 0; k < m.size(); ++k) m[k] = m1[k] + m2[k];
                Rational c = c1 * c2;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    if (!c.is_zero()) r.terms_[std::move(m)] = c;
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    Poly operator*(const Rational& c) const {
        Poly r(ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, a] : terms_) r.terms_[m] = a * c;
        return r;
    }

    Poly& operator+=(const Poly& other) { *this = *this + other; return *this; }
    Poly& operator-=(const Poly& other) { *this = *this - other; return *this; }
    Poly& operator*=(const Poly& other) { *this = *this * other; return *this; }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        Poly r = constant(ring_, Rational(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Formal partial derivative with respect to variable i (0-based).
    Poly derivative(int i) const {
        if (!ring_ || i < 0 || i >= ring_->num_vars())
            throw std::out_of_range("derivative: variable index out of range");
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            int e = m[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Monomial d = m;
            d[static_cast<std::size_t>(i)] = e - 1;
            Rational nc = c * e;
            auto it = r.terms_.find(d);
            if (it == r.terms_.end()) r.terms_[std::move(d)] = nc;
            else it->second += nc;
        }
        return r;
    }

    bool operator==(const Poly& other) const {
        if (ring_ && other.ring_ && !(*ring_ == *other.ring_)) return false;
        return terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Total order used for canonical printing and witness determinism.
    bool operator<(const Poly& other) const { return terms_ < other.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            out += term_string(m, a);
            first = false;
        }
        return out;
    }

private:
    void check_same_ring(const Poly& other) const {
        if (!ring_ || !other.ring_) return;  // zero polys with no ring attach anywhere
        if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
            throw RingMismatch("polynomials over different rings");
    }

    std::string term_string(const Monomial& m, const Rational& a) const {
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->var_name(static_cast<int>(i));
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) return gerstkit::to_string(a);
        if (a == 1) return vars;
        return gerstkit::to_string(a) + "*" + vars;
    }

    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

} // namespace gerstkit
