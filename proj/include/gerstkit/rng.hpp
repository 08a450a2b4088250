#pragma once

// Deterministic splittable randomness. All sampling in the library flows
// from a single seed through SplitRng so failing witnesses replay exactly,
// independent of platform and of how suites are scheduled.

#include "gerstkit/poly.hpp"

#include <cstdint>
#include <string_view>

namespace gerstkit {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
} // namespace detail

class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return detail::splitmix64(state_); }

    // Uniform-ish in [0, n); the tiny modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (next() & 1) != 0; }

    SplitRng split(std::uint64_t salt) const {
        std::uint64_t s = state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
        return SplitRng(detail::splitmix64(s));
    }

    SplitRng split(std::string_view label) const { return split(detail::fnv1a(label)); }

    // Coefficient pool {±1, ±2, ±1/2, ±3}: generic enough to exercise every
    // sign branch while keeping intermediate term sizes small.
    Rational small_coeff() {
        static const int nums[4] = {1, 2, 1, 3};
        static const int dens[4] = {1, 1, 2, 1};
        std::uint64_t k = below(4);
        Rational q(nums[k], dens[k]);
        return flip() ? q : -q;
    }

private:
    std::uint64_t state_;
};

// Random monomial of total degree <= max_degree.
inline Monomial random_monomial(SplitRng& rng, int num_vars, int max_degree) {
    Monomial m(static_cast<std::size_t>(num_vars), 0);
    int budget = rng.range(0, max_degree);
    for (int k = 0; k < budget; ++k) {
        m[static_cast<std::size_t>(rng.range(0, num_vars - 1))] += 1;
    }
    return m;
}

// Nonzero random polynomial: deterministic for a fixed generator state,
// total degree <= max_degree, at most max_terms distinct monomials.
inline Poly random_poly(const RingPtr& ring, SplitRng& rng, int max_degree, int max_terms) {
    if (max_degree < 0 || max_terms < 1)
        throw std::invalid_argument("random_poly: bad bounds");
    Poly p = Poly::zero(ring);
    int want = rng.range(1, max_terms);
    int attempts = 0;
    int placed = 0;
    while (placed < want && attempts < 8 * max_terms) {
        ++attempts;
        Monomial m = random_monomial(rng, ring->num_vars(), max_degree);
        Poly t = Poly::monomial(ring, m, rng.small_coeff());
        Poly q = p + t;
        if (q.num_terms() > p.num_terms()) {  // skip colliding monomials
            p = q;
            ++placed;
        }
    }
    if (p.is_zero()) p = Poly::constant(ring, rng.small_coeff());
    return p;
}

inline Poly random_element(const RingPtr& ring, int max_degree, int max_terms, std::uint64_t seed) {
    SplitRng rng(seed);
    return random_poly(ring, rng, max_degree, max_terms);
}

} // namespace gerstkit
