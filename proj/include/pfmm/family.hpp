#pragma once

#include <array>
#include <numeric>
#include <string>

#include "pfmm/multipoly.hpp"

namespace pfmm {

// One-parameter hypersurface family in weighted projective 4-space:
// weights k0 >= k1 >= ... >= k4, total weight k = sum k_j, exponents
// d_j = k / k_j, and d = min_j d_j (the lowest monomial degree in Q).
struct FamilySpec {
    std::array<long, kNumVars> weights{};
    long k = 0;
    std::array<long, kNumVars> d{};
    long d_min = 0;

    std::string name() const { return "k" + std::to_string(k); }
};

inline FamilySpec make_family(const std::array<long, kNumVars>& weights) {
    FamilySpec spec;
    spec.weights = weights;
    for (std::size_t j = 0; j < kNumVars; ++j) {
        if (weights[j] <= 0) throw InvalidFamily("weights must be positive");
        if (j > 0 && weights[j] > weights[j - 1])
            throw InvalidFamily("weights must be non-increasing");
        spec.k += weights[j];
    }
    for (std::size_t j = 0; j < kNumVars; ++j) {
        if (spec.k % weights[j] != 0)
            throw InvalidFamily("k/k_j is not an integer for j = " + std::to_string(j));
        spec.d[j] = spec.k / weights[j];
    }
    spec.d_min = *std::min_element(spec.d.begin(), spec.d.end());
    for (std::size_t drop = 0; drop < kNumVars; ++drop) {
        long g = 0;
        for (std::size_t j = 0; j < kNumVars; ++j)
            if (j != drop) g = std::gcd(g, weights[j]);
        if (g != 1)
            throw InvalidFamily("gcd of weights omitting one index must be 1");
    }
    long l = 1;
    for (long dj : spec.d) l = std::lcm(l, dj);
    if (l != spec.k) throw InvalidFamily("k != lcm{d_j}");
    return spec;
}

// the four built-in families (k = 5, 6, 8, 10)
inline FamilySpec builtin_family(long k) {
    switch (k) {
        case 5: return make_family({1, 1, 1, 1, 1});
        case 6: return make_family({2, 1, 1, 1, 1});
        case 8: return make_family({4, 1, 1, 1, 1});
        case 10: return make_family({5, 2, 1, 1, 1});
        default: throw InvalidFamily("no built-in family with k = " + std::to_string(k));
    }
}

inline constexpr std::array<long, 4> kBuiltinKs{5, 6, 8, 10};

// weighted degree of a weighted-homogeneous polynomial; all terms must agree
template <class F>
long weighted_degree(const MultiPoly<F>& p, const FamilySpec& spec) {
    if (p.is_zero()) throw NotHomogeneous("weighted degree of the zero polynomial");
    long deg = -1;
    for (const auto& [ev, c] : p.terms()) {
        long d = 0;
        for (std::size_t j = 0; j < kNumVars; ++j)
            d += spec.weights[j] * static_cast<long>(ev.e[j]);
        if (deg == -1)
            deg = d;
        else if (deg != d)
            throw NotHomogeneous("terms have differing weighted degrees");
    }
    return deg;
}

// Q(x, psi) = sum_j x_j^{d_j} - k psi prod_j x_j, over Q(psi)
inline MultiPoly<RatFunc> family_polynomial(const FamilySpec& spec,
                                            MonomialOrder order = {}) {
    MultiPoly<RatFunc> q(order);
    for (std::size_t j = 0; j < kNumVars; ++j) {
        ExponentVector ev;
        ev.e[j] = static_cast<unsigned>(spec.d[j]);
        q.add_term(ev, RatFunc(1));
    }
    ExponentVector all_ones;
    all_ones.e.fill(1);
    RatFunc psi = RatFunc::variable();
    q.add_term(all_ones, RatFunc(Rational(-spec.k)) * psi);
    return q;
}

}  // namespace pfmm
