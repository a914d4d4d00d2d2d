#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pfmm/multipoly.hpp"

namespace pfmm {

template <class F>
struct DivisionResult {
    MultiPoly<F> remainder;
    std::vector<MultiPoly<F>> cofactors;  // one per divisor, in order
};

// Multivariate division: p = sum_i cofactor_i * divisor_i + remainder, with
// no remainder term divisible by any divisor's leading monomial.
template <class F>
DivisionResult<F> divide_general(const MultiPoly<F>& p,
                                 const std::vector<MultiPoly<F>>& divisors) {
    MonomialOrder order = p.order();
    DivisionResult<F> res{MultiPoly<F>(order),
                          std::vector<MultiPoly<F>>(divisors.size(), MultiPoly<F>(order))};
    MultiPoly<F> h = p;
    while (!h.is_zero()) {
        const ExponentVector& lm = h.leading_monomial();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const MultiPoly<F>& g = divisors[i];
            if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
            F c = h.leading_coeff() / g.leading_coeff();
            ExponentVector shift = lm - g.leading_monomial();
            res.cofactors[i].add_term(shift, c);
            h = h - g.times_term(c, shift);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.add_term(lm, h.leading_coeff());
            h = h - MultiPoly<F>::term(h.leading_coeff(), lm, order);
        }
    }
    return res;
}

template <class F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& f, const MultiPoly<F>& g,
                          MonomialOrder order) {
    if (f.is_zero() || g.is_zero())
        throw Error("s_polynomial of a zero polynomial");
    ExponentVector l = lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly<F> a = f.times_term(F(1) / f.leading_coeff(), l - f.leading_monomial());
    MultiPoly<F> b = g.times_term(F(1) / g.leading_coeff(), l - g.leading_monomial());
    (void)order;
    return a - b;
}

template <class F>
struct GroebnerBasis {
    std::vector<MultiPoly<F>> generators;
    std::vector<MultiPoly<F>> basis;
    // basis[i] == sum_j transform[i][j] * generators[j]
    std::vector<std::vector<MultiPoly<F>>> transform;
    MonomialOrder order;

    MultiPoly<F> normal_form(const MultiPoly<F>& p) const {
        return divide_general(p, basis).remainder;
    }
};

// Buchberger's algorithm with the normal pair-selection strategy and both
// elimination criteria. Cofactor rows are maintained through every S-pair
// and reduction, so each basis element carries an exact expression in terms
// of the original generators.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<MultiPoly<F>>& generators,
                            MonomialOrder order = {}) {
    if (generators.empty()) throw Error("buchberger: no generators");
    for (const auto& g : generators)
        if (g.is_zero()) throw Error("buchberger: zero generator");

    GroebnerBasis<F> gb;
    gb.order = order;
    gb.generators.reserve(generators.size());
    for (const auto& g : generators) gb.generators.push_back(g.with_order(order));

    auto unit_row = [&](std::size_t j, const F& scale) {
        std::vector<MultiPoly<F>> row(generators.size(), MultiPoly<F>(order));
        row[j] = MultiPoly<F>::constant(scale, order);
        return row;
    };

    for (std::size_t j = 0; j < gb.generators.size(); ++j) {
        F inv = F(1) / gb.generators[j].leading_coeff();
        gb.basis.push_back(inv * gb.generators[j]);
        gb.transform.push_back(unit_row(j, inv));
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j) pending.insert({i, j});

    auto pair_lcm = [&](const Pair& p) {
        return lcm(gb.basis[p.first].leading_monomial(),
                   gb.basis[p.second].leading_monomial());
    };

    while (!pending.empty()) {
        // normal strategy: smallest lcm in the monomial order
        auto best = pending.begin();
        ExponentVector best_lcm = pair_lcm(*best);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            ExponentVector l = pair_lcm(*it);
            if (order.less(l, best_lcm)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        const ExponentVector lm_i = gb.basis[i].leading_monomial();
        const ExponentVector lm_j = gb.basis[j].leading_monomial();
        // product criterion
        if (best_lcm == lm_i + lm_j) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t l = 0; l < gb.basis.size() && !skip; ++l) {
            if (l == i || l == j) continue;
            if (!gb.basis[l].leading_monomial().divides(best_lcm)) continue;
            Pair pil{std::min(i, l), std::max(i, l)};
            Pair pjl{std::min(j, l), std::max(j, l)};
            if (!pending.count(pil) && !pending.count(pjl)) skip = true;
        }
        if (skip) continue;

        // S-polynomial with its cofactor row
        ExponentVector si = best_lcm - lm_i;
        ExponentVector sj = best_lcm - lm_j;
        F ci = F(1) / gb.basis[i].leading_coeff();
        F cj = F(1) / gb.basis[j].leading_coeff();
        MultiPoly<F> s = gb.basis[i].times_term(ci, si) - gb.basis[j].times_term(cj, sj);
        std::vector<MultiPoly<F>> row(generators.size(), MultiPoly<F>(order));
        for (std::size_t t = 0; t < generators.size(); ++t)
            row[t] = gb.transform[i][t].times_term(ci, si) -
                     gb.transform[j][t].times_term(cj, sj);

        auto div = divide_general(s, gb.basis);
        if (div.remainder.is_zero()) continue;
        for (std::size_t b = 0; b < gb.basis.size(); ++b) {
            if (div.cofactors[b].is_zero()) continue;
            for (std::size_t t = 0; t < generators.size(); ++t)
                row[t] = row[t] - div.cofactors[b] * gb.transform[b][t];
        }
        F inv = F(1) / div.remainder.leading_coeff();
        std::size_t n = gb.basis.size();
        gb.basis.push_back(inv * div.remainder);
        for (auto& r : row) r = inv * r;
        gb.transform.push_back(std::move(row));
        for (std::size_t t = 0; t < n; ++t) pending.insert({t, n});
    }

    // minimalize: drop elements whose leading monomial another element divides
    std::vector<bool> keep(gb.basis.size(), true);
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = 0; j < gb.basis.size() && keep[i]; ++j)
            if (i != j && keep[j] &&
                gb.basis[j].leading_monomial().divides(gb.basis[i].leading_monomial()))
                keep[i] = false;
    {
        std::vector<MultiPoly<F>> nb;
        std::vector<std::vector<MultiPoly<F>>> nt;
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            if (keep[i]) {
                nb.push_back(std::move(gb.basis[i]));
                nt.push_back(std::move(gb.transform[i]));
            }
        gb.basis = std::move(nb);
        gb.transform = std::move(nt);
    }

    // inter-reduce tails so the basis is the reduced Groebner basis
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        std::vector<MultiPoly<F>> others;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < gb.basis.size(); ++j)
            if (j != i) {
                others.push_back(gb.basis[j]);
                idx.push_back(j);
            }
        auto div = divide_general(gb.basis[i], others);
        if (div.remainder == gb.basis[i]) continue;
        gb.basis[i] = div.remainder;
        for (std::size_t o = 0; o < others.size(); ++o) {
            if (div.cofactors[o].is_zero()) continue;
            for (std::size_t t = 0; t < gb.generators.size(); ++t)
                gb.transform[i][t] =
                    gb.transform[i][t] - div.cofactors[o] * gb.transform[idx[o]][t];
        }
    }
    return gb;
}

// Remainder plus cofactors expressed against the ORIGINAL generators,
// composed through the basis transform rows.
template <class F>
DivisionResult<F> divide_with_cofactors(const MultiPoly<F>& p,
                                        const GroebnerBasis<F>& gb) {
    auto div = divide_general(p.with_order(gb.order), gb.basis);
    DivisionResult<F> res{div.remainder,
                          std::vector<MultiPoly<F>>(gb.generators.size(),
                                                    MultiPoly<F>(gb.order))};
    for (std::size_t b = 0; b < gb.basis.size(); ++b) {
        if (div.cofactors[b].is_zero()) continue;
        for (std::size_t t = 0; t < gb.generators.size(); ++t)
            res.cofactors[t] = res.cofactors[t] + div.cofactors[b] * gb.transform[b][t];
    }
    return res;
}

template <class F>
struct CofactorDecomposition {
    F epsilon;
    std::vector<MultiPoly<F>> cofactors;  // one per original generator
};

// Finds the unique scalar epsilon with NF(p) = epsilon * NF(reference) and
// certifies p - epsilon*reference as an ideal member via explicit cofactors.
template <class F>
CofactorDecomposition<F> jacobian_split(const MultiPoly<F>& p,
                                        const MultiPoly<F>& reference,
                                        const GroebnerBasis<F>& gb) {
    MultiPoly<F> nf_ref = gb.normal_form(reference.with_order(gb.order));
    if (nf_ref.is_zero())
        throw Error("jacobian_split: reference has zero normal form");
    MultiPoly<F> nf_p = gb.normal_form(p.with_order(gb.order));

    F epsilon(0);
    if (!nf_p.is_zero()) {
        if (nf_p.num_terms() != nf_ref.num_terms())
            throw NonProportionalNormalForm("normal forms have different supports");
        std::optional<F> ratio;
        auto it_p = nf_p.terms().begin();
        auto it_r = nf_ref.terms().begin();
        for (; it_p != nf_p.terms().end(); ++it_p, ++it_r) {
            if (!(it_p->first == it_r->first))
                throw NonProportionalNormalForm("normal forms have different supports");
            F q = it_p->second / it_r->second;
            if (!ratio)
                ratio = q;
            else if (!(*ratio == q))
                throw NonProportionalNormalForm("coefficient ratios disagree");
        }
        epsilon = *ratio;
    }

    MultiPoly<F> diff =
        p.with_order(gb.order) - epsilon * reference.with_order(gb.order);
    auto div = divide_with_cofactors(diff, gb);
    if (!div.remainder.is_zero())
        throw NonProportionalNormalForm("residual after split is not in the ideal");
    return {epsilon, std::move(div.cofactors)};
}

}  // namespace pfmm
