#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfmm/family.hpp"
#include "pfmm/groebner.hpp"

using namespace pfmm;

namespace {

std::mt19937 rng(90125);

ExponentVector ev(unsigned a, unsigned b, unsigned c, unsigned d, unsigned e) {
    return ExponentVector{{a, b, c, d, e}};
}

MultiPoly<Rational> random_poly(int max_terms = 4, unsigned max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<long> coeff(-9, 9);
    MultiPoly<Rational> p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExponentVector e;
        for (auto& x : e.e) x = exp(rng);
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

template <class F>
MultiPoly<F> expand_row(const std::vector<MultiPoly<F>>& row,
                        const std::vector<MultiPoly<F>>& gens) {
    MultiPoly<F> acc(gens[0].order());
    for (std::size_t j = 0; j < gens.size(); ++j) acc = acc + row[j] * gens[j];
    return acc;
}

std::vector<MultiPoly<RatFunc>> quintic_jacobian() {
    MultiPoly<RatFunc> q = family_polynomial(builtin_family(5));
    std::vector<MultiPoly<RatFunc>> gens;
    for (std::size_t j = 0; j < kNumVars; ++j) gens.push_back(partial_derivative(q, j));
    return gens;
}

}  // namespace

TEST_CASE("s_polynomial") {
    MonomialOrder ord;
    auto x0 = MultiPoly<Rational>::variable(0);
    auto x1 = MultiPoly<Rational>::variable(1);
    CHECK(s_polynomial(x0, x1, ord).is_zero());
    CHECK(s_polynomial(x0, x0, ord).is_zero());

    // S(x0^2 - x1, x0 x1) = -x1^2 in grevlex
    MultiPoly<Rational> f = MultiPoly<Rational>::term(1, ev(2, 0, 0, 0, 0));
    f.add_term(ev(0, 1, 0, 0, 0), -1);
    MultiPoly<Rational> g = MultiPoly<Rational>::term(1, ev(1, 1, 0, 0, 0));
    MultiPoly<Rational> s = s_polynomial(f, g, ord);
    CHECK(s == MultiPoly<Rational>::term(-1, ev(0, 2, 0, 0, 0)));
    // leading terms of the scaled multiples cancel by construction
    CHECK(ord.less(s.leading_monomial(), lcm(f.leading_monomial(), g.leading_monomial())));
}

TEST_CASE("buchberger on toy ideals") {
    auto x0 = MultiPoly<Rational>::variable(0);
    auto x1 = MultiPoly<Rational>::variable(1);
    auto gb = buchberger<Rational>({x0, x1});
    CHECK(gb.basis.size() == 2);

    MultiPoly<Rational> f = MultiPoly<Rational>::term(1, ev(2, 0, 0, 0, 0));
    f.add_term(ev(0, 1, 0, 0, 0), -1);
    MultiPoly<Rational> g = MultiPoly<Rational>::term(1, ev(1, 1, 0, 0, 0));
    auto gb2 = buchberger<Rational>({f, g});
    MultiPoly<Rational> x1sq = MultiPoly<Rational>::term(1, ev(0, 2, 0, 0, 0));
    bool found = false;
    for (const auto& b : gb2.basis)
        if (b == x1sq) found = true;
    CHECK(found);

    // transform rows express each basis element in the original generators
    for (std::size_t i = 0; i < gb2.basis.size(); ++i)
        CHECK(expand_row(gb2.transform[i], gb2.generators) == gb2.basis[i]);

    // every S-polynomial of basis pairs reduces to zero
    for (std::size_t i = 0; i < gb2.basis.size(); ++i)
        for (std::size_t j = i + 1; j < gb2.basis.size(); ++j)
            CHECK(gb2.normal_form(s_polynomial(gb2.basis[i], gb2.basis[j], gb2.order))
                      .is_zero());
}

TEST_CASE("divide_with_cofactors basics") {
    auto x0 = MultiPoly<Rational>::variable(0);
    auto x1 = MultiPoly<Rational>::variable(1);
    auto gb = buchberger<Rational>({x0});

    auto r1 = divide_with_cofactors(x0 * x0, gb);
    CHECK(r1.remainder.is_zero());
    CHECK(r1.cofactors[0] == x0);

    auto r2 = divide_with_cofactors(x1, gb);
    CHECK(r2.remainder == x1);
    CHECK(r2.cofactors[0].is_zero());
}

TEST_CASE("membership soundness and normal-form linearity on random combinations") {
    auto gens = quintic_jacobian();
    auto gb = buchberger(gens);

    // exact division identity and zero remainder for ideal members
    for (int trial = 0; trial < 5; ++trial) {
        MultiPoly<RatFunc> member(gb.order);
        for (const auto& g : gens) {
            MultiPoly<Rational> cq = random_poly(3, 2);
            MultiPoly<RatFunc> c(gb.order);
            for (const auto& [e, v] : cq.terms()) c.add_term(e, RatFunc(v));
            member = member + c * g;
        }
        auto div = divide_with_cofactors(member, gb);
        CHECK(div.remainder.is_zero());
        CHECK(expand_row(div.cofactors, gens) == member);
    }

    // NF(g) = 0 for generators and monomial multiples
    std::uniform_int_distribution<unsigned> exp(0, 2);
    for (const auto& g : gens) {
        CHECK(gb.normal_form(g).is_zero());
        ExponentVector m;
        for (auto& x : m.e) x = exp(rng);
        CHECK(gb.normal_form(g.times_term(RatFunc(1), m)).is_zero());
    }

    // linearity of the normal form
    for (int trial = 0; trial < 5; ++trial) {
        MultiPoly<Rational> pq = random_poly(4, 3), qq = random_poly(4, 3);
        MultiPoly<RatFunc> p(gb.order), q(gb.order);
        for (const auto& [e, v] : pq.terms()) p.add_term(e, RatFunc(v));
        for (const auto& [e, v] : qq.terms()) q.add_term(e, RatFunc(v));
        RatFunc a(Rational(3, 2)), b(UniPoly::variable());  // b = psi
        CHECK(gb.normal_form(a * p + b * q) ==
              a * gb.normal_form(p) + b * gb.normal_form(q));
    }
}

TEST_CASE("jacobian_split") {
    auto gens = quintic_jacobian();
    auto gb = buchberger(gens);

    ExponentVector ones;
    ones.e.fill(1);
    MultiPoly<RatFunc> reference =
        MultiPoly<RatFunc>::term(RatFunc(UniPoly::monomial(1, 2)), ones);  // psi^2 prod x

    // p already in the ideal -> epsilon = 0 with exact cofactors
    MultiPoly<RatFunc> member = gens[0].times_term(RatFunc(1), ones);
    auto d1 = jacobian_split(member, reference, gb);
    CHECK(d1.epsilon.is_zero());
    CHECK(expand_row(d1.cofactors, gens) == member);

    // p = reference -> epsilon = 1, cofactors all zero
    auto d2 = jacobian_split(reference, reference, gb);
    CHECK(d2.epsilon == RatFunc(1));
    for (const auto& c : d2.cofactors) CHECK(c.is_zero());

    // non-proportional normal forms are rejected
    MultiPoly<RatFunc> stray = MultiPoly<RatFunc>::term(RatFunc(1), ev(1, 1, 1, 0, 0));
    CHECK_THROWS_AS(jacobian_split(stray, reference, gb), NonProportionalNormalForm);
}
