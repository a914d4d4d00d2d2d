#pragma once

#include <array>

#include "pfmm/family.hpp"
#include "pfmm/groebner.hpp"

namespace pfmm {

// Cohomology-class carrier: numerator * Omega / Q^pole_order, with the
// numerator weighted-homogeneous of degree (pole_order - 1) * k.
struct RationalForm {
    MultiPoly<RatFunc> numerator;
    int pole_order = 1;
    FamilySpec spec;
};

// omega_ell = (-1)^{ell-1} (ell-1)! psi^ell (prod x_i)^{ell-1} Omega / Q^ell
inline RationalForm build_omega_ell(const FamilySpec& spec, int ell,
                                    MonomialOrder order = {}) {
    if (ell < 1 || ell > 5) throw Error("build_omega_ell: ell out of range");
    Rational c = factorial(static_cast<unsigned long>(ell - 1));
    if (ell % 2 == 0) c = -c;
    UniPoly psi_pow = UniPoly::monomial(c, static_cast<std::size_t>(ell));
    ExponentVector ev;
    ev.e.fill(static_cast<unsigned>(ell - 1));
    RationalForm form{MultiPoly<RatFunc>::term(RatFunc(psi_pow), ev, order),
                      ell, spec};
    return form;
}

// The four logarithmic-form coefficients of the Picard-Fuchs operator
// theta^4 + B3 theta^3 + B2 theta^2 + B1 theta + B0, as functions of z,
// together with k and the non-origin singular point lambda.
struct PFOperator {
    std::array<RatFunc, 4> B;  // B[j] multiplies theta^j
    long k = 0;
    Rational lambda;
};

// One Griffiths step: given numerator(eta) - eps*numerator(omega_ell) =
// sum_j A_j dQ/dx_j, the class of eta - eps*omega_ell at pole order ell-1
// has numerator (1/(ell-1)) sum_j dA_j/dx_j.
inline RationalForm pole_reduce_step(const RationalForm& eta,
                                     const CofactorDecomposition<RatFunc>& dec) {
    if (eta.pole_order < 2) throw Error("pole_reduce_step: pole order must be >= 2");
    MonomialOrder order = eta.numerator.order();
    MultiPoly<RatFunc> num(order);
    for (std::size_t j = 0; j < dec.cofactors.size(); ++j)
        num = num + partial_derivative(dec.cofactors[j], j);
    num = RatFunc(Rational(1, eta.pole_order - 1)) * num;
    RationalForm out{num, eta.pole_order - 1, eta.spec};
    if (!num.is_zero() &&
        weighted_degree(num, eta.spec) != (out.pole_order - 1) * eta.spec.k)
        throw InternalDegreeError("reduced numerator has the wrong weighted degree");
    return out;
}

// One recorded Griffiths step: at pole order ell, the certificate
// eta_numerator - epsilon_psi * omega_ell_numerator = sum_j cofactors[j] *
// dQ/dx_j holds as an exact polynomial identity.
struct ReductionStep {
    int pole_order = 0;
    MultiPoly<RatFunc> eta_numerator;
    RatFunc epsilon_psi;
    std::vector<MultiPoly<RatFunc>> cofactors;
};

struct DerivationTrace {
    MultiPoly<RatFunc> q;
    std::vector<MultiPoly<RatFunc>> jacobian;
    std::vector<ReductionStep> steps;
};

// Full Griffiths-Dwork reduction of omega_5 against the Jacobian ideal of
// Q(x, psi), yielding the coefficients eps_1..eps_4 as functions of
// z = psi^{-k}.
inline std::array<RatFunc, 4> derive_epsilons(const FamilySpec& spec,
                                              MonomialOrder order = {},
                                              DerivationTrace* trace = nullptr) {
    MultiPoly<RatFunc> q = family_polynomial(spec, order);
    std::vector<MultiPoly<RatFunc>> jacobian;
    for (std::size_t j = 0; j < kNumVars; ++j)
        jacobian.push_back(partial_derivative(q, j));
    GroebnerBasis<RatFunc> gb = buchberger(jacobian, order);
    if (trace) {
        trace->q = q;
        trace->jacobian = jacobian;
    }

    std::array<RatFunc, 4> eps_psi;
    RationalForm eta = build_omega_ell(spec, 5, order);
    for (int ell = 5; ell >= 2; --ell) {
        CofactorDecomposition<RatFunc> dec;
        if (ell == 5) {
            // the degree-4k invariant piece vanishes, so omega_5's numerator
            // lies in the Jacobian ideal outright
            auto div = divide_with_cofactors(eta.numerator, gb);
            if (!div.remainder.is_zero())
                throw NonProportionalNormalForm(
                    "numerator of omega_5 is not in the Jacobian ideal");
            dec = {RatFunc(0), std::move(div.cofactors)};
        } else {
            RationalForm omega = build_omega_ell(spec, ell, order);
            dec = jacobian_split(eta.numerator, omega.numerator, gb);
            eps_psi[static_cast<std::size_t>(ell - 1)] = dec.epsilon;
        }
        if (trace)
            trace->steps.push_back({ell, eta.numerator, dec.epsilon, dec.cofactors});
        eta = pole_reduce_step(eta, dec);
    }
    // at pole order 1 the class is eps_1 * omega_1 on the nose
    RatFunc c = eta.numerator.coeff(ExponentVector{});
    eps_psi[0] = c / RatFunc::variable();

    std::array<RatFunc, 4> eps_z;
    for (std::size_t i = 0; i < 4; ++i) eps_z[i] = psi_to_z(eps_psi[i], spec.k);
    return eps_z;
}

// lambda is the root of the (monic, linear) denominator of eps_4
inline Rational extract_lambda(const RatFunc& eps4) {
    if (eps4.den().degree() != 1)
        throw UnsupportedSingularityStructure("denominator of eps_4 is not linear");
    Rational lambda = -eps4.den().coeff(0);
    if (lambda == 0)
        throw UnsupportedSingularityStructure("singular point coincides with z = 0");
    return lambda;
}

// Basis change from the omega_ell frame to theta-derivatives of omega_1.
inline PFOperator assemble_pf(const FamilySpec& spec,
                              const std::array<RatFunc, 4>& eps) {
    const RatFunc k1(Rational(1, spec.k));
    const RatFunc k2 = k1 * k1;
    const RatFunc k3 = k2 * k1;
    const RatFunc k4 = k3 * k1;
    PFOperator pf;
    pf.k = spec.k;
    pf.B[0] = RatFunc(0) - eps[0] - k1 * eps[1] - RatFunc(2) * k2 * eps[2] -
              RatFunc(6) * k3 * eps[3] + RatFunc(24) * k4;
    pf.B[1] = RatFunc(0) - eps[1] - RatFunc(3) * k1 * eps[2] -
              RatFunc(11) * k2 * eps[3] + RatFunc(50) * k3;
    pf.B[2] = RatFunc(0) - eps[2] - RatFunc(6) * k1 * eps[3] + RatFunc(35) * k2;
    pf.B[3] = RatFunc(0) - eps[3] + RatFunc(10) * k1;
    for (const RatFunc& b : pf.B)
        if (!(b.eval_zero() == 0))
            throw NotMaximallyUnipotent("B_j(0) != 0");
    pf.lambda = extract_lambda(eps[3]);
    return pf;
}

// companion matrix of theta^4 + sum B_j theta^j: superdiagonal ones,
// bottom row (-B0, -B1, -B2, -B3)
inline std::array<std::array<RatFunc, 4>, 4> companion_matrix(const PFOperator& pf) {
    std::array<std::array<RatFunc, 4>, 4> a{};
    for (std::size_t i = 0; i + 1 < 4; ++i) a[i][i + 1] = RatFunc(1);
    for (std::size_t j = 0; j < 4; ++j) a[3][j] = RatFunc(0) - pf.B[j];
    return a;
}

// B_j(0) = 0 for all j, and A(0) nilpotent of index exactly 4
inline bool check_max_unipotent(const PFOperator& pf) {
    for (const RatFunc& b : pf.B) {
        try {
            if (!(b.eval_zero() == 0)) return false;
        } catch (const PoleAtOrigin&) {
            return false;
        }
    }
    auto a = companion_matrix(pf);
    std::array<std::array<Rational, 4>, 4> a0{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a0[i][j] = a[i][j].eval_zero();
    auto matmul = [](const auto& x, const auto& y) {
        std::array<std::array<Rational, 4>, 4> r{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t l = 0; l < 4; ++l) r[i][j] += x[i][l] * y[l][j];
        return r;
    };
    auto is_zero = [](const auto& m) {
        for (const auto& row : m)
            for (const auto& v : row)
                if (v != 0) return false;
        return true;
    };
    auto p2 = matmul(a0, a0);
    auto p3 = matmul(p2, a0);
    auto p4 = matmul(p3, a0);
    return !is_zero(p3) && is_zero(p4);
}

}  // namespace pfmm
