#pragma once

#include <vector>

#include "pfmm/griffiths.hpp"
#include "pfmm/series.hpp"

namespace pfmm {

// Everything the mirror-map stage needs from the series solvers:
// f0 (normalized holomorphic period), g (single-valued piece of the second
// solution), delta = 1 + theta(g/f0), and u = e^{g/f0}.
struct MirrorData {
    PowerSeries f0;
    PowerSeries g;
    PowerSeries delta;
    PowerSeries u;
};

inline MirrorData mirror_data(const PFOperator& pf, std::size_t order) {
    if (!check_max_unipotent(pf))
        throw NotMaximallyUnipotent("operator is not maximally unipotent at z = 0");
    auto comp = companion_matrix(pf);
    RatFuncMatrix a(4, std::vector<RatFunc>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a[i][j] = comp[i][j];
    auto w0 = solve_homogeneous(a, order);
    auto v = solve_inhomogeneous(a, w0, order);
    MirrorData data;
    data.f0 = w0[0];
    data.g = v[0];
    PowerSeries ratio = data.g * data.f0.reciprocal();
    data.delta = PowerSeries::one(order) + ratio.theta();
    data.u = ratio.exp();
    return data;
}

// h_0 = 1/(delta^3 (z - lambda) f0^2), h_j = (1/(delta u)) dh_{j-1}/dz.
// Each step consumes one valid order.
inline std::vector<PowerSeries> h_sequence(const PFOperator& pf,
                                           const MirrorData& data, std::size_t jmax) {
    const std::size_t order = data.f0.order();
    if (jmax + 1 > data.f0.valid())
        throw OrderExhausted("truncation order too small for requested h_j");
    PowerSeries z_minus_lambda(order);
    z_minus_lambda.raw(0) = -pf.lambda;
    if (order > 1) z_minus_lambda.raw(1) = 1;
    std::vector<PowerSeries> h;
    h.reserve(jmax + 1);
    h.push_back((data.delta * data.delta * data.delta * z_minus_lambda *
                 data.f0 * data.f0)
                    .reciprocal());
    PowerSeries du_inv = (data.delta * data.u).reciprocal();
    for (std::size_t j = 1; j <= jmax; ++j)
        h.push_back(du_inv * h.back().derivative());
    return h;
}

// The gauge-fixed Yukawa coupling as a q-expansion, with the extracted
// instanton numbers when extraction has been run.
struct YukawaExpansion {
    Rational c1;
    Rational c2;
    std::vector<Rational> a;  // a_0 .. a_J
    std::vector<Integer> n;   // n_0 .. n_J, filled by extract_n
};

// a_j = c1 * c2^{-j} * h_j(0) / j!, with c1 = -lambda*d and c2 = k^{-k}
// unless overridden.
inline YukawaExpansion q_expansion(const FamilySpec& spec, const PFOperator& pf,
                                   std::size_t order, std::size_t depth,
                                   const Rational* c2_override = nullptr) {
    YukawaExpansion y;
    y.c1 = -pf.lambda * Rational(spec.d_min);
    y.c2 = c2_override ? *c2_override
                       : Rational(1) / Rational(int_pow(Integer(spec.k),
                                                        static_cast<unsigned long>(spec.k)));
    if (y.c2 == 0) throw Error("c2 must be nonzero");
    MirrorData data = mirror_data(pf, order);
    auto h = h_sequence(pf, data, depth);
    Rational c2_pow = 1;  // c2^{-j}
    Rational fact = 1;    // j!
    for (std::size_t j = 0; j <= depth; ++j) {
        if (j > 0) {
            c2_pow /= y.c2;
            fact *= Rational(static_cast<long>(j));
        }
        y.a.push_back(y.c1 * c2_pow * h[j].at(0) / fact);
    }
    return y;
}

// Inverts kappa_ttt = n_0 + sum_j n_j j^3 q^j / (1 - q^j):
// n_0 = a_0 and n_m = (a_m - sum_{j|m, j<m} n_j j^3) / m^3.
inline std::vector<Integer> extract_n(const std::vector<Rational>& a) {
    if (a.empty()) throw Error("extract_n: empty coefficient list");
    std::vector<Integer> n;
    n.reserve(a.size());
    for (std::size_t m = 0; m < a.size(); ++m) {
        Rational val = a[m];
        if (m >= 1) {
            for (std::size_t j = 1; j < m; ++j) {
                if (m % j != 0) continue;
                Rational j3(static_cast<long>(j * j * j));
                val -= Rational(n[j]) * j3;
            }
            val /= Rational(static_cast<long>(m * m * m));
        }
        if (!is_integer(val))
            throw NonIntegralInstanton(static_cast<int>(m), to_string(val));
        n.push_back(val.get_num());
    }
    return n;
}

// re-synthesize the a_m from instanton numbers (forward direction of the instanton sum)
inline std::vector<Rational> synthesize_a(const std::vector<Integer>& n) {
    std::vector<Rational> a(n.size());
    if (!n.empty()) a[0] = Rational(n[0]);
    for (std::size_t m = 1; m < n.size(); ++m)
        for (std::size_t j = 1; j <= m; ++j)
            if (m % j == 0)
                a[m] += Rational(n[j]) * Rational(static_cast<long>(j * j * j));
    return a;
}

struct IntegralityReport {
    Rational c2;
    std::vector<bool> pass;  // pass[m] for m = 0..depth
    int first_failure = -1;  // -1 when all pass
    std::string failing_value;

    bool all_pass() const { return first_failure == -1; }
};

// Runs instanton extraction under a supplied c2 and reports integrality per
// coefficient. Failures are report content, not errors.
inline IntegralityReport verify_integrality(const FamilySpec& spec,
                                            const PFOperator& pf, std::size_t depth,
                                            const Rational& c2,
                                            std::size_t order = 30) {
    IntegralityReport rep;
    rep.c2 = c2;
    YukawaExpansion y = q_expansion(spec, pf, order, depth, &c2);
    std::vector<Integer> n;
    for (std::size_t m = 0; m <= depth; ++m) {
        Rational val = y.a[m];
        if (m >= 1) {
            for (std::size_t j = 1; j < m; ++j)
                if (m % j == 0 && rep.pass[j])
                    val -= Rational(n[j]) * Rational(static_cast<long>(j * j * j));
            val /= Rational(static_cast<long>(m * m * m));
        }
        bool ok = is_integer(val);
        rep.pass.push_back(ok);
        n.push_back(ok ? Integer(val.get_num()) : Integer(0));
        if (!ok && rep.first_failure == -1) {
            rep.first_failure = static_cast<int>(m);
            rep.failing_value = to_string(val);
        }
    }
    return rep;
}

// C_3(z) = (6 + B_3(z))/z must equal 6/z + 2/(z - lambda), i.e.
// B_3 = 2z/(z - lambda).
inline bool verify_c3(const PFOperator& pf) {
    UniPoly z = UniPoly::variable();
    RatFunc expected(Rational(2) * z, z - UniPoly(pf.lambda));
    return pf.B[3] == expected;
}

// Schubert's count of lines in P^4 four-times tangent to a general degree-n
// surface: (1/12) n(n-4)(n-5)(n-6)(n-7)(n^3+6n^2+7n-30).
inline Integer schubert_tangent_lines(long n) {
    if (n < 0) throw Error("schubert_tangent_lines: n must be non-negative");
    Integer m(n);
    Integer prod = m * (m - 4) * (m - 5) * (m - 6) * (m - 7) *
                   (m * m * m + 6 * m * m + 7 * m - 30);
    Integer q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), prod.get_mpz_t(), 12);
    if (r != 0) throw Error("schubert_tangent_lines: 12 does not divide the product");
    return q;
}

}  // namespace pfmm
