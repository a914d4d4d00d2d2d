#pragma once

#include <string>
#include <vector>

#include "pfmm/records.hpp"
#include "pfmm/reference.hpp"

namespace pfmm {

// residual of the logarithmic operator theta^4 + sum B_j theta^j applied to f
inline PowerSeries apply_pf_operator(const PFOperator& pf, const PowerSeries& f) {
    PowerSeries res = f.theta().theta().theta().theta();
    PowerSeries tj = f;
    for (std::size_t j = 0; j < 4; ++j) {
        res = res + expand_at_zero(pf.B[j], f.order()) * tj;
        tj = tj.theta();
    }
    return res;
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The bundled verification suite for one family. Reference-table comparisons
// and the Schubert cross-check only apply to the built-in families.
inline std::vector<VerifyCheck> run_verification(const FamilySpec& spec,
                                                 std::size_t order, std::size_t depth,
                                                 const Rational* c2_override = nullptr) {
    std::vector<VerifyCheck> checks;
    DerivationRecord rec = derive_family(spec);
    bool builtin = false;
    for (long k : kBuiltinKs)
        if (spec.k == k && spec.weights == builtin_family(k).weights) builtin = true;

    if (builtin) {
        auto expected = reference_epsilons(spec.k);
        bool ok = true;
        for (std::size_t i = 0; i < 4; ++i)
            if (!(rec.epsilons[i] == expected[i])) ok = false;
        checks.push_back({"epsilon table", ok,
                          ok ? "all four coefficients match"
                             : "derived epsilons differ from reference"});
    }

    checks.push_back({"maximal unipotency", rec.unipotent,
                      rec.unipotent ? "B_j(0) = 0, A(0)^3 != 0, A(0)^4 = 0"
                                    : "unipotency check failed"});

    bool c3 = verify_c3(rec.pf);
    checks.push_back({"C3 relation", c3,
                      "B3 " + std::string(c3 ? "=" : "!=") + " 2z/(z - " +
                          to_string(rec.pf.lambda) + ")"});

    {
        MirrorData data = mirror_data(rec.pf, order);
        PowerSeries res = apply_pf_operator(rec.pf, data.f0);
        bool ok = order >= 4 && res.is_zero_through(order - 4);
        checks.push_back({"operator annihilates f0", ok,
                          "residual through order " + std::to_string(order - 4)});
    }

    Rational c2 = c2_override ? *c2_override
                              : Rational(1) / Rational(int_pow(Integer(spec.k),
                                                               static_cast<unsigned long>(spec.k)));
    IntegralityReport rep = verify_integrality(spec, rec.pf, depth, c2, order);
    checks.push_back({"integrality depth " + std::to_string(depth), rep.all_pass(),
                      rep.all_pass()
                          ? "n_1..n_" + std::to_string(depth) + " integral"
                          : "first failure at index " + std::to_string(rep.first_failure) +
                                " (" + rep.failing_value + ")"});

    if (builtin && spec.k == 8) {
        YukawaExpansion y = q_expansion(spec, rec.pf, order, std::max<std::size_t>(depth, 1));
        y.n = extract_n(y.a);
        Integer lines = schubert_tangent_lines(8);
        bool ok = y.n.size() > 1 && y.n[1] == 2 * lines;
        checks.push_back({"n1 = 2 * schubert(8)", ok,
                          to_string(y.n[1]) + (ok ? " = " : " != ") + "2 * " +
                              to_string(lines)});
    }
    return checks;
}

}  // namespace pfmm
