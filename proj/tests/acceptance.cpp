// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full derivation for all four built-in families once and
// checks everything against the frozen reference tables.

#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "pfmm/verify.hpp"

using namespace pfmm;

namespace {

bool g_all_pass = true;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
    g_all_pass = g_all_pass && ok;
    std::cout << "criterion " << idx << " [" << name << "]: "
              << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
}

struct FamilyRun {
    FamilySpec spec;
    DerivationTrace trace;
    std::array<RatFunc, 4> epsilons;
    PFOperator pf;
};

}  // namespace

int main() {
    constexpr std::size_t N = 30;
    std::map<long, FamilyRun> runs;
    for (long k : kBuiltinKs) {
        FamilyRun run;
        run.spec = builtin_family(k);
        run.epsilons = derive_epsilons(run.spec, {}, &run.trace);
        run.pf = assemble_pf(run.spec, run.epsilons);
        runs[k] = std::move(run);
    }

    // 1. epsilon table, all 16 rational functions, exact equality
    {
        bool ok = true;
        std::string detail;
        for (long k : kBuiltinKs) {
            auto expected = reference_epsilons(k);
            for (std::size_t i = 0; i < 4; ++i)
                if (!(runs[k].epsilons[i] == expected[i])) {
                    ok = false;
                    detail = "mismatch at k=" + std::to_string(k) +
                             " eps" + std::to_string(i + 1);
                }
        }
        report(1, "epsilon table", ok, detail);
    }

    // 2. maximal unipotency at z = 0
    {
        bool ok = true;
        for (long k : kBuiltinKs) ok = ok && check_max_unipotent(runs[k].pf);
        report(2, "maximal unipotency", ok);
    }

    // 3. B3 = 2z/(z - lambda) with the expected lambda
    {
        bool ok = true;
        for (long k : kBuiltinKs) {
            ok = ok && runs[k].pf.lambda == reference_lambda(k);
            ok = ok && verify_c3(runs[k].pf);
        }
        report(3, "singular-point structure", ok);
    }

    // 4. all 20 reference curve counts, exact
    {
        bool ok = true;
        std::string detail;
        for (long k : kBuiltinKs) {
            YukawaExpansion y = q_expansion(runs[k].spec, runs[k].pf, N, 4);
            y.n = extract_n(y.a);
            auto expected = reference_curve_counts(k);
            for (std::size_t j = 0; j < 5; ++j)
                if (y.n[j] != expected[j]) {
                    ok = false;
                    detail = "n" + std::to_string(j) + "(k=" + std::to_string(k) +
                             ") = " + to_string(y.n[j]);
                }
        }
        report(4, "curve counts", ok, detail);
    }

    // 5. integrality of n_1..n_20 at the canonical gauge
    {
        bool ok = true;
        std::string detail;
        for (long k : kBuiltinKs) {
            Rational c2 = Rational(1) / Rational(int_pow(Integer(k),
                                                         static_cast<unsigned long>(k)));
            IntegralityReport rep = verify_integrality(runs[k].spec, runs[k].pf, 20, c2, N);
            if (!rep.all_pass()) {
                ok = false;
                detail = "k=" + std::to_string(k) + " fails at index " +
                         std::to_string(rep.first_failure);
            }
        }
        report(5, "integrality depth 20", ok, detail);
    }

    // 6. Schubert cross-check for the degree-8 family
    {
        Integer lines = schubert_tangent_lines(8);
        YukawaExpansion y = q_expansion(runs[8].spec, runs[8].pf, N, 1);
        y.n = extract_n(y.a);
        bool ok = lines == 14752 && y.n[1] == 2 * lines;
        report(6, "Schubert cross-check", ok,
               "lines = " + to_string(lines) + ", n1 = " + to_string(y.n[1]));
    }

    // 7. operator annihilates f0 through order N - 4
    {
        bool ok = true;
        for (long k : kBuiltinKs) {
            MirrorData data = mirror_data(runs[k].pf, N);
            ok = ok && apply_pf_operator(runs[k].pf, data.f0).is_zero_through(N - 4);
        }
        report(7, "operator annihilation", ok);
    }

    // 8. property suites
    {
        bool ok = true;
        std::string detail;

        // order independence of the extracted n_j
        for (long k : kBuiltinKs) {
            YukawaExpansion y1 = q_expansion(runs[k].spec, runs[k].pf, N, 8);
            YukawaExpansion y2 = q_expansion(runs[k].spec, runs[k].pf, N + 10, 8);
            if (extract_n(y1.a) != extract_n(y2.a)) {
                ok = false;
                detail = "order dependence at k=" + std::to_string(k);
            }
        }

        // synthesis/extraction round trip
        std::mt19937 rng(20260826);
        std::uniform_int_distribution<long> val(-50, 500);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            std::vector<Integer> n;
            for (int i = 0; i < 15; ++i) n.push_back(Integer(val(rng)));
            if (extract_n(synthesize_a(n)) != n) {
                ok = false;
                detail = "round trip failure";
            }
        }

        // per-step reduction certificates for every family
        for (long k : kBuiltinKs) {
            const FamilyRun& run = runs[k];
            if (run.trace.steps.size() != 4) {
                ok = false;
                detail = "trace incomplete at k=" + std::to_string(k);
                continue;
            }
            for (const auto& step : run.trace.steps) {
                MultiPoly<RatFunc> omega =
                    build_omega_ell(run.spec, step.pole_order).numerator;
                MultiPoly<RatFunc> rhs(run.trace.q.order());
                for (std::size_t j = 0; j < kNumVars; ++j)
                    rhs = rhs + step.cofactors[j] * run.trace.jacobian[j];
                if (!(step.eta_numerator - step.epsilon_psi * omega == rhs)) {
                    ok = false;
                    detail = "certificate failure at k=" + std::to_string(k) +
                             " pole order " + std::to_string(step.pole_order);
                }
            }
        }

        // Euler identity: sum (k_j / k) x_j dQ/dx_j = Q for each family
        for (long k : kBuiltinKs) {
            const FamilySpec& spec = runs[k].spec;
            MultiPoly<RatFunc> q = family_polynomial(spec);
            MultiPoly<RatFunc> acc(q.order());
            for (std::size_t j = 0; j < kNumVars; ++j) {
                ExponentVector xj{};
                xj.e[j] = 1;
                RatFunc w(Rational(spec.weights[j]) / Rational(spec.k));
                acc = acc + partial_derivative(q, j).times_term(w, xj);
            }
            if (!(acc == q)) {
                ok = false;
                detail = "Euler identity failure at k=" + std::to_string(k);
            }
        }

        report(8, "property suites", ok, detail);
    }

    return g_all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
