// pfmm: derive Picard-Fuchs data for the built-in hypersurface families,
// expand the Yukawa coupling, extract curve counts, and run verification.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "pfmm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
    std::string family = "all";
    std::vector<long> weights;
    std::size_t order = 30;
    std::size_t depth = 20;
    std::string c2_str;
    std::string format = "text";
    std::string output;
};

std::vector<pfmm::FamilySpec> resolve_families(const RunConfig& cfg) {
    if (!cfg.weights.empty()) {
        if (cfg.weights.size() != pfmm::kNumVars)
            throw pfmm::InvalidFamily("--weights takes exactly 5 values");
        std::array<long, pfmm::kNumVars> w{};
        std::copy(cfg.weights.begin(), cfg.weights.end(), w.begin());
        return {pfmm::make_family(w)};
    }
    if (cfg.family == "all") {
        std::vector<pfmm::FamilySpec> out;
        for (long k : pfmm::kBuiltinKs) out.push_back(pfmm::builtin_family(k));
        return out;
    }
    if (cfg.family.size() > 1 && cfg.family[0] == 'k')
        return {pfmm::builtin_family(std::stol(cfg.family.substr(1)))};
    throw pfmm::InvalidFamily("unknown family selector: " + cfg.family);
}

std::optional<pfmm::Rational> resolve_c2(const RunConfig& cfg) {
    if (cfg.c2_str.empty()) return std::nullopt;
    pfmm::Rational c2 = pfmm::rational_from_string(cfg.c2_str);
    if (c2 == 0) throw pfmm::Error("--c2 must be nonzero");
    return c2;
}

void emit(const RunConfig& cfg, const std::string& text) {
    std::string path = cfg.output;
    if (path.empty()) {
        if (const char* dir = std::getenv("PFMM_OUTPUT_DIR"); dir && *dir)
            path = std::string(dir) + "/pfmm_output";
    }
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pfmm::Error("cannot open output path: " + path);
    out << text;
}

void error_object(const std::string& kind, const std::string& message) {
    std::cerr << pfmm::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

int cmd_derive(const RunConfig& cfg) {
    auto families = resolve_families(cfg);
    pfmm::json records = pfmm::json::array();
    std::ostringstream text;
    for (const auto& spec : families) {
        pfmm::DerivationRecord rec = pfmm::derive_family(spec);
        if (cfg.format == "json") {
            records.push_back(pfmm::to_json(rec));
        } else if (cfg.format == "tsv") {
            if (text.tellp() == 0) text << "k\tlambda\teps1\teps2\teps3\teps4\tB0\tB1\tB2\tB3\n";
            text << spec.k << "\t" << pfmm::to_string(rec.pf.lambda);
            for (const auto& e : rec.epsilons) text << "\t" << e.to_string("z");
            for (const auto& b : rec.pf.B) text << "\t" << b.to_string("z");
            text << "\n";
        } else {
            text << "family " << spec.name() << " (weights";
            for (long w : spec.weights) text << " " << w;
            text << ")\n";
            for (std::size_t i = 0; i < 4; ++i)
                text << "  eps" << i + 1 << "(z) = " << rec.epsilons[i].to_string("z") << "\n";
            for (std::size_t j = 0; j < 4; ++j)
                text << "  B" << j << "(z) = " << rec.pf.B[j].to_string("z") << "\n";
            text << "  lambda = " << pfmm::to_string(rec.pf.lambda) << "\n";
            text << "  maximally unipotent: " << (rec.unipotent ? "yes" : "no") << "\n";
        }
    }
    if (cfg.format == "json")
        emit(cfg, (families.size() == 1 ? records[0] : records).dump(2) + "\n");
    else
        emit(cfg, text.str());
    return kExitOk;
}

int cmd_curves(const RunConfig& cfg) {
    auto families = resolve_families(cfg);
    auto c2 = resolve_c2(cfg);
    pfmm::json records = pfmm::json::array();
    std::ostringstream text;
    if (cfg.format == "tsv") {
        text << "k";
        for (std::size_t j = 0; j <= cfg.depth; ++j) text << "\tn" << j;
        text << "\n";
    }
    for (const auto& spec : families) {
        pfmm::DerivationRecord rec = pfmm::derive_family(spec);
        pfmm::YukawaExpansion y = pfmm::q_expansion(spec, rec.pf, cfg.order, cfg.depth,
                                                    c2 ? &*c2 : nullptr);
        y.n = pfmm::extract_n(y.a);
        if (cfg.format == "json") {
            pfmm::json rj = pfmm::to_json(y);
            rj["family"] = spec.name();
            records.push_back(rj);
        } else if (cfg.format == "tsv") {
            text << spec.k;
            for (const auto& n : y.n) text << "\t" << pfmm::to_string(n);
            text << "\n";
        } else {
            text << "family " << spec.name() << ": c1 = " << pfmm::to_string(y.c1)
                 << ", c2 = " << pfmm::to_string(y.c2) << "\n";
            for (std::size_t j = 0; j < y.n.size(); ++j)
                text << "  n" << j << " = " << pfmm::to_string(y.n[j]) << "\n";
        }
    }
    if (cfg.format == "json")
        emit(cfg, (families.size() == 1 ? records[0] : records).dump(2) + "\n");
    else
        emit(cfg, text.str());
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    auto families = resolve_families(cfg);
    auto c2 = resolve_c2(cfg);
    std::ostringstream text;
    bool all_pass = true;
    for (const auto& spec : families) {
        auto checks = pfmm::run_verification(spec, cfg.order, cfg.depth,
                                             c2 ? &*c2 : nullptr);
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            text << spec.name() << " " << c.name << ": "
                 << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
        }
    }
    emit(cfg, text.str());
    return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picard-Fuchs derivation and mirror-map expansion for "
                 "one-parameter weighted-projective hypersurface families"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "k5|k6|k8|k10|all (default all)");
        sub->add_option("--weights", cfg.weights,
                        "explicit weights k0,k1,k2,k3,k4 (overrides --family)")
            ->delimiter(',');
        sub->add_option("--order", cfg.order, "series truncation order N (default 30)");
        sub->add_option("--depth", cfg.depth, "q-expansion depth J (default 20)");
        sub->add_option("--c2", cfg.c2_str, "override for the constant c2, as p/q");
        sub->add_option("--format", cfg.format, "json|tsv|text (default text)")
            ->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_option("--output", cfg.output,
                        "output path (default stdout, or $PFMM_OUTPUT_DIR/pfmm_output)");
    };
    CLI::App* derive = app.add_subcommand("derive", "derive epsilon table and PF operator");
    CLI::App* curves = app.add_subcommand("curves", "emit predicted curve counts n_0..n_J");
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(derive);
    add_common(curves);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    // validate configuration before touching the pipeline
    try {
        if (cfg.depth + 6 > cfg.order)
            throw pfmm::Error("depth must satisfy J <= N - 6");
        resolve_families(cfg);
        resolve_c2(cfg);
    } catch (const pfmm::InvalidFamily& e) {
        error_object("InvalidFamily", e.what());
        return kExitConfig;
    } catch (const pfmm::Error& e) {
        error_object("ConfigError", e.what());
        return kExitConfig;
    }

    try {
        if (derive->parsed()) return cmd_derive(cfg);
        if (curves->parsed()) return cmd_curves(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return kExitConfig;
    } catch (const pfmm::NonIntegralInstanton& e) {
        error_object("NonIntegralInstanton", e.what());
        return kExitVerification;
    } catch (const std::exception& e) {
        error_object("Internal", e.what());
        return kExitInternal;
    }
}
