#pragma once

#include <json.hpp>

#include "pfmm/mirror.hpp"

namespace pfmm {

using nlohmann::json;

inline json to_json(const UniPoly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        arr.push_back(to_string(p.coeff(static_cast<std::size_t>(i))));
    return arr;
}

inline json to_json(const RatFunc& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline UniPoly unipoly_from_json(const json& arr) {
    std::vector<Rational> c;
    for (const auto& s : arr) c.push_back(rational_from_string(s.get<std::string>()));
    return UniPoly(std::move(c));
}

inline RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(unipoly_from_json(j.at("num")), unipoly_from_json(j.at("den")));
}

// The output of the derivation pipeline for one family: the eps coefficients,
// logarithmic-form B_j, and the singular point lambda.
struct DerivationRecord {
    FamilySpec spec;
    std::array<RatFunc, 4> epsilons;  // functions of z
    PFOperator pf;
    bool unipotent = false;
};

inline DerivationRecord derive_family(const FamilySpec& spec) {
    DerivationRecord rec;
    rec.spec = spec;
    rec.epsilons = derive_epsilons(spec);
    rec.pf = assemble_pf(spec, rec.epsilons);
    rec.unipotent = check_max_unipotent(rec.pf);
    return rec;
}

inline json to_json(const DerivationRecord& rec) {
    json eps = json::array(), b = json::array(), eps_text = json::array(),
         b_text = json::array();
    for (const auto& e : rec.epsilons) {
        eps.push_back(to_json(e));
        eps_text.push_back(e.to_string("z"));
    }
    for (const auto& bj : rec.pf.B) {
        b.push_back(to_json(bj));
        b_text.push_back(bj.to_string("z"));
    }
    json weights = json::array();
    for (long w : rec.spec.weights) weights.push_back(w);
    return json{{"family", rec.spec.name()},
                {"k", rec.spec.k},
                {"weights", weights},
                {"epsilons", eps},
                {"epsilons_text", eps_text},
                {"B", b},
                {"B_text", b_text},
                {"lambda", to_string(rec.pf.lambda)},
                {"unipotent", rec.unipotent}};
}

inline json to_json(const YukawaExpansion& y) {
    json a = json::array(), n = json::array();
    for (const auto& v : y.a) a.push_back(to_string(v));
    for (const auto& v : y.n) n.push_back(to_string(v));
    return json{{"c1", to_string(y.c1)}, {"c2", to_string(y.c2)}, {"a", a}, {"n", n}};
}

}  // namespace pfmm
