#ifndef PERMPOLY_REPORT_HPP
#define PERMPOLY_REPORT_HPP

// Result records for the CLI: one row per checked tuple, with stable JSON
// and CSV encodings. CSV carries the fixed column set
// (q,p,n,r,v,k,t,s,d,e,verdict,path); JSON additionally carries the
// conditions list and the optional fields, all present (null when unset).

#include <json.hpp>

#include "permpoly/theta_atlas.hpp"

namespace permpoly {

struct ResultRecord {
    u64 q = 0, p = 0;
    unsigned n = 1;
    u64 r = 0, v = 0, k = 0, t = 0;
    u64 s = 0, d = 0, e = 0;
    bool verdict = false;
    DecisionPath path = DecisionPath::kGeneralProp;
    std::vector<ConditionResult> conditions;
    std::optional<bool> star_holds;
    std::optional<int> epsilon;
    std::optional<std::string> matched_psi_family;
    std::optional<bool> oracle_verdict;
};

inline ResultRecord make_record(const Field& field, const FamilyParams& params,
                                const DerivedParams& derived, const CriterionReport& report) {
    ResultRecord rec;
    rec.q = field.order();
    rec.p = field.p();
    rec.n = field.degree();
    rec.r = params.r;
    rec.v = params.v;
    rec.k = params.k;
    rec.t = params.t;
    rec.s = derived.s;
    rec.d = derived.d;
    rec.e = derived.e;
    rec.verdict = report.verdict;
    rec.path = report.path;
    rec.conditions = report.conditions;
    rec.star_holds = report.star_holds;
    rec.epsilon = report.epsilon;
    rec.matched_psi_family = report.matched_psi_family;
    rec.oracle_verdict = report.oracle_verdict;
    return rec;
}

inline const char* csv_header() { return "q,p,n,r,v,k,t,s,d,e,verdict,path"; }

inline std::string to_csv(const ResultRecord& rec) {
    std::string out;
    out += std::to_string(rec.q) + ',' + std::to_string(rec.p) + ',' + std::to_string(rec.n) + ',';
    out += std::to_string(rec.r) + ',' + std::to_string(rec.v) + ',' + std::to_string(rec.k) +
           ',' + std::to_string(rec.t) + ',';
    out += std::to_string(rec.s) + ',' + std::to_string(rec.d) + ',' + std::to_string(rec.e) + ',';
    out += rec.verdict ? "true" : "false";
    out += ',';
    out += to_string(rec.path);
    return out;
}

inline nlohmann::json to_json(const ResultRecord& rec) {
    nlohmann::json j;
    j["q"] = rec.q;
    j["p"] = rec.p;
    j["n"] = rec.n;
    j["r"] = rec.r;
    j["v"] = rec.v;
    j["k"] = rec.k;
    j["t"] = rec.t;
    j["s"] = rec.s;
    j["d"] = rec.d;
    j["e"] = rec.e;
    j["verdict"] = rec.verdict;
    j["path"] = to_string(rec.path);
    nlohmann::json conds = nlohmann::json::array();
    for (const ConditionResult& c : rec.conditions) conds.push_back({c.id, c.ok});
    j["conditions"] = conds;
    j["star_holds"] = rec.star_holds ? nlohmann::json(*rec.star_holds) : nlohmann::json();
    j["epsilon"] = rec.epsilon ? nlohmann::json(*rec.epsilon) : nlohmann::json();
    j["family"] =
        rec.matched_psi_family ? nlohmann::json(*rec.matched_psi_family) : nlohmann::json();
    j["oracle_verdict"] = rec.oracle_verdict ? nlohmann::json(*rec.oracle_verdict) : nlohmann::json();
    return j;
}

// "3x + 2x^2" style rendering of a theta map's coefficient vector.
inline std::string theta_poly_string(const ThetaMap& theta) {
    std::string out;
    for (std::size_t i = 0; i < theta.coeffs.size(); ++i) {
        if (theta.coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(theta.coeffs[i]);
        out += "x";
        if (i > 0) out += "^" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

inline nlohmann::json atlas_to_json(const ThetaAtlas& atlas) {
    nlohmann::json j;
    j["d"] = atlas.d;
    j["count"] = atlas.valid.size();
    j["class_count"] = atlas.classes.size();
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : atlas.classes) {
        nlohmann::json entry;
        entry["representative"] = cls.representative.coeffs;
        nlohmann::json orbit = nlohmann::json::array();
        for (const ThetaMap& theta : cls.orbit) orbit.push_back(theta.coeffs);
        entry["orbit"] = orbit;
        classes.push_back(std::move(entry));
    }
    j["classes"] = classes;
    return j;
}

}  // namespace permpoly

#endif  // PERMPOLY_REPORT_HPP
