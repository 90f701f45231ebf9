#include "bfa/serialize.hpp"

namespace bfa {

nlohmann::ordered_json census_to_json(const CensusReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["B"] = r.bent_count;
    j["N"] = r.nonbent_count;
    j["sum_linear"] = r.sum_linear;
    if (r.t) j["t"] = *r.t;
    else j["t"] = nullptr;
    j["spectrum"] = r.spectrum;
    j["uniformity"] = r.uniformity;
    nlohmann::ordered_json components = nlohmann::ordered_json::array();
    for (const ComponentInfo& c : r.per_component) {
        nlohmann::ordered_json jc;
        jc["lambda"] = c.lambda;
        jc["dimV"] = c.dim_v;
        jc["class"] = to_string(c.cls);
        jc["maxAbsW"] = c.max_abs_w;
        components.push_back(std::move(jc));
    }
    j["per_component"] = std::move(components);
    return j;
}

std::string census_to_csv(const CensusReport& r) {
    std::string out = "lambda,dimV,class,maxAbsW\n";
    for (const ComponentInfo& c : r.per_component) {
        out += std::to_string(c.lambda);
        out += ',';
        out += std::to_string(c.dim_v);
        out += ',';
        out += to_string(c.cls);
        out += ',';
        out += std::to_string(c.max_abs_w);
        out += '\n';
    }
    return out;
}

}  // namespace bfa
