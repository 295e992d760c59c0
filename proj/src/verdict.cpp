#include "ss/verdict.hpp"

namespace ss {

const char* method_name(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::NaiveCoeff: return "naive_coeff";
        case Method::MonteCarlo: return "monte_carlo";
        case Method::SzPit: return "sz_pit";
        case Method::SchoofLike: return "schoof_like";
        case Method::HighOrder: return "high_order";
        case Method::IsoGr: return "isogr";
    }
    return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
    for (Method m : {Method::Oracle, Method::NaiveCoeff, Method::MonteCarlo, Method::SzPit,
                     Method::SchoofLike, Method::HighOrder, Method::IsoGr})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

std::string ErrorBound::str() const {
    if (conjectural) return "conjectural";
    if (num == 0) return "0";
    return num.get_str() + "/" + den.get_str();
}

nlohmann::json Verdict::to_json(bool with_time) const {
    nlohmann::json j;
    j["method"] = method_name(method);
    j["result"] = outcome_name(result);
    j["error_bound"] = error_bound.str();
    j["certificate"] = certificate;
    j["field_op_count"] = field_op_count;
    j["wall_time_ns"] = with_time ? wall_time_ns : 0;
    return j;
}

}  // namespace ss
