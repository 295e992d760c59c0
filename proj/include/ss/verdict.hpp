#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "ss/nat.hpp"

namespace ss {

enum class Method { Oracle, NaiveCoeff, MonteCarlo, SzPit, SchoofLike, HighOrder, IsoGr };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

enum class Outcome { Supersingular, Ordinary };

inline const char* outcome_name(Outcome o) {
    return o == Outcome::Supersingular ? "supersingular" : "ordinary";
}

// One-sided failure probability as an exact rational; 0/1 for deterministic
// methods. The conjectural flag marks verdicts that lean on an unproven
// order bound and therefore carry no proven probability at all.
struct ErrorBound {
    Nat num = 0;
    Nat den = 1;
    bool conjectural = false;

    static ErrorBound exact() { return {}; }
    static ErrorBound ratio(Nat n, Nat d) { return {std::move(n), std::move(d), false}; }

    std::string str() const;
};

struct Verdict {
    Method method = Method::Oracle;
    Outcome result = Outcome::Ordinary;
    ErrorBound error_bound;
    nlohmann::json certificate;
    std::uint64_t field_op_count = 0;
    std::uint64_t wall_time_ns = 0;

    bool supersingular() const { return result == Outcome::Supersingular; }

    nlohmann::json to_json(bool with_time = true) const;
};

}  // namespace ss
