#pragma once

#include "polardrg/classical_params.hpp"
#include "polardrg/classification.hpp"
#include "polardrg/error.hpp"
#include "polardrg/graph.hpp"

#include "json.hpp"

#include <string>

namespace polardrg {

inline constexpr const char* version_string = "0.1.0";

/// {"num": "...", "den": "..."} with decimal strings.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

/// {"d", "b", "alpha": {num, den}, "beta": {num, den}}
nlohmann::json to_json(const ClassicalParams& p);
ClassicalParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const Verdict& v);

/// Process exit codes; see the README table.
enum class ExitCode : int {
    Ok = 0,
    Usage = 1,
    InvalidInput = 2,
    Field = 3,
    Io = 4,
    Disconnected = 5,
    Negative = 6,
    EvenQ = 7,
    InfeasibleArray = 8,
    Budget = 9,
    Internal = 10,
};

ExitCode exit_code_for(ErrorCode code);

} // namespace polardrg
