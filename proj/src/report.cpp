#include "polardrg/report.hpp"

namespace polardrg {

nlohmann::json to_json(const Rational& r)
{
    return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Rational rational_from_json(const nlohmann::json& j)
{
    try {
        return frac(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    } catch (const std::runtime_error& ex) {
        if (dynamic_cast<const Error*>(&ex))
            throw;
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

nlohmann::json to_json(const ClassicalParams& p)
{
    return {{"d", p.d}, {"b", p.b.str()}, {"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}};
}

ClassicalParams params_from_json(const nlohmann::json& j)
{
    try {
        const auto& b = j.at("b");
        Integer bv = b.is_string() ? Integer(b.get<std::string>()) : Integer(b.get<std::int64_t>());
        return ClassicalParams::make(j.at("d").get<int>(), bv, rational_from_json(j.at("alpha")),
                                     rational_from_json(j.at("beta")));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::ParseError, ex.what());
    }
}

nlohmann::json to_json(const Counterexample& c)
{
    return {{"v", c.v},
            {"w", c.w},
            {"distance", c.distance},
            {"which", std::string(1, c.which)},
            {"found", c.found},
            {"expected", c.expected}};
}

nlohmann::json to_json(const Verdict& v)
{
    nlohmann::json j = {{"verdict", v.tag()}, {"trace", v.trace}};
    switch (v.kind) {
    case VerdictKind::DualPolarHermitian:
    case VerdictKind::HermitianForms:
        j["q"] = v.q;
        break;
    case VerdictKind::Case3:
        j["q"] = v.q;
        j["d"] = v.d;
        break;
    case VerdictKind::TianSporadic:
        j["name"] = v.name;
        break;
    case VerdictKind::HypothesesNotMet:
        j["failed"] = v.failed;
        break;
    default:
        break;
    }
    return j;
}

ExitCode exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotAPrimePower:
    case ErrorCode::TooLarge:
        return ExitCode::Field;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::RankOutOfRange:
    case ErrorCode::OddAmbientDimension:
    case ErrorCode::EmptySet:
    case ErrorCode::InvalidParams:
    case ErrorCode::TOutOfRange:
    case ErrorCode::NotFamilyParams:
        return ExitCode::InvalidInput;
    case ErrorCode::Disconnected:
        return ExitCode::Disconnected;
    case ErrorCode::NonIntegralArray:
    case ErrorCode::NonPositiveEntry:
        return ExitCode::InfeasibleArray;
    case ErrorCode::EvenQ:
        return ExitCode::EvenQ;
    case ErrorCode::VerificationFailed:
        return ExitCode::Negative;
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
        return ExitCode::Io;
    case ErrorCode::PreconditionFailed:
        return ExitCode::InvalidInput;
    }
    return ExitCode::Internal;
}

} // namespace polardrg
