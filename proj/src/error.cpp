#include "polardrg/error.hpp"

namespace polardrg {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotAPrimePower: return "NotAPrimePower";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::OddAmbientDimension: return "OddAmbientDimension";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonIntegralArray: return "NonIntegralArray";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EvenQ: return "EvenQ";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::NotFamilyParams: return "NotFamilyParams";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace polardrg
