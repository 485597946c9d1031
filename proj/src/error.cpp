#include "polarsing/error.hpp"

#include "polarsing/numeric.hpp"

namespace polarsing {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateOrigin: return "DuplicateOrigin";
        case ErrorCode::MissingOrigin: return "MissingOrigin";
        case ErrorCode::UnknownParent: return "UnknownParent";
        case ErrorCode::IllegalProximity: return "IllegalProximity";
        case ErrorCode::SelfReference: return "SelfReference";
        case ErrorCode::DuplicateSatellite: return "DuplicateSatellite";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::UnknownPoint: return "UnknownPoint";
        case ErrorCode::WrongKind: return "WrongKind";
        case ErrorCode::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
        case ErrorCode::PointNotInCluster: return "PointNotInCluster";
        case ErrorCode::ArenaMismatch: return "ArenaMismatch";
        case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
        case ErrorCode::InvalidWeight: return "InvalidWeight";
        case ErrorCode::InconsistentCluster: return "InconsistentCluster";
        case ErrorCode::OriginHasNoSatellite: return "OriginHasNoSatellite";
        case ErrorCode::SecondSatelliteOfFreePoint: return "SecondSatelliteOfFreePoint";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotComparable: return "NotComparable";
        case ErrorCode::NotUnibranch: return "NotUnibranch";
        case ErrorCode::NotDicritical: return "NotDicritical";
        case ErrorCode::NoQualifyingPair: return "NoQualifyingPair";
        case ErrorCode::WalkDiverged: return "WalkDiverged";
        case ErrorCode::EmptyRuptureSet: return "EmptyRuptureSet";
        case ErrorCode::NonIntegralValue: return "NonIntegralValue";
        case ErrorCode::ShortcutAssertionFailed: return "ShortcutAssertionFailed";
        case ErrorCode::InconsistentResult: return "InconsistentResult";
        case ErrorCode::NegativeResidual: return "NegativeResidual";
        case ErrorCode::InvalidCurve: return "InvalidCurve";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

std::string format_rational(const Rational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in " + text);
    return make_rational(BigInt(text.substr(0, slash)), den);
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;  // truncates toward zero
    BigInt r = num % den;
    if (r != 0 && ((r > 0) == (den > 0))) ++q;
    return q;
}

}  // namespace polarsing
