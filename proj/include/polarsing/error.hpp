#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarsing {

enum class ErrorCode {
    // arena
    DuplicateOrigin,
    MissingOrigin,
    UnknownParent,
    IllegalProximity,
    SelfReference,
    DuplicateSatellite,
    DuplicateId,
    UnknownPoint,
    // clusters
    WrongKind,
    NonPositiveMultiplicity,
    PointNotInCluster,
    ArenaMismatch,
    NotDownwardClosed,
    InvalidWeight,
    InconsistentCluster,
    // ordering
    OriginHasNoSatellite,
    SecondSatelliteOfFreePoint,
    EmptySet,
    NotComparable,
    NotUnibranch,
    // recovery
    NotDicritical,
    NoQualifyingPair,
    WalkDiverged,
    EmptyRuptureSet,
    NonIntegralValue,
    ShortcutAssertionFailed,
    InconsistentResult,
    // oracle
    NegativeResidual,
    InvalidCurve,
    // documents
    SyntaxError,
    ValidationError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace polarsing
