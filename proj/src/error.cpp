#include "kitaev/error.hpp"

namespace kitaev {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::NoHaarIntegral: return "NoHaarIntegral";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::NotCocycle: return "NotCocycle";
        case ErrorKind::DegenerateTraceForm: return "DegenerateTraceForm";
        case ErrorKind::PropertyCheckFailed: return "PropertyCheckFailed";
        case ErrorKind::Mismatch: return "Mismatch";
        case ErrorKind::HopfMismatch: return "HopfMismatch";
        case ErrorKind::AssociativityFailure: return "AssociativityFailure";
        case ErrorKind::UnlabeledCell: return "UnlabeledCell";
        case ErrorKind::NoCharacter: return "NoCharacter";
        case ErrorKind::MalformedRotation: return "MalformedRotation";
        case ErrorKind::NotIncident: return "NotIncident";
        case ErrorKind::DimensionGuardExceeded: return "DimensionGuardExceeded";
        case ErrorKind::InvalidLabeling: return "InvalidLabeling";
        case ErrorKind::NotASite: return "NotASite";
        case ErrorKind::NonIntegerTrace: return "NonIntegerTrace";
        case ErrorKind::ModuleInvalid: return "ModuleInvalid";
        case ErrorKind::NotAModule: return "NotAModule";
        case ErrorKind::InputError: return "InputError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace kitaev
