#pragma once

#include <stdexcept>
#include <string>

namespace kitaev {

enum class ErrorKind {
    NonSquare,
    DimensionMismatch,
    NotAGroup,
    NoHaarIntegral,
    NotSubgroup,
    NotCocycle,
    DegenerateTraceForm,
    PropertyCheckFailed,
    Mismatch,
    HopfMismatch,
    AssociativityFailure,
    UnlabeledCell,
    NoCharacter,
    MalformedRotation,
    NotIncident,
    DimensionGuardExceeded,
    InvalidLabeling,
    NotASite,
    NonIntegerTrace,
    ModuleInvalid,
    NotAModule,
    InputError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace kitaev
