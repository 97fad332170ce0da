#pragma once

#include <stdexcept>
#include <string>

namespace mha {

enum class ErrorKind {
    DomainMismatch,
    PositionOutOfRange,
    UncoveredLeg,
    NotFound,
    InfiniteDimensionalNoOracle,
    Undecidable,
    Singular,
    InfiniteDimensional,
    NotUnitalHomomorphism,
    NotHopf,
    UnverifiedAction,
    CommutationFailed,
    NotInner,
    CocycleInvalid,
    NotFiniteDimensional,
    AlgebraMismatch,
    CoactionInvalid,
    UnknownInstance,
    MalformedSpec,
};

inline const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::UncoveredLeg: return "UncoveredLeg";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::InfiniteDimensionalNoOracle: return "InfiniteDimensionalNoOracle";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::NotUnitalHomomorphism: return "NotUnitalHomomorphism";
    case ErrorKind::NotHopf: return "NotHopf";
    case ErrorKind::UnverifiedAction: return "UnverifiedAction";
    case ErrorKind::CommutationFailed: return "CommutationFailed";
    case ErrorKind::NotInner: return "NotInner";
    case ErrorKind::CocycleInvalid: return "CocycleInvalid";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::CoactionInvalid: return "CoactionInvalid";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mha
