#pragma once

#include <stdexcept>
#include <string>

namespace pgeom {

// Failure kinds surfaced by the kernel. Each belongs to a coarse category
// that the CLI maps to a distinct exit code.
enum class Err {
    Parse,
    ZeroVector,
    ImproperPoint,
    IdenticalPoints,
    IdenticalLines,
    SingularMatrix,
    DegenerateFrame,
    NotDistinct,
    NotCollinear,
    NoImage,
    CenterInput,
    CenterOnPlane,
    DirectionParallel,
    EmptyScene,
    InvalidScene,
    Verification,
};

enum class ErrCategory { Parse, Precondition, Verification };

constexpr ErrCategory category(Err kind) {
    switch (kind) {
        case Err::Parse: return ErrCategory::Parse;
        case Err::Verification: return ErrCategory::Verification;
        default: return ErrCategory::Precondition;
    }
}

constexpr const char* err_name(Err kind) {
    switch (kind) {
        case Err::Parse: return "Parse";
        case Err::ZeroVector: return "ZeroVector";
        case Err::ImproperPoint: return "ImproperPoint";
        case Err::IdenticalPoints: return "IdenticalPoints";
        case Err::IdenticalLines: return "IdenticalLines";
        case Err::SingularMatrix: return "SingularMatrix";
        case Err::DegenerateFrame: return "DegenerateFrame";
        case Err::NotDistinct: return "NotDistinct";
        case Err::NotCollinear: return "NotCollinear";
        case Err::NoImage: return "NoImage";
        case Err::CenterInput: return "CenterInput";
        case Err::CenterOnPlane: return "CenterOnPlane";
        case Err::DirectionParallel: return "DirectionParallel";
        case Err::EmptyScene: return "EmptyScene";
        case Err::InvalidScene: return "InvalidScene";
        case Err::Verification: return "Verification";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& message)
        : std::runtime_error(std::string(err_name(kind)) + ": " + message), kind_(kind) {}

    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace pgeom
