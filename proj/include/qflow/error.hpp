#pragma once

#include <stdexcept>
#include <string>

namespace qflow {

enum class ErrorCode {
    ZeroVector,
    AnchorsNotCollinear,
    AnchorsCoincide,
    NotOnChart,
    InvalidInput,
    OnQuadric,
    OnCubic,
    Degenerate,
    Indeterminate,
    NotOnQuadric,
    RankZero,
    UnknownName,
    UnknownDescriptor,
    BadIndices,
    SingularTau,
    DegenerateK,
    SingularHessian,
    OnQuadricK,
    DegenerateReduction,
    RegularizationFailed,
    NoConvergence,
    PlaneNotInvariant,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace qflow
