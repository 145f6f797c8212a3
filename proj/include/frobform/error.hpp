#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobform {

enum class ErrorCode {
    ZeroArgument,
    NotPrime,
    FieldMismatch,
    FactorBoundExceeded,
    ParseError,
    NonSquare,
    DimensionMismatch,
    Singular,
    NotAssociative,
    BadUnit,
    BadRadical,
    AlgebraMismatch,
    CharTooSmall,
    Degenerate,
    NotAUnit,
    NotAnAutomorphism,
    Incomplete,
    BadCharacteristic,
    NotLocal,
    NotFixed,
    NoRootInResidueField,
    OrderBoundExceeded,
    NotCentral,
    NotSymmetric,
    BadResidue,
    NotATwist,
    InfiniteOrder,
    ZeroParameter,
    DegenerateParameters,
    NotAGroup,
    SyntaxError,
    UnknownBasisName,
    UnknownFunctional,
    Internal,
};

std::string_view error_code_name(ErrorCode code);

/// Precondition or input failure raised by library operations.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// A postcondition the library asserts on its own output did not hold.
class InternalError : public Error {
  public:
    explicit InternalError(const std::string &what)
        : Error(ErrorCode::Internal, what) {}
};

inline void ensure(bool condition, const char *what) {
    if (!condition)
        throw InternalError(what);
}

} // namespace frobform
