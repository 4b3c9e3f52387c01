#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace momentlab {

enum class ErrorKind {
    NonInvertibleConstantTerm,
    CompositionConstantTerm,
    NotReversible,
    BadConstantTerm,
    SchemeMismatch,
    IndexBeyondPrefix,
    SingularHankel,
    NotExactlyDivisible,
    InsufficientDepth,
    InsufficientMoments,
    BadOrder,
    ExplosionGuard,
    InvalidPath,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every mathematical failure in the library is reported through this type.
/// `index()` carries the offending index where one exists (e.g. k in SingularHankel(k)).
class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, std::string message, std::optional<long> index = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<long> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<long> index_;
};

}  // namespace momentlab
