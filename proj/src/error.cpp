#include "momentlab/error.hpp"

namespace momentlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
        case ErrorKind::CompositionConstantTerm: return "CompositionConstantTerm";
        case ErrorKind::NotReversible: return "NotReversible";
        case ErrorKind::BadConstantTerm: return "BadConstantTerm";
        case ErrorKind::SchemeMismatch: return "SchemeMismatch";
        case ErrorKind::IndexBeyondPrefix: return "IndexBeyondPrefix";
        case ErrorKind::SingularHankel: return "SingularHankel";
        case ErrorKind::NotExactlyDivisible: return "NotExactlyDivisible";
        case ErrorKind::InsufficientDepth: return "InsufficientDepth";
        case ErrorKind::InsufficientMoments: return "InsufficientMoments";
        case ErrorKind::BadOrder: return "BadOrder";
        case ErrorKind::ExplosionGuard: return "ExplosionGuard";
        case ErrorKind::InvalidPath: return "InvalidPath";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

MathError::MathError(ErrorKind kind, std::string message, std::optional<long> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), index_(index) {}

}  // namespace momentlab
