#include "uqd/error.hpp"

namespace uqd {

std::string_view to_string(ValidationKind kind) {
    switch (kind) {
        case ValidationKind::NegativeProbability: return "NegativeProbability";
        case ValidationKind::SumNotOne: return "SumNotOne";
        case ValidationKind::DimensionMismatch: return "DimensionMismatch";
        case ValidationKind::EmptyEnsemble: return "EmptyEnsemble";
        case ValidationKind::InvalidParameter: return "InvalidParameter";
    }
    return "Unknown";
}

ValidationError::ValidationError(ValidationKind kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

namespace {
std::string with_line(const std::string& detail, std::optional<std::size_t> line) {
    if (!line) return detail;
    return "line " + std::to_string(*line) + ": " + detail;
}
}  // namespace

ParseError::ParseError(const std::string& detail, std::optional<std::size_t> line)
    : Error(with_line(detail, line)), line_(line) {}

}  // namespace uqd
