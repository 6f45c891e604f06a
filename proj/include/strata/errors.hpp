#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Raised while reading a fixture file. `where` is a dotted path into the
// document ("edges[0].kappa") so the CLI can point at the offending field.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// Precondition violations on otherwise well-formed data: a level outside the
// graph's range, a vector outside the filtration an operation is defined on,
// a missing boundary-class declaration, mismatched dimensions, and so on.
// Mathematical *findings* (an invalid graph, a basis failing its rules) are
// never thrown; they travel in ValidationReport.
class DomainError : public std::runtime_error {
public:
    enum class Code {
        LevelOutOfRange,
        NotInLevelFiltration,
        NotInVerticalFiltration,
        MissingBoundaryCoordinates,
        UnknownGenerator,
        DimensionMismatch,
        BadWeight,
        BrokenInvariant,
    };

    DomainError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

} // namespace strata
