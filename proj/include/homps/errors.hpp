#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homps {

/// Inconsistent dimensions between structure pieces. `tensor` names the
/// offending piece when known.
class shape_error : public std::invalid_argument {
public:
    explicit shape_error(const std::string& what, std::string tensor = {})
        : std::invalid_argument(what), tensor_(std::move(tensor)) {}

    const std::string& tensor() const { return tensor_; }

private:
    std::string tensor_;
};

/// A construction was invoked on input failing its stated precondition.
/// `code` is a stable machine-readable tag, e.g. "RNotAlphaInvariant",
/// "HypothesisViolated", "InvalidModule", "NotQuasitriangular".
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Structure file could not be parsed as JSON.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Structure file parsed but does not match the schema (unknown version,
/// missing or ill-typed field).
class schema_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested grid enumeration exceeds the configured cap.
class grid_capacity_error : public std::runtime_error {
public:
    grid_capacity_error(std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error("grid of " + std::to_string(requested) +
                             " points exceeds cap of " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::uint64_t requested() const { return requested_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

} // namespace homps
