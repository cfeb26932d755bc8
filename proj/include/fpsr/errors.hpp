#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fpsr {

enum class ErrorKind {
    parse,
    hypothesis_violation,
    resonance,
    insufficient_precision,
    internal_consistency,
    prefix_inconsistent,
    no_formal_solution,
    numeric_failure,
    insufficient_data,
    invalid_argument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `index()` carries the coefficient or
/// operator index the failure is about, when there is one (the free index of a
/// resonance, the offending a_i of a failed Fuchsian test, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<long> index = std::nullopt)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<long> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<long> index_;
};

enum class ParseErrorCode {
    syntax,
    unknown_identifier,
    bad_exponent,
    order_mismatch,
    missing_key,
    invalid_value,
};

/// Parse failures keep the 1-based position of the offending token.
class ParseError : public Error {
public:
    ParseError(ParseErrorCode code, const std::string& message, int line, int column,
               std::string token)
        : Error(ErrorKind::parse, format(message, line, column, token)),
          code_(code), line_(line), column_(column), token_(std::move(token)) {}

    ParseErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::string& token) {
        std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!token.empty()) out += " near '" + token + "'";
        return out;
    }

    ParseErrorCode code_;
    int line_;
    int column_;
    std::string token_;
};

}  // namespace fpsr
