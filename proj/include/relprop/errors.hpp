#ifndef RELPROP_ERRORS_HPP
#define RELPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relprop {

/// Syntax error in a facts, bias, query, features or model file.
/// Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what_arg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what_arg),
          line_(line),
          column_(column),
          detail_(what_arg) {}

    int line() const { return line_; }
    int column() const { return column_; }
    /// The message without the position prefix.
    const std::string& detail() const { return detail_; }

private:
    int line_;
    int column_;
    std::string detail_;
};

/// Invalid configuration (thresholds, fold counts, iteration counts, flags).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Well-formed input that violates a semantic requirement of the data
/// (unknown example id, missing class, degenerate estimate at alpha=0, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace relprop

#endif
