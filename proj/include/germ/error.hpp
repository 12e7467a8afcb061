#ifndef GERM_ERROR_HPP
#define GERM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace germ {

// Base class of everything the engine throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Operands belong to different coefficient fields.
class MixedFieldError : public Error {
public:
    MixedFieldError() : Error("operands belong to different fields") {}
};

// Operands belong to different ring contexts.
class ContextMismatchError : public Error {
public:
    ContextMismatchError() : Error("operands belong to different ring contexts") {}
};

// A computation left the truncation range m^{cap+1}.
class DegreeCapError : public Error {
public:
    explicit DegreeCapError(const std::string& what) : Error(what) {}
};

class ZeroPolynomialError : public Error {
public:
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

// A determinacy operation was asked for a germ with ord(f) < 2.
class OrderTooSmallError : public Error {
public:
    explicit OrderTooSmallError(const std::string& what) : Error(what) {}
};

class InfiniteColengthError : public Error {
public:
    explicit InfiniteColengthError(const std::string& what) : Error(what) {}
};

// A theorem hypothesis fails, so the requested quantity is undefined.
class NotApplicableError : public Error {
public:
    explicit NotApplicableError(const std::string& what) : Error(what) {}
};

enum class DiagnosticKind { Syntax, UnknownVariable, BadCoefficient };

// Positioned parse diagnostic. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, DiagnosticKind kind, const std::string& message)
        : Error(format(line, column, message)),
          line_(line), column_(column), kind_(kind), message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    DiagnosticKind kind() const { return kind_; }
    const std::string& message() const { return message_; }

private:
    static std::string format(int line, int column, const std::string& message) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    int line_;
    int column_;
    DiagnosticKind kind_;
    std::string message_;
};

} // namespace germ

#endif
