#ifndef MTT_ERRORS_HPP
#define MTT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtt {

/// Malformed or out-of-contract input (bad file, bad argument, violated precondition).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or schema error in an input file. `line` is 0 when unknown.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : InputError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

/// A configured resource guard (enumeration cap, expansion scale, cut cap) was hit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InfeasibleModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundedModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mtt

#endif  // MTT_ERRORS_HPP
