#ifndef DAGCENT_ERRORS_HPP_
#define DAGCENT_ERRORS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dagcent {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph violates a structural invariant (self-loop, cycle, duplicate id, unknown endpoint).
class ValidationError : public Error {
public:
    using Error::Error;
};

class InvalidIdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SelfLoopError : public ValidationError {
public:
    SelfLoopError(std::string node, std::optional<std::size_t> line = std::nullopt)
        : ValidationError(describe(node, line)), node_(std::move(node)), line_(line) {}

    const std::string& node() const noexcept { return node_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    static std::string describe(const std::string& node, std::optional<std::size_t> line) {
        std::string msg = "self-loop on node '" + node + "'";
        if (line) msg += " at line " + std::to_string(*line);
        return msg;
    }

    std::string node_;
    std::optional<std::size_t> line_;
};

class CycleError : public ValidationError {
public:
    /// `witness` lists the cycle's nodes with the first node repeated at the end.
    explicit CycleError(std::vector<std::string> witness)
        : ValidationError(describe(witness)), witness_(std::move(witness)) {}

    const std::vector<std::string>& witness() const noexcept { return witness_; }

private:
    static std::string describe(const std::vector<std::string>& witness) {
        std::string msg = "cycle detected: ";
        for (std::size_t k = 0; k < witness.size(); ++k) {
            if (k) msg += " -> ";
            msg += witness[k];
        }
        return msg;
    }

    std::vector<std::string> witness_;
};

class DuplicateIdError : public ValidationError {
public:
    explicit DuplicateIdError(const std::string& node)
        : ValidationError("duplicate node id '" + node + "'") {}
};

class UnknownNodeError : public ValidationError {
public:
    explicit UnknownNodeError(const std::string& node)
        : ValidationError("unknown node '" + node + "'"), node_(node) {}

    const std::string& node() const noexcept { return node_; }

private:
    std::string node_;
};

/// Malformed input text. `line` is 1-based for line-oriented formats, `offset` a byte offset otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::optional<std::size_t> line = std::nullopt,
               std::optional<std::size_t> offset = std::nullopt)
        : Error(describe(what, line, offset)), line_(line), offset_(offset) {}

    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    static std::string describe(const std::string& what, std::optional<std::size_t> line,
                                std::optional<std::size_t> offset) {
        std::string msg = "parse error";
        if (line) msg += " at line " + std::to_string(*line);
        if (offset) msg += " at byte " + std::to_string(*offset);
        return msg + ": " + what;
    }

    std::optional<std::size_t> line_;
    std::optional<std::size_t> offset_;
};

/// Bad argument to a numerical routine.
class DomainError : public Error {
public:
    using Error::Error;
};

class ZeroExponentError : public DomainError {
public:
    ZeroExponentError() : DomainError("exponent h must be nonzero") {}
};

class EmptyInputError : public DomainError {
public:
    EmptyInputError() : DomainError("mean of an empty multiset") {}
};

class EmptyGraphError : public DomainError {
public:
    EmptyGraphError() : DomainError("graph has no nodes") {}
};

class EmptyMaskError : public DomainError {
public:
    EmptyMaskError() : DomainError("selection mask is empty") {}
};

class InvalidDegreeError : public DomainError {
public:
    explicit InvalidDegreeError(long long n)
        : DomainError("generation degree must be >= 1, got " + std::to_string(n)) {}
};

class TooLargeError : public DomainError {
public:
    TooLargeError(std::size_t size, std::size_t limit)
        : DomainError("graph has " + std::to_string(size) + " nodes; oracle limit is " +
                      std::to_string(limit)) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& pid)
        : Error("person '" + pid + "' not found"), pid_(pid) {}

    const std::string& pid() const noexcept { return pid_; }

private:
    std::string pid_;
};

class NetworkError : public Error {
public:
    using Error::Error;
};

/// Receives non-fatal diagnostics. An empty sink discards them.
using WarningSink = std::function<void(const std::string&)>;

inline void warn(const WarningSink& sink, const std::string& message) {
    if (sink) sink(message);
}

}  // namespace dagcent

#endif  // DAGCENT_ERRORS_HPP_
