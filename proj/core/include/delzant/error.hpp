#pragma once

#include <stdexcept>
#include <string>

namespace delzant {

// Error categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    InvalidInput,  // bad argument to an operation (zero vector, d < 3, ...)
    Structural,    // degenerate or non-convex polygon / polytope
    Validation,    // well-formed but not Delzant
    Infeasible,    // reconstruction found nothing
    Inconsistent,  // input data contradicts itself (redundant half-space, volume mismatch)
    Unsupported,   // beyond what the toolkit handles (>= 4 parallel pairs, 3D-only path)
    Budget,        // an enumeration or retry budget ran out
    Parse,         // malformed serialized input
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace delzant
