#pragma once

#include <stdexcept>
#include <string>

namespace hopcolor {

// Error categories map to CLI exit codes and the machine-readable
// `error: category=<c>` line printed on failure.
enum class ErrorCategory {
    invalid_input,  // bad arguments, malformed files, violated preconditions
    io,             // file system failures
    infeasible,     // a requested computation cannot make progress
    internal,       // invariant violation inside the library
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

    static Error invalid(const std::string& msg) { return Error(ErrorCategory::invalid_input, msg); }
    static Error io(const std::string& msg) { return Error(ErrorCategory::io, msg); }
    static Error infeasible(const std::string& msg) { return Error(ErrorCategory::infeasible, msg); }
    static Error internal(const std::string& msg) { return Error(ErrorCategory::internal, msg); }

  private:
    ErrorCategory category_;
};

inline const char* to_string(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::invalid_input: return "invalid_input";
        case ErrorCategory::io: return "io";
        case ErrorCategory::infeasible: return "infeasible";
        case ErrorCategory::internal: return "internal";
    }
    return "internal";
}

}  // namespace hopcolor
