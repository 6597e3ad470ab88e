#pragma once

#include <stdexcept>
#include <string>

namespace targetsim {

/// Error families, numbered to match process exit codes.
enum class ErrorKind {
    usage = 2,      // bad invocation or malformed request
    data = 3,       // malformed or inconsistent input data
    infeasible = 4, // reconstruction has no solution under the constraints
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    /// Short stable slug for machine consumption, e.g. "journal-bad-amount".
    const std::string& code() const { return code_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error usage_error(std::string code, const std::string& message) {
    return Error(ErrorKind::usage, std::move(code), message);
}
inline Error data_error(std::string code, const std::string& message) {
    return Error(ErrorKind::data, std::move(code), message);
}
inline Error infeasible_error(std::string code, const std::string& message) {
    return Error(ErrorKind::infeasible, std::move(code), message);
}

} // namespace targetsim
