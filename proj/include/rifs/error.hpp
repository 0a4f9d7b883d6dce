#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rifs {

enum class ErrorCode {
    invalid_argument,
    domain,
    dp_violation,
    divergent,
    non_convergence,
    quadrature_cap,
    hypothesis_failed,
    schema,
    parse,
    io,
};

constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::dp_violation: return "dp_violation";
    case ErrorCode::divergent: return "divergent_integral";
    case ErrorCode::non_convergence: return "non_convergence";
    case ErrorCode::quadrature_cap: return "quadrature_cap";
    case ErrorCode::hypothesis_failed: return "hypothesis_failed";
    case ErrorCode::schema: return "schema_violation";
    case ErrorCode::parse: return "malformed_json";
    case ErrorCode::io: return "io_error";
    }
    return "unknown";
}

// Every failure raised by the library carries a machine-readable code so the
// command line front end can report it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace rifs
