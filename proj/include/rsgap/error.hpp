#pragma once

#include <stdexcept>
#include <string>

namespace rsgap {

// Failure classes; values double as CLI exit codes.
enum class Status {
    ok = 0,
    param_error = 2,
    search_failure = 3,
    format_error = 4,
    verify_failure = 5,
    budget_exceeded = 6,
    internal_error = 7,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
    Status status() const { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void throw_param(const std::string& msg) { throw Error(Status::param_error, msg); }
[[noreturn]] inline void throw_search(const std::string& msg) { throw Error(Status::search_failure, msg); }
[[noreturn]] inline void throw_format(const std::string& msg) { throw Error(Status::format_error, msg); }
[[noreturn]] inline void throw_budget(const std::string& msg) { throw Error(Status::budget_exceeded, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(Status::internal_error, msg); }

}  // namespace rsgap
