#pragma once

#include <stdexcept>
#include <string>

namespace dpd {

// Every recoverable failure in the library is an Error with a stable
// machine-readable code ("NonSimple", "EulerViolation", ...) so the CLI can
// map it to exit code 2 and report the code in JSON output.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace dpd
