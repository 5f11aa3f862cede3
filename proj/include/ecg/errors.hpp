#pragma once

#include <stdexcept>
#include <string>

namespace ecg {

// All library failures carry a short machine-readable code ("NotProper",
// "HallFailure", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace ecg
