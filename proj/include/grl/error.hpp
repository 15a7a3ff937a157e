#pragma once

#include <stdexcept>
#include <string>

namespace grl {

// All library failures carry a short machine-readable kind such as
// "PoleError" or "PreconditionFailed"; the CLI reports it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace grl
