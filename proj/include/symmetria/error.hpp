#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace symmetria {

// Error with a stable machine-readable name, used by the CLI to map failures
// onto exit codes and report payloads.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace symmetria
