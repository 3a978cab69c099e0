#pragma once

#include <stdexcept>
#include <string>

namespace vkn {

// Domain error with a stable name that the CLI surfaces verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

inline Error syntax_error(const std::string& msg) { return Error("SyntaxError", msg); }

} // namespace vkn
