#pragma once

#include <stdexcept>
#include <string>

namespace kstates {

enum class Errc {
    invalid_argument,
    overflow,
    not_divisible,
    cap_exceeded,
    unsupported,
    unknown_name,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace kstates
