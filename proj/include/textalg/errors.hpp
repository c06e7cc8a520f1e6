#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textalg {

// Input text could not be understood. position() is the zero-based offset
// of the offending character within the input (== input length when the
// problem is a premature end).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace textalg
