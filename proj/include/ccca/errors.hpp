#pragma once

#include <stdexcept>
#include <string>

namespace ccca {

// All library failures surface as ccca::Error with a human-readable message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ccca
