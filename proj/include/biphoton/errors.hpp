#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

// Exit-code contract: validation 1, numerical 2, I/O 3.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Grid failed an adequacy check; `check` names which one.
struct GridError : NumericalError {
    GridError(const std::string& check, const std::string& msg)
        : NumericalError(check + ": " + msg), check(check) {}
    std::string check;
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace biphoton
