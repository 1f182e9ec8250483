#pragma once

#include <stdexcept>

namespace ecc {

// Invalid parameters or malformed input.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration/counting budget was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ecc
