#pragma once

#include <stdexcept>
#include <string>

namespace mcc {

// Base of every computation fault raised by the library.
class computation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace mcc
