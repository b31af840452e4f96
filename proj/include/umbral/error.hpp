#pragma once

#include <stdexcept>

namespace umbral {

// Raised when an argument violates an operation's documented precondition
// (wrong series order, insufficient truncation, lambda == 1, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace umbral
