#pragma once

#include <stdexcept>

namespace dcover {

// Preconditions are reported with std::invalid_argument.
// integrality_error: an exact computation that must land on an integer
// did not; the inputs are inconsistent (e.g. wrong surgery coefficient
// for the complex).
class integrality_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dcover
