#pragma once

#include <stdexcept>

namespace regge6j {

// Thrown when a mathematically-impossible state is reached (a violated
// integrality or closure-size claim). Must never fire on valid input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace regge6j
