#pragma once

#include <stdexcept>

namespace ovr {

// A configured budget (states, nodes, steps) was exhausted before an answer.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ovr
