#pragma once

#include <stdexcept>
#include <string>

namespace p2f {

// Malformed user input: unreadable files, bad edge lists, bad generator specs.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact computation was requested on an instance larger than its budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A runtime audit failed; this always indicates a bug, never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace p2f
