#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lstn {

// Malformed input files (bad JSON, wrong document shape).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instances violating the data-model invariants.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-oracle refusal: the selection space exceeds the enumeration budget.
struct budget_error : std::runtime_error {
    budget_error(std::uint64_t required_, std::uint64_t budget_)
        : std::runtime_error("selection space " + std::to_string(required_) +
                             " exceeds enumeration budget " + std::to_string(budget_)),
          required(required_),
          budget(budget_) {}

    std::uint64_t required;
    std::uint64_t budget;
};

}  // namespace lstn
