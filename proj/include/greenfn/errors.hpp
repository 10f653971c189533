#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace greenfn {

/// Malformed or invalid input graph (bad JSON, disconnected graph, zero
/// weight, boundary not a proper subset, ...).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A component seen during factor enumeration cannot belong to any valid
/// factor (even cycle, more than one independent cycle, or two or more
/// boundary vertices in one component).
class ClassificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset enumeration would exceed the configured cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::uint64_t requested, std::uint64_t cap)
        : std::runtime_error("enumeration size " + std::to_string(requested) +
                             " exceeds cap " + std::to_string(cap)),
          requested(requested), cap(cap) {}

    std::uint64_t requested;
    std::uint64_t cap;
};

}  // namespace greenfn
