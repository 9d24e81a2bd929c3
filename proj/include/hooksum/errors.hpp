#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hooksum {

// Argument outside an operation's stated domain (k = 0 where k >= 1 is
// required, x <= 0 for log_gamma, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// gamma() result exceeds the double range.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// decompose() on a partition that does not contain the k x l rectangle.
struct RectangleNotContained : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Recursive tableau-count oracle asked for n beyond its configured bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// s11_closed with a power other than 1 or 2.
struct UnsupportedPower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ratio_table closed-form mode for a (k, l, p) without a known closed form.
struct UnsupportedClosedForm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Single-shape estimate whose Vandermonde factor vanishes (two equal rows).
struct DegenerateShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration aborted because it would exceed the configured partition budget.
struct WorkLimitExceeded : std::runtime_error {
    explicit WorkLimitExceeded(std::uint64_t limit)
        : std::runtime_error("work limit of " + std::to_string(limit) +
                             " partitions exceeded"),
          limit(limit) {}
    std::uint64_t limit;
};

}  // namespace hooksum
