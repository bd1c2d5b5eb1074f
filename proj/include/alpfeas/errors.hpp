#pragma once

#include <stdexcept>
#include <string>

namespace alpfeas {

/// Raised when a configured resource bound (pivot count, case cap,
/// concretization depth) is exceeded. Never doubles as a verdict.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace alpfeas
