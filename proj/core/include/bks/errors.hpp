#pragma once

#include <stdexcept>
#include <string>

namespace bks {

/// Input rejected before any computation (bad type/rank, point outside the
/// alcove, non-Lagrangian subspace, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (Weyl group size, enumeration count, scan box)
/// would be exceeded. `partial` is how far the computation got.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::size_t partial)
        : std::runtime_error(what), partial_(partial) {}
    std::size_t partial() const { return partial_; }

private:
    std::size_t partial_;
};

}  // namespace bks
