#pragma once

#include <stdexcept>
#include <string>

namespace opoly {

/// Thrown when an operation would exceed its configured memory or runtime
/// budget. The message names the cheaper alternative where one exists.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace opoly
