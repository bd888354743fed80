#pragma once

#include <stdexcept>
#include <string>

namespace dfmax {

// Raised when an input exceeds a documented feasibility guard (enumeration
// sizes, grid sizes, aliasing). The message always names the guard.
class GuardError : public std::domain_error {
public:
    GuardError(const std::string& guard, const std::string& detail)
        : std::domain_error("guard '" + guard + "' violated: " + detail), guard_(guard) {}

    const std::string& guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

} // namespace dfmax
