#pragma once

#include <stdexcept>
#include <string>

namespace ngspread {

/// Rejected argument (bad range, mismatched sizes, malformed input).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a documented size cap (enumeration, canonical form, ...).
class size_limit_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative numeric routine failed to reach its certificate.
class numeric_failure : public std::runtime_error {
public:
    numeric_failure(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}

    /// Residual or off-norm actually reached before giving up.
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_ = 0.0;
};

} // namespace ngspread
