#pragma once

#include <stdexcept>
#include <string>

namespace fracver {

// Parameter or argument outside the operator's domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative scheme (series, fixed point, quadrature) failed to reach
// its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fracver
