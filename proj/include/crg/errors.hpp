#pragma once

#include <stdexcept>
#include <string>

namespace crg {

// Arithmetic contract violations: division by zero, inverse of zero, bad order.
class arithmetic_error : public std::domain_error {
public:
    explicit arithmetic_error(const std::string& what) : std::domain_error(what) {}
};

// Malformed group names, flags, or parameters supplied by a caller.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Construction failures: closure exceeds bounds, catalog data inconsistent.
class build_error : public std::runtime_error {
public:
    explicit build_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size or memory guard refused the computation.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact identity that must hold failed: nonzero remainder, method
// disagreement, postcondition violation.  These are hard failures and are
// reported with a witness, never silently absorbed.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace crg
