#pragma once

#include <stdexcept>
#include <string>

namespace gysin {

// Mismatched variable counts between operands.
class arity_error : public std::invalid_argument {
public:
    explicit arity_error(const std::string& what) : std::invalid_argument(what) {}
};

// A Weyl group enumeration would exceed the configured cap.
class enumeration_cap_error : public std::runtime_error {
public:
    explicit enumeration_cap_error(const std::string& what) : std::runtime_error(what) {}
};

// An operand violates a required invariance precondition.
class invariance_error : public std::domain_error {
public:
    explicit invariance_error(const std::string& what) : std::domain_error(what) {}
};

// Group family / composition combination outside the supported range.
class unsupported_error : public std::invalid_argument {
public:
    explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace gysin
