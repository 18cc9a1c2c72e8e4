#pragma once

#include <stdexcept>
#include <string>

namespace hyperdual {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible axis sizes or tensor shapes.
class shape_error : public error {
public:
    explicit shape_error(const std::string& msg) : error(msg) {}
};

// A label was expected on a tensor but is absent.
class label_error : public error {
public:
    explicit label_error(const std::string& msg) : error(msg) {}
};

// An enumeration or output would exceed a configured cap.
class size_error : public error {
public:
    explicit size_error(const std::string& msg) : error(msg) {}
};

// Invalid value-level input (empty keep set, negative probability, ...).
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// An all-zero distribution where normalization was requested.
class degenerate_error : public error {
public:
    explicit degenerate_error(const std::string& msg) : error(msg) {}
};

// Division by a zero separator entry against a nonzero numerator.
class numerical_error : public error {
public:
    explicit numerical_error(const std::string& msg) : error(msg) {}
};

// A contraction plan that does not match the network it is applied to.
class plan_error : public error {
public:
    explicit plan_error(const std::string& msg) : error(msg) {}
};

} // namespace hyperdual
