#pragma once

#include <stdexcept>
#include <string>

namespace subheat {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: malformed config, unknown names, invalid argument combinations.
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

// Valid request that the numerics cannot honor: CFL violation, NaN detected,
// positivity lost, rectangle outside the grid.
class numerical_error : public error {
public:
    explicit numerical_error(const std::string& msg) : error(msg) {}
};

// Pointwise domain violation: nonpositive value under a fractional/negative
// power, structural-condition violation with a witness sample.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

} // namespace subheat
