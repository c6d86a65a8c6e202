// errors.hpp: exception types shared by the nmcontrol library

#pragma once

#include <stdexcept>
#include <string>

namespace nmc {

// Argument outside the mathematical domain of an operation (negative time,
// Ohmicity out of range, t < t_pulse, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed configuration or input data (bad grid resolution, too few
// trajectory samples, non-normalized amplitudes, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Spectral horizon cannot host the two-leg protocol.
class HorizonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Protocol shape not supported by the requested propagator.
class UnsupportedProtocolError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Bloch vector too close to the origin for a direction-dependent operation.
class SingularStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nmc
