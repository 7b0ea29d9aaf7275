#pragma once

#include <stdexcept>
#include <string>

namespace maxstable {

/// Covariance (or scale) matrix is singular or numerically not positive
/// definite: duplicate sites, a site at the Brown-Resnick origin, or an
/// ill-conditioned kernel.
class SingularCovarianceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation of one model family was called with the other family.
class FamilyMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds a combinatorial or configured limit.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed configuration or input file. Message carries file/field context.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejection sampling of an extremal function exhausted its attempt cap.
/// Carries the empirical acceptance rate and the rectangle probability of
/// the constraint so near-zero acceptance scenarios can be diagnosed.
class RejectionFailureError : public std::runtime_error {
public:
    RejectionFailureError(const std::string& msg, long attempts,
                          double acceptance_rate, double rectangle_probability)
        : std::runtime_error(msg),
          attempts_(attempts),
          acceptance_rate_(acceptance_rate),
          rectangle_probability_(rectangle_probability) {}

    long attempts() const { return attempts_; }
    double acceptance_rate() const { return acceptance_rate_; }
    double rectangle_probability() const { return rectangle_probability_; }

private:
    long attempts_;
    double acceptance_rate_;
    double rectangle_probability_;
};

}  // namespace maxstable
