#pragma once

#include <stdexcept>
#include <string>

namespace oddleech {

/// A desk-scale guard was exceeded; the caller should switch to a cheaper route.
class GuardExceeded : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// An exact division that must succeed did not (e.g. a Gram matrix not divisible by its scale).
class DivisibilityError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// A constructed object failed its own postcondition check.
class VerificationError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace oddleech
