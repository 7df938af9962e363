#pragma once

#include <stdexcept>

namespace drinfeld {

/// A computed quantity disagrees with the value the theory prescribes.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The long-exact-sequence deduction rules do not pin down a degree.
class UnderdeterminedError : public VerificationError {
public:
    using VerificationError::VerificationError;
};

}  // namespace drinfeld
