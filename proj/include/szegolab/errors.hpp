#ifndef SZEGOLAB_ERRORS_HPP
#define SZEGOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace szegolab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sequence access outside the declared two-sided horizon.
struct HorizonExceeded : Error {
  using Error::Error;
};

// |det| strayed too far from 1 for the det^{-1/2} normalization.
struct NearSingular : Error {
  using Error::Error;
};

// Matrix fails the required group-membership test.
struct NotInGroup : Error {
  using Error::Error;
};

// Verblunsky table has no entry for the window word and no default.
struct UnmappedWord : Error {
  using Error::Error;
};

struct InsufficientCoefficients : Error {
  using Error::Error;
};

struct EigensolveFailure : Error {
  using Error::Error;
};

// Discriminant failed the realness check on too many grid points.
struct NonRealDiscriminant : Error {
  using Error::Error;
};

// Singular values too close together; no stable/unstable splitting.
struct DegenerateSplit : Error {
  using Error::Error;
};

// Continued-fraction remainders underflowed before the requested depth.
struct DepthUnreliable : Error {
  using Error::Error;
};

// Invalid or inconsistent run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace szegolab

#endif  // SZEGOLAB_ERRORS_HPP
