#pragma once

#include <stdexcept>
#include <string>

namespace detrep {

// Base class for every error the library raises on bad input or failed
// numerical preconditions. Internal-consistency violations (a verifier
// rejecting a witness the solver just produced) use InternalError instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedTerm : Error {
  using Error::Error;
};
struct NonMonicConstant : Error {
  using Error::Error;
};
struct DegreeOverflow : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct NearSingular : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

struct GradeOutOfRange : Error {
  using Error::Error;
};
struct GradeOverflow : Error {
  using Error::Error;
};
struct NotOrthonormal : Error {
  using Error::Error;
};
struct NotStochastic : Error {
  using Error::Error;
};

struct ComplexRoots : Error {
  using Error::Error;
};
struct InconsistentSystem : Error {
  using Error::Error;
};
struct DegenerateEigenvalues : Error {
  using Error::Error;
};
struct NoSignPattern : Error {
  using Error::Error;
};
struct NonUnitConstant : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace detrep
