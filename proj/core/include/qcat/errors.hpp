#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  NotHermitian(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

private:
  double deviation_;
};

/// A set of vectors expected to be linearly independent is not.
class DependentBasis : public Error {
public:
  DependentBasis(const std::string& what, double smallest_eigenvalue)
      : Error(what), smallest_eigenvalue_(smallest_eigenvalue) {}
  double smallest_gram_eigenvalue() const noexcept { return smallest_eigenvalue_; }

private:
  double smallest_eigenvalue_;
};

/// Product factorization was requested for a state that is entangled.
class EntangledState : public Error {
public:
  EntangledState(const std::string& what, double second_coefficient)
      : Error(what), second_coefficient_(second_coefficient) {}
  double second_schmidt_coefficient() const noexcept { return second_coefficient_; }

private:
  double second_coefficient_;
};

class OutsideSpan : public Error {
public:
  OutsideSpan(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// The coherent extension is undefined because environment states differ.
class EnvironmentsNotIdentical : public Error {
public:
  using Error::Error;
};

/// An internal cross-check failed. Indicates a bug upstream of the caller.
class InternalConsistency : public Error {
public:
  using Error::Error;
};

}  // namespace qcat
