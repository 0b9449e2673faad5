#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace algint {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact-linalg
class NonSquare : public Error {
 public:
  using Error::Error;
};
class Singular : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class BadScalar : public Error {
 public:
  using Error::Error;
};

// algebra-core
class InvalidStructureConstants : public Error {
 public:
  using Error::Error;
};
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an element expression; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class AmbiguousProduct : public Error {
 public:
  using Error::Error;
};

// mult-reps
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// measure
class NoMeasure : public Error {
 public:
  NoMeasure(bool certified, std::string certificate, std::string determinant, const std::string& what)
      : Error(what),
        certified_(certified),
        certificate_(std::move(certificate)),
        determinant_(std::move(determinant)) {}
  bool certified() const noexcept { return certified_; }
  /// How emptiness was established ("symbolic-determinant" or
  /// "odd-antisymmetric"), or "search-exhausted" when uncertified.
  const std::string& certificate() const noexcept { return certificate_; }
  /// Expanded det M over the search parameters when it was computed.
  const std::string& determinant() const noexcept { return determinant_; }

 private:
  bool certified_;
  std::string certificate_;
  std::string determinant_;
};

class GaugeInfeasible : public Error {
 public:
  using Error::Error;
};

// symmetry
class NotInvertible : public Error {
 public:
  using Error::Error;
};

using IndexTriple = std::array<std::size_t, 3>;

class NotAnAutomorphism : public Error {
 public:
  NotAnAutomorphism(IndexTriple witness, const std::string& what)
      : Error(what), witness_(witness) {}
  const IndexTriple& witness() const noexcept { return witness_; }

 private:
  IndexTriple witness_;
};

class NotADerivation : public Error {
 public:
  NotADerivation(IndexTriple witness, const std::string& what)
      : Error(what), witness_(witness) {}
  const IndexTriple& witness() const noexcept { return witness_; }

 private:
  IndexTriple witness_;
};

// catalog
class UnknownName : public Error {
 public:
  using Error::Error;
};
class BadParams : public Error {
 public:
  using Error::Error;
};

}  // namespace algint
