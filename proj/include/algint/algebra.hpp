#pragma once

#include "algint/matrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace algint {

/// One listed structure constant as it appears in an algebra file, before
/// validation. Indices are signed so negative input can be reported.
struct RawTriple {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  std::string value;
};

struct RawAlgebra {
  std::string name;
  std::int64_t dim = 0;
  std::vector<std::string> labels;
  std::vector<RawTriple> triples;
};

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// A finite-dimensional algebra over the rationals given by structure
/// constants: x_i x_j = sum_k f(i,j,k) x_k. Immutable once built.
class FiniteAlgebra {
 public:
  /// Dense constructor used by builders; runs the same checks as validate().
  static AlgebraPtr fromDense(std::string name, std::vector<std::string> labels,
                              std::vector<Scalar> f);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& f(std::size_t i, std::size_t j, std::size_t k) const {
    return f_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& tensor() const { return f_; }

  std::optional<std::size_t> identityIndex() const { return identity_; }
  bool isAbelian() const { return abelian_; }
  bool isAssociative() const { return associative_; }

  std::optional<std::size_t> labelIndex(const std::string& label) const;

  /// Same dimension, labels and structure constants.
  bool sameStructure(const FiniteAlgebra& other) const;

 private:
  FiniteAlgebra() = default;
  friend AlgebraPtr validate(const RawAlgebra& raw);

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> f_;
  std::optional<std::size_t> identity_;
  bool abelian_ = false;
  bool associative_ = false;
};

/// Checks and expands raw structure data. Throws InvalidStructureConstants.
AlgebraPtr validate(const RawAlgebra& raw);

/// Labels accepted by the expression parser: non-empty printable ASCII with no
/// whitespace and none of + - / ( ) ".
bool isValidLabel(const std::string& label);

/// Index of a basis element e with f(e,i,k) = f(i,e,k) = delta_ik, if any.
std::optional<std::size_t> findIdentity(std::size_t dim, const std::vector<Scalar>& f);

/// f_ijk = f_jik for all i, j, k.
bool isAbelian(const FiniteAlgebra& a);

/// sum_l f_ilm f_jkl = sum_l f_ijl f_lkm for all i, j, k, m.
bool isAssociative(const FiniteAlgebra& a);

/// Element of an algebra as a coefficient vector over the basis.
class Element {
 public:
  Element(AlgebraPtr algebra, Vector coeffs);
  static Element zero(AlgebraPtr algebra);
  static Element basis(AlgebraPtr algebra, std::size_t index);
  /// Throws InvalidStructureConstants when the algebra has no identity.
  static Element one(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vector& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  bool isZero() const { return isZeroVector(coeffs_); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b);

  std::string str() const;

 private:
  AlgebraPtr algebra_;
  Vector coeffs_;
};

/// Throws AlgebraMismatch unless both refer to the same algebra.
void requireSameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Bilinear product: coeffs_k = sum_ij a_i b_j f_ijk.
Element multiply(const Element& a, const Element& b);

}  // namespace algint
