#pragma once

#include "algint/algebra.hpp"

#include <string>
#include <utility>

namespace algint {

/// A ⊗ A* with ungraded (commuting) factors. The basis element
/// e_(i,j) = x_i ⊗ x*_j sits at flat index i*dim + j and is labelled
/// "<label_i>*<label_j>*"; F_(i,j)(k,l)(m,p) = f_ikm f_jlp.
struct TensorAlgebra {
  AlgebraPtr base;
  AlgebraPtr star;
  AlgebraPtr product;

  std::size_t baseDim() const { return base->dim(); }
  std::size_t flat(std::size_t i, std::size_t j) const { return i * base->dim() + j; }
  std::pair<std::size_t, std::size_t> unflat(std::size_t idx) const {
    return {idx / base->dim(), idx % base->dim()};
  }
};

/// Throws InvalidStructureConstants when dim^2 exceeds the algebra size cap.
TensorAlgebra buildTensor(const AlgebraPtr& base);

std::string tensorLabel(const std::string& baseLabel, const std::string& starLabel);

/// The functional with integral of e_(i,j) = delta_ij on a product algebra of
/// dimension d^2 (flat index i*d + j).
struct SecondKindMeasure {
  AlgebraPtr product;
  std::size_t baseDim = 0;
  Vector moments;
};

SecondKindMeasure secondKindMeasure(const TensorAlgebra& t);

/// Same functional for a product algebra loaded from a file; the factor
/// dimension is the square root of its dim. Throws InvalidStructureConstants
/// when dim is not a perfect square.
SecondKindMeasure secondKindMeasure(const AlgebraPtr& product);

Scalar integrate2(const SecondKindMeasure& m, const Element& e);

enum class StarAction { Conjugate, Plain };

struct InvarianceReport {
  Matrix gram;        // integral of x'_i x*'_j, which equals S S^T
  bool invariant = false;
  StarAction action = StarAction::Plain;
  /// Rational scalars have trivial conjugation, so both actions coincide and
  /// only orthogonal invariance is exercised.
  bool conjugationTrivial = true;
};

/// Transforms x'_i = S_ik x_k and x*'_j = S_jl x*_l (conjugation is the
/// identity over the rationals) and integrates every x'_i x*'_j.
InvarianceReport checkInvariance(const TensorAlgebra& t, const Matrix& S, StarAction action);

}  // namespace algint
