#pragma once

#include "algint/algebra.hpp"
#include "algint/reps.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace algint {

/// M(mu)_ij = sum_k f_ijk mu_k, the matrix of integrals of x_i x_j.
Matrix momentMatrix(const FiniteAlgebra& algebra, std::span<const Scalar> mu);

/// The linear space of moment vectors mu with M(mu) Pi_i = X_i M(mu) for all i.
struct MomentSpace {
  AlgebraPtr algebra;
  std::vector<Vector> basis;  // echelon-normalized
  std::size_t freeDim = 0;

  bool contains(std::span<const Scalar> mu) const;
};

MomentSpace momentSpace(const AlgebraPtr& algebra);

/// A gauge pin mu_index = value.
struct Pin {
  std::size_t index = 0;
  Scalar value;
  friend bool operator==(const Pin&, const Pin&) = default;
};

/// An integration functional: mu_k is the integral of x_k, M = C^-1 is the
/// matrix of integrals of x_i x_j, and C intertwines X_i and Pi_i.
struct Measure {
  AlgebraPtr algebra;
  Vector mu;
  Matrix M;
  Matrix C;
  std::vector<Pin> gauge;

  /// Builds M and C from mu. Throws Singular when det M(mu) = 0.
  static Measure fromMoments(const AlgebraPtr& algebra, Vector mu, std::vector<Pin> gauge = {});
};

/// Selects a measure in the moment space satisfying every pin.
///
/// Points p + sum_r c_r d_r of the (pinned) affine moment set are tried in a
/// fixed order: c = 0, each unit vector, then integer boxes of growing radius,
/// up to kSearchBudget candidates; the first with det M != 0 wins. Without
/// pins the winner is rescaled so its last nonzero moment is 1. When the
/// search fails and at most kSymbolicParams parameters remain, det M is
/// expanded as a polynomial: identically zero certifies that no measure
/// exists, otherwise a non-root is located on a grid.
///
/// Throws NoMeasure, GaugeInfeasible, BadParams (pin index out of range).
Measure findMeasure(const AlgebraPtr& algebra, const std::vector<Pin>& pins = {});

inline constexpr std::size_t kSearchBudget = 512;
inline constexpr std::size_t kSymbolicParams = 4;

/// sum_k e_k mu_k. Throws AlgebraMismatch.
Scalar integrate(const Measure& m, const Element& e);

struct CompletenessReport {
  std::size_t pairsChecked = 0;
  std::vector<std::array<std::size_t, 2>> failedPairs;  // integral of x_i x_j != (C^-1)_ij
  std::vector<std::size_t> failedIntertwiners;          // Pi_i != C X_i C^-1
  bool inverseExact = true;                             // C M = 1
  std::optional<bool> identityConsistent;               // mu_i = M_ei = M_ie, when e exists
  bool passed() const {
    return failedPairs.empty() && failedIntertwiners.empty() && inverseExact &&
           identityConsistent.value_or(true);
  }
};

/// Checks the completeness relation pair by pair through element
/// multiplication, and the intertwining relation through the matrices.
CompletenessReport verifyCompleteness(const Measure& m);

}  // namespace algint
