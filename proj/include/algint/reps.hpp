#pragma once

#include "algint/algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace algint {

/// Right and left multiplication matrices of an algebra:
/// (X_i)_jk = f_jik realizes x_j -> x_j x_i, and (Pi_i)_kj = f_ijk realizes
/// x_j -> x_i x_j acting on the transposed basis vector.
struct MultiplicationReps {
  AlgebraPtr algebra;
  std::vector<Matrix> X;
  std::vector<Matrix> Pi;
};

MultiplicationReps buildReps(const AlgebraPtr& algebra);

/// Outcome of one matrix identity over all index pairs.
struct IdentityCheck {
  bool holds = true;
  /// First failing (i, j) pair; j is unused for the per-index identity (a).
  std::optional<std::array<std::size_t, 2>> witness;
};

struct RepIdentityReport {
  IdentityCheck transpose;         // (a) X_i = Pi_i^T
  IdentityCheck rightHomomorphism; // (b) X_i X_j = f_ijk X_k
  IdentityCheck leftHomomorphism;  // (c) Pi_i Pi_j = f_ijk Pi_k
  IdentityCheck commute;           // (d) [X_i, Pi_j^T] = 0
  bool abelian = false;
  bool associative = false;
};

/// Evaluates the four identities and checks them against the structure
/// constant criteria: (a) iff abelian; (b), (c), (d) each iff associative.
/// Throws InternalInconsistency when a link fails.
RepIdentityReport checkRepIdentities(const MultiplicationReps& reps);

}  // namespace algint
