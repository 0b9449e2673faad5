#pragma once

#include "algint/errors.hpp"
#include "algint/measure.hpp"

#include <optional>
#include <string>

namespace algint {

/// Basis change x'_i = S_ij x_j that preserves the structure constants.
struct Automorphism {
  AlgebraPtr algebra;
  Matrix S;
  std::optional<Scalar> k;
};

/// Linear map D x_i = D_ij x_j obeying the Leibniz rule.
struct Derivation {
  AlgebraPtr algebra;
  Matrix D;
};

/// C^-1 S^T C S is not a multiple of the identity.
class NotScalar : public Error {
 public:
  NotScalar(Matrix t, const std::string& what) : Error(what), t_(std::move(t)) {}
  const Matrix& product() const noexcept { return t_; }

 private:
  Matrix t_;
};

/// Verifies invertibility and sum_ab S_ia S_jb f_abk = sum_c f_ijc S_ck.
/// Throws DimensionMismatch, NotInvertible, NotAnAutomorphism.
Automorphism checkAutomorphism(const AlgebraPtr& algebra, const Matrix& S);

/// k with C^-1 S^T C = k S^-1, stored on `a`. Throws NotScalar, AlgebraMismatch.
Scalar scaleFactor(Automorphism& a, const Measure& m);

struct TransformReport {
  Scalar k;
  Vector muPrimed;            // (1/k) S mu: moments of the transformed functional
  bool inMomentSpace = false;
  bool nonsingular = false;
  bool primedCompleteness = false;  // (1/k) integral of x'_i x'_j = (C^-1)_ij for all i, j
  bool preservesMeasure = false;    // mu' = mu
  bool passed() const { return inMomentSpace && nonsingular && primedCompleteness; }
};

/// Requires a.k to be set (call scaleFactor first); throws Error otherwise.
TransformReport verifyMeasureTransform(const Automorphism& a, const Measure& m);

/// Verifies sum_k f_ijk D_kl = sum_k (D_ik f_kjl + D_jk f_ikl).
/// Throws DimensionMismatch, NotADerivation.
Derivation checkDerivation(const AlgebraPtr& algebra, const Matrix& D);

/// D nilpotent (D^dim = 0).
bool isNilpotent(const Matrix& D);

/// sum_{r <= dim} D^r / r!, exact for nilpotent D. Throws Error otherwise.
Matrix exponentiateNilpotent(const Matrix& D);

struct ByPartsReport {
  Vector dMu;                   // D mu, the integrals of D(x_i)
  bool holds = false;           // D mu = 0
  bool nilpotent = false;       // false means NotNilpotent: no exponentiation
  std::optional<Matrix> exponential;
  std::optional<Scalar> k;      // scale factor of exp(D) when scalar
  std::optional<bool> consistent;  // (k = 1) iff (D mu = 0), when k exists
};

ByPartsReport byParts(const Measure& m, const Derivation& d);

/// (I - A)(I + A)^-1 for antisymmetric A: an exact rational orthogonal matrix.
Matrix cayleyTransform(const Matrix& A);

}  // namespace algint
