#include "algint/reps.hpp"

#include "algint/errors.hpp"

namespace algint {

MultiplicationReps buildReps(const AlgebraPtr& algebra) {
  const std::size_t n = algebra->dim();
  MultiplicationReps reps{algebra, {}, {}};
  reps.X.assign(n, Matrix(n, n));
  reps.Pi.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        reps.X[i](j, k) = algebra->f(j, i, k);
        reps.Pi[i](k, j) = algebra->f(i, j, k);
      }
  return reps;
}

namespace {

// sum_k f_ijk mats[k]
Matrix structureCombination(const FiniteAlgebra& a, const std::vector<Matrix>& mats, std::size_t i,
                            std::size_t j) {
  Matrix out(a.dim(), a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (!a.f(i, j, k).isZero()) out += mats[k] * a.f(i, j, k);
  }
  return out;
}

template <typename Pred>
IdentityCheck overPairs(std::size_t n, Pred holds) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!holds(i, j)) return {false, std::array<std::size_t, 2>{i, j}};
  return {};
}

void requireLink(bool matrixSide, bool tensorSide, const char* what) {
  if (matrixSide != tensorSide) {
    throw InternalInconsistency(std::string("identity ") + what +
                                (matrixSide ? " holds" : " fails") +
                                " but the structure-constant criterion disagrees");
  }
}

}  // namespace

RepIdentityReport checkRepIdentities(const MultiplicationReps& reps) {
  const FiniteAlgebra& a = *reps.algebra;
  const std::size_t n = a.dim();
  RepIdentityReport r;
  r.abelian = isAbelian(a);
  r.associative = isAssociative(a);

  for (std::size_t i = 0; i < n && r.transpose.holds; ++i) {
    if (reps.X[i] != reps.Pi[i].transpose()) r.transpose = {false, std::array<std::size_t, 2>{i, i}};
  }
  r.rightHomomorphism = overPairs(n, [&](std::size_t i, std::size_t j) {
    return reps.X[i] * reps.X[j] == structureCombination(a, reps.X, i, j);
  });
  r.leftHomomorphism = overPairs(n, [&](std::size_t i, std::size_t j) {
    return reps.Pi[i] * reps.Pi[j] == structureCombination(a, reps.Pi, i, j);
  });
  r.commute = overPairs(n, [&](std::size_t i, std::size_t j) {
    return commutator(reps.X[i], reps.Pi[j].transpose()).isZero();
  });

  requireLink(r.transpose.holds, r.abelian, "X_i = Pi_i^T");
  requireLink(r.rightHomomorphism.holds, r.associative, "X_i X_j = f_ijk X_k");
  requireLink(r.leftHomomorphism.holds, r.associative, "Pi_i Pi_j = f_ijk Pi_k");
  requireLink(r.commute.holds, r.associative, "[X_i, Pi_j^T] = 0");
  return r;
}

}  // namespace algint
