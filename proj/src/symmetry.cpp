#include "algint/symmetry.hpp"

namespace algint {

namespace {

void requireShape(const FiniteAlgebra& a, const Matrix& m, const char* what) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) {
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(a.dim()) + "x" +
                            std::to_string(a.dim()));
  }
}

Element imageOf(const AlgebraPtr& a, const Matrix& S, std::size_t i) {
  return Element(a, S.row(i));
}

}  // namespace

Automorphism checkAutomorphism(const AlgebraPtr& algebra, const Matrix& S) {
  const FiniteAlgebra& a = *algebra;
  requireShape(a, S, "automorphism matrix");
  if (det(S).isZero()) throw NotInvertible("transformation matrix is singular");

  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs, rhs;
        for (std::size_t p = 0; p < n; ++p) {
          if (S(i, p).isZero()) continue;
          for (std::size_t q = 0; q < n; ++q) {
            if (!S(j, q).isZero() && !a.f(p, q, k).isZero()) lhs += S(i, p) * S(j, q) * a.f(p, q, k);
          }
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (!a.f(i, j, c).isZero()) rhs += a.f(i, j, c) * S(c, k);
        }
        if (lhs != rhs) {
          throw NotAnAutomorphism({i, j, k}, "x'_" + std::to_string(i) + " x'_" + std::to_string(j) +
                                                 " differs from f_ijk x'_k in component " +
                                                 std::to_string(k));
        }
      }
    }
  }
  return Automorphism{algebra, S, std::nullopt};
}

Scalar scaleFactor(Automorphism& a, const Measure& m) {
  requireSameAlgebra(a.algebra, m.algebra);
  Matrix t = m.M * a.S.transpose() * m.C * a.S;
  auto k = t.scalarMultipleOfIdentity();
  if (!k) throw NotScalar(std::move(t), "C^-1 S^T C S is not a multiple of the identity");
  a.k = *k;
  return *k;
}

TransformReport verifyMeasureTransform(const Automorphism& a, const Measure& m) {
  requireSameAlgebra(a.algebra, m.algebra);
  if (!a.k) throw Error("scale factor not set; run scaleFactor first");
  const auto& alg = m.algebra;
  const std::size_t n = alg->dim();

  TransformReport r;
  r.k = *a.k;
  const Scalar inv = Scalar(1) / r.k;
  r.muPrimed = a.S * std::span<const Scalar>(m.mu);
  for (auto& x : r.muPrimed) x *= inv;

  r.inMomentSpace = momentSpace(alg).contains(r.muPrimed);
  r.nonsingular = !det(momentMatrix(*alg, r.muPrimed)).isZero();
  r.preservesMeasure = r.muPrimed == m.mu;

  // The primed basis obeys the same rules, so the completeness relation must
  // reproduce the same C^-1 under the rescaled functional.
  r.primedCompleteness = true;
  for (std::size_t i = 0; i < n && r.primedCompleteness; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element prod = multiply(imageOf(alg, a.S, i), imageOf(alg, a.S, j));
      if (integrate(m, prod) * inv != m.M(i, j)) {
        r.primedCompleteness = false;
        break;
      }
    }
  }
  return r;
}

Derivation checkDerivation(const AlgebraPtr& algebra, const Matrix& D) {
  const FiniteAlgebra& a = *algebra;
  requireShape(a, D, "derivation matrix");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        Scalar lhs, rhs;
        for (std::size_t k = 0; k < n; ++k) {
          lhs += a.f(i, j, k) * D(k, l);
          rhs += D(i, k) * a.f(k, j, l) + D(j, k) * a.f(i, k, l);
        }
        if (lhs != rhs) {
          throw NotADerivation({i, j, l}, "Leibniz rule fails for x_" + std::to_string(i) + " x_" +
                                              std::to_string(j) + " in component " +
                                              std::to_string(l) + ": " + lhs.str() +
                                              " != " + rhs.str());
        }
      }
    }
  }
  return Derivation{algebra, D};
}

bool isNilpotent(const Matrix& D) {
  Matrix p = Matrix::identity(D.rows());
  for (std::size_t r = 0; r < D.rows(); ++r) p = p * D;
  return p.isZero();
}

Matrix exponentiateNilpotent(const Matrix& D) {
  if (!isNilpotent(D)) throw Error("exponential is only exact for nilpotent matrices");
  const std::size_t n = D.rows();
  Matrix sum = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  Scalar factorial = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    power = power * D;
    factorial *= static_cast<long>(r);
    if (power.isZero()) break;
    sum += power * (Scalar(1) / factorial);
  }
  return sum;
}

ByPartsReport byParts(const Measure& m, const Derivation& d) {
  requireSameAlgebra(m.algebra, d.algebra);
  ByPartsReport r;
  r.dMu = d.D * std::span<const Scalar>(m.mu);
  r.holds = isZeroVector(r.dMu);
  r.nilpotent = isNilpotent(d.D);
  if (!r.nilpotent) return r;

  r.exponential = exponentiateNilpotent(d.D);
  Automorphism a;
  try {
    a = checkAutomorphism(m.algebra, *r.exponential);
  } catch (const NotAnAutomorphism& e) {
    throw InternalInconsistency(std::string("exponential of a derivation is not an automorphism: ") + e.what());
  }
  try {
    r.k = scaleFactor(a, m);
  } catch (const NotScalar&) {
    return r;
  }
  r.consistent = r.k->isOne() == r.holds;
  return r;
}

Matrix cayleyTransform(const Matrix& A) {
  const Matrix I = Matrix::identity(A.rows());
  return (I - A) * inverse(I + A);
}

}  // namespace algint
