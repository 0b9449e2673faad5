#include "algint/tensor.hpp"

#include "algint/errors.hpp"

namespace algint {

std::string tensorLabel(const std::string& baseLabel, const std::string& starLabel) {
  return baseLabel + "*" + starLabel + "*";
}

TensorAlgebra buildTensor(const AlgebraPtr& base) {
  const std::size_t d = base->dim();
  std::vector<std::string> starLabels;
  for (const auto& l : base->labels()) starLabels.push_back(l + "*");
  AlgebraPtr star = FiniteAlgebra::fromDense(base->name() + "*", starLabels, base->tensor());

  const std::size_t n = d * d;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) labels[i * d + j] = tensorLabel(base->labels()[i], base->labels()[j]);

  std::vector<Scalar> F(n * n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t m = 0; m < d; ++m) {
        const Scalar& fikm = base->f(i, k, m);
        if (fikm.isZero()) continue;
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t p = 0; p < d; ++p) {
              const Scalar& fjlp = base->f(j, l, p);
              if (!fjlp.isZero()) F[((i * d + j) * n + (k * d + l)) * n + (m * d + p)] = fikm * fjlp;
            }
      }

  AlgebraPtr product =
      FiniteAlgebra::fromDense(base->name() + " x " + base->name() + "*", std::move(labels), std::move(F));
  return TensorAlgebra{base, std::move(star), std::move(product)};
}

SecondKindMeasure secondKindMeasure(const AlgebraPtr& product) {
  const std::size_t n = product->dim();
  std::size_t d = 0;
  while ((d + 1) * (d + 1) <= n) ++d;
  if (d * d != n) {
    throw InvalidStructureConstants("product algebra dim " + std::to_string(n) + " is not a square");
  }
  SecondKindMeasure m{product, d, Vector(n)};
  for (std::size_t i = 0; i < d; ++i) m.moments[i * d + i] = 1;
  return m;
}

SecondKindMeasure secondKindMeasure(const TensorAlgebra& t) { return secondKindMeasure(t.product); }

Scalar integrate2(const SecondKindMeasure& m, const Element& e) {
  requireSameAlgebra(m.product, e.algebra());
  Scalar sum;
  for (std::size_t k = 0; k < m.moments.size(); ++k) {
    if (!m.moments[k].isZero()) sum += e[k] * m.moments[k];
  }
  return sum;
}

InvarianceReport checkInvariance(const TensorAlgebra& t, const Matrix& S, StarAction action) {
  const std::size_t d = t.baseDim();
  if (S.rows() != d || S.cols() != d) throw DimensionMismatch("transformation must be dim x dim");
  const SecondKindMeasure m = secondKindMeasure(t);

  // Conjugation is the identity on rationals, so both actions use S itself.
  const Matrix& starS = S;

  InvarianceReport r;
  r.action = action;
  r.gram = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      // x'_i ⊗ x*'_j = sum_kl S_ik S*_jl e_(k,l)
      Vector coeffs(d * d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) coeffs[t.flat(k, l)] = S(i, k) * starS(j, l);
      r.gram(i, j) = integrate2(m, Element(t.product, std::move(coeffs)));
    }
  }
  r.invariant = r.gram.isIdentity();
  return r;
}

}  // namespace algint
