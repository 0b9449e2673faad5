#include "algint/measure.hpp"

#include "algint/errors.hpp"
#include "algint/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace algint {

Matrix momentMatrix(const FiniteAlgebra& algebra, std::span<const Scalar> mu) {
  const std::size_t n = algebra.dim();
  if (mu.size() != n) throw DimensionMismatch("moment vector length differs from algebra dim");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!mu[k].isZero() && !algebra.f(i, j, k).isZero()) m(i, j) += algebra.f(i, j, k) * mu[k];
  return m;
}

MomentSpace momentSpace(const AlgebraPtr& algebra) {
  const FiniteAlgebra& a = *algebra;
  const std::size_t n = a.dim();

  // (M Pi_i - X_i M)_pq is linear in mu; its coefficient on mu_k is
  // sum_c (f_pck f_iqc - f_pic f_cqk).
  std::set<Vector> rows;
  Vector row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        std::fill(row.begin(), row.end(), Scalar());
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& fiqc = a.f(i, q, c);
          const Scalar& fpic = a.f(p, i, c);
          for (std::size_t k = 0; k < n; ++k) {
            if (!fiqc.isZero() && !a.f(p, c, k).isZero()) row[k] += a.f(p, c, k) * fiqc;
            if (!fpic.isZero() && !a.f(c, q, k).isZero()) row[k] -= fpic * a.f(c, q, k);
          }
        }
        if (!isZeroVector(row)) {
          Vector r = row;
          normalizeLeading(r);
          rows.insert(std::move(r));
        }
      }
    }
  }

  MomentSpace space{algebra, {}, 0};
  if (rows.empty()) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector e(n);
      e[k] = 1;
      space.basis.push_back(std::move(e));
    }
  } else {
    space.basis = nullspace(Matrix::fromRows({rows.begin(), rows.end()}));
  }
  space.freeDim = space.basis.size();
  return space;
}

bool MomentSpace::contains(std::span<const Scalar> mu) const {
  if (mu.size() != algebra->dim()) return false;
  if (isZeroVector(mu)) return true;
  std::vector<Vector> rows = basis;
  rows.emplace_back(mu.begin(), mu.end());
  return rank(Matrix::fromRows(rows)) == basis.size();
}

Measure Measure::fromMoments(const AlgebraPtr& algebra, Vector mu, std::vector<Pin> gauge) {
  Matrix M = momentMatrix(*algebra, mu);
  if (det(M).isZero()) throw Singular("moment matrix M(mu) is singular");
  Matrix C = inverse(M);
  return Measure{algebra, std::move(mu), std::move(M), std::move(C), std::move(gauge)};
}

namespace {

struct AffineSet {
  Vector origin;
  std::vector<Vector> directions;

  Vector at(std::span<const Scalar> c) const {
    Vector mu = origin;
    for (std::size_t r = 0; r < directions.size(); ++r) {
      if (c[r].isZero()) continue;
      for (std::size_t k = 0; k < mu.size(); ++k) mu[k] += c[r] * directions[r][k];
    }
    return mu;
  }
};

// The moment space intersected with the pins, or nothing if they conflict.
std::optional<AffineSet> pinnedSet(const MomentSpace& space, const std::vector<Pin>& pins) {
  const std::size_t n = space.algebra->dim();
  const std::size_t s = space.basis.size();
  if (pins.empty()) {
    return AffineSet{Vector(n), space.basis};
  }
  // Unknowns are coordinates c in the space basis: (B c)_index = value.
  Matrix P(pins.size(), s);
  Vector rhs(pins.size());
  for (std::size_t r = 0; r < pins.size(); ++r) {
    for (std::size_t b = 0; b < s; ++b) P(r, b) = space.basis[b][pins[r].index];
    rhs[r] = pins[r].value;
  }
  auto c0 = solveParticular(P, rhs);
  if (!c0) return std::nullopt;

  AffineSet set;
  set.origin = Vector(n);
  for (std::size_t b = 0; b < s; ++b)
    for (std::size_t k = 0; k < n; ++k) set.origin[k] += (*c0)[b] * space.basis[b][k];
  for (const Vector& kernel : nullspace(P)) {
    Vector d(n);
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t k = 0; k < n; ++k) d[k] += kernel[b] * space.basis[b][k];
    set.directions.push_back(std::move(d));
  }
  return set;
}

// Lexicographic successor in [-radius, radius]^n; false after the last.
bool nextInBox(std::vector<long>& c, long radius) {
  for (std::size_t pos = c.size(); pos-- > 0;) {
    if (c[pos] < radius) {
      ++c[pos];
      return true;
    }
    c[pos] = -radius;
  }
  return false;
}

// Integer coefficient vectors in the documented order, at most `budget`.
std::vector<Vector> candidateCoefficients(std::size_t params, std::size_t budget) {
  std::vector<Vector> out;
  std::set<Vector> seen;
  auto push = [&](Vector c) {
    if (out.size() < budget && seen.insert(c).second) out.push_back(std::move(c));
  };
  push(Vector(params));
  for (std::size_t r = 0; r < params; ++r) {
    Vector e(params);
    e[r] = 1;
    push(std::move(e));
  }
  if (params == 0) return out;
  for (long radius = 1; out.size() < budget; ++radius) {
    std::vector<long> c(params, -radius);
    do {
      if (std::any_of(c.begin(), c.end(), [&](long v) { return v == radius || v == -radius; })) {
        push(Vector(c.begin(), c.end()));
      }
    } while (out.size() < budget && nextInBox(c, radius));
  }
  return out;
}

bool isAntisymmetric(const Matrix& m) { return (m + m.transpose()).isZero(); }

struct SearchOutcome {
  std::optional<Vector> mu;
  bool certifiedEmpty = false;
  std::string certificate;
  std::string determinant;
};

SearchOutcome search(const FiniteAlgebra& a, const AffineSet& set) {
  const std::size_t params = set.directions.size();
  for (const Vector& c : candidateCoefficients(params, kSearchBudget)) {
    Vector mu = set.at(c);
    if (!det(momentMatrix(a, mu)).isZero()) return {std::move(mu), false, {}, {}};
  }

  const Matrix base = momentMatrix(a, set.origin);
  std::vector<Matrix> dirs;
  for (const Vector& d : set.directions) dirs.push_back(momentMatrix(a, d));

  if (params > kSymbolicParams) {
    if (a.dim() % 2 == 1 && isAntisymmetric(base) &&
        std::all_of(dirs.begin(), dirs.end(), isAntisymmetric)) {
      return {std::nullopt, true, "odd-antisymmetric", {}};
    }
    return {std::nullopt, false, "search-exhausted", {}};
  }

  const Polynomial d = symbolicDet(affinePencil(base, dirs));
  if (d.isZero()) return {std::nullopt, true, "symbolic-determinant", "0"};

  // A nonzero polynomial of degree <= dim in each variable has a non-root on
  // the grid {0..dim}^params.
  std::vector<long> c(params, 0);
  const long top = static_cast<long>(a.dim());
  while (true) {
    Vector point(c.begin(), c.end());
    if (!d.evaluate(point).isZero()) return {set.at(point), false, {}, d.str()};
    std::size_t pos = 0;
    while (pos < params && c[pos] == top) c[pos++] = 0;
    if (pos == params) break;
    ++c[pos];
  }
  throw InternalInconsistency("nonzero determinant polynomial vanished on its grid");
}

}  // namespace

Measure findMeasure(const AlgebraPtr& algebra, const std::vector<Pin>& pins) {
  const std::size_t n = algebra->dim();
  std::map<std::size_t, Scalar> seenPins;
  for (const Pin& p : pins) {
    if (p.index >= n) {
      throw BadParams("pin index " + std::to_string(p.index) + " out of range for dim " + std::to_string(n));
    }
    auto [it, inserted] = seenPins.emplace(p.index, p.value);
    if (!inserted && it->second != p.value) {
      throw GaugeInfeasible("conflicting pins on mu_" + std::to_string(p.index));
    }
  }

  const MomentSpace space = momentSpace(algebra);
  const auto set = pinnedSet(space, pins);
  if (!set) throw GaugeInfeasible("pins contradict the moment space");

  SearchOutcome outcome = search(*algebra, *set);
  if (outcome.mu) {
    Vector mu = std::move(*outcome.mu);
    if (pins.empty()) {
      auto last = std::find_if(mu.rbegin(), mu.rend(), [](const Scalar& s) { return !s.isZero(); });
      const Scalar scale = Scalar(1) / *last;
      for (auto& x : mu) x *= scale;
    }
    return Measure::fromMoments(algebra, std::move(mu), pins);
  }

  if (!pins.empty()) {
    SearchOutcome unpinned = search(*algebra, AffineSet{Vector(n), space.basis});
    if (unpinned.mu) throw GaugeInfeasible("pins force a singular moment matrix");
    outcome = std::move(unpinned);
  }
  const std::string what =
      outcome.certifiedEmpty
          ? "no moment vector gives a nonsingular M (certificate: " + outcome.certificate + ")"
          : "no nonsingular moment matrix found within the search budget";
  throw NoMeasure(outcome.certifiedEmpty, outcome.certificate, outcome.determinant, what);
}

Scalar integrate(const Measure& m, const Element& e) {
  requireSameAlgebra(m.algebra, e.algebra());
  Scalar sum;
  for (std::size_t k = 0; k < m.mu.size(); ++k) {
    if (!e[k].isZero()) sum += e[k] * m.mu[k];
  }
  return sum;
}

CompletenessReport verifyCompleteness(const Measure& m) {
  const auto& alg = m.algebra;
  const std::size_t n = alg->dim();
  CompletenessReport report;
  const Matrix Minv = inverse(m.C);
  report.inverseExact = (m.C * m.M).isIdentity();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar lhs = integrate(m, multiply(Element::basis(alg, i), Element::basis(alg, j)));
      ++report.pairsChecked;
      if (lhs != Minv(i, j)) report.failedPairs.push_back({i, j});
    }
  }

  const MultiplicationReps reps = buildReps(alg);
  for (std::size_t i = 0; i < n; ++i) {
    if (reps.Pi[i] != m.C * reps.X[i] * Minv) report.failedIntertwiners.push_back(i);
  }

  if (auto e = alg->identityIndex()) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && m.mu[i] == Minv(*e, i) && m.mu[i] == Minv(i, *e);
    report.identityConsistent = ok;
  }
  return report;
}

}  // namespace algint
