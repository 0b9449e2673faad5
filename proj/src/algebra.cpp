#include "algint/algebra.hpp"

#include "algint/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace algint {

namespace {

constexpr std::int64_t kMaxDim = 64;

struct SparseEntry {
  std::size_t index;
  Scalar value;
};

// products[i * dim + j] lists the nonzero f(i, j, .) entries.
std::vector<std::vector<SparseEntry>> sparseProducts(std::size_t dim, const std::vector<Scalar>& f) {
  std::vector<std::vector<SparseEntry>> out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& v = f[(i * dim + j) * dim + k];
        if (!v.isZero()) out[i * dim + j].push_back({k, v});
      }
  return out;
}

bool abelianTensor(std::size_t dim, const std::vector<Scalar>& f) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (f[(i * dim + j) * dim + k] != f[(j * dim + i) * dim + k]) return false;
  return true;
}

bool associativeTensor(std::size_t dim, const std::vector<Scalar>& f) {
  const auto prod = sparseProducts(dim, f);
  std::vector<Scalar> lhs(dim), rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar());
        std::fill(rhs.begin(), rhs.end(), Scalar());
        // lhs_m = sum_l f_ilm f_jkl, rhs_m = sum_l f_ijl f_lkm
        for (const auto& [l, fjkl] : prod[j * dim + k])
          for (const auto& [m, film] : prod[i * dim + l]) lhs[m] += film * fjkl;
        for (const auto& [l, fijl] : prod[i * dim + j])
          for (const auto& [m, flkm] : prod[l * dim + k]) rhs[m] += fijl * flkm;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool isValidLabel(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f) return false;
    if (c == '+' || c == '-' || c == '/' || c == '(' || c == ')' || c == '"') return false;
  }
  return true;
}

std::optional<std::size_t> findIdentity(std::size_t dim, const std::vector<Scalar>& f) {
  for (std::size_t e = 0; e < dim; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < dim && ok; ++i) {
      for (std::size_t k = 0; k < dim && ok; ++k) {
        const Scalar delta = i == k ? 1 : 0;
        ok = f[(e * dim + i) * dim + k] == delta && f[(i * dim + e) * dim + k] == delta;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

AlgebraPtr validate(const RawAlgebra& raw) {
  if (raw.dim < 1 || raw.dim > kMaxDim) {
    throw InvalidStructureConstants("dim must be between 1 and " + std::to_string(kMaxDim) +
                                    ", got " + std::to_string(raw.dim));
  }
  const auto dim = static_cast<std::size_t>(raw.dim);
  if (raw.labels.size() != dim) {
    throw InvalidStructureConstants("dim is " + std::to_string(dim) + " but " +
                                    std::to_string(raw.labels.size()) + " labels were given");
  }
  std::set<std::string> seen;
  for (const auto& l : raw.labels) {
    if (!isValidLabel(l)) throw InvalidStructureConstants("invalid basis label '" + l + "'");
    if (!seen.insert(l).second) throw InvalidStructureConstants("duplicate basis label '" + l + "'");
  }

  std::vector<Scalar> f(dim * dim * dim);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> triples;
  for (const auto& t : raw.triples) {
    for (auto idx : {t.i, t.j, t.k}) {
      if (idx < 0 || idx >= raw.dim) {
        throw InvalidStructureConstants("index " + std::to_string(idx) + " out of range for dim " +
                                        std::to_string(dim));
      }
    }
    if (!triples.emplace(t.i, t.j, t.k).second) {
      throw InvalidStructureConstants("duplicate triple (" + std::to_string(t.i) + "," +
                                      std::to_string(t.j) + "," + std::to_string(t.k) + ")");
    }
    try {
      f[(t.i * raw.dim + t.j) * raw.dim + t.k] = Scalar::parse(t.value);
    } catch (const BadScalar& e) {
      throw InvalidStructureConstants(e.what());
    }
  }

  std::shared_ptr<FiniteAlgebra> a(new FiniteAlgebra());
  a->name_ = raw.name;
  a->dim_ = dim;
  a->labels_ = raw.labels;
  a->f_ = std::move(f);
  a->identity_ = findIdentity(dim, a->f_);
  a->abelian_ = abelianTensor(dim, a->f_);
  a->associative_ = associativeTensor(dim, a->f_);
  return a;
}

AlgebraPtr FiniteAlgebra::fromDense(std::string name, std::vector<std::string> labels,
                                    std::vector<Scalar> f) {
  const std::size_t dim = labels.size();
  if (f.size() != dim * dim * dim) {
    throw InvalidStructureConstants("tensor size does not match dim^3");
  }
  RawAlgebra raw{std::move(name), static_cast<std::int64_t>(dim), std::move(labels), {}};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& v = f[(i * dim + j) * dim + k];
        if (!v.isZero()) {
          raw.triples.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                                 static_cast<std::int64_t>(k), v.str()});
        }
      }
  return validate(raw);
}

std::optional<std::size_t> FiniteAlgebra::labelIndex(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteAlgebra::sameStructure(const FiniteAlgebra& other) const {
  return dim_ == other.dim_ && labels_ == other.labels_ && f_ == other.f_;
}

bool isAbelian(const FiniteAlgebra& a) { return abelianTensor(a.dim(), a.tensor()); }

bool isAssociative(const FiniteAlgebra& a) { return associativeTensor(a.dim(), a.tensor()); }

void requireSameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->sameStructure(*b)) {
    throw AlgebraMismatch("elements belong to different algebras");
  }
}

Element::Element(AlgebraPtr algebra, Vector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw AlgebraMismatch("element without an algebra");
  if (coeffs_.size() != algebra_->dim()) {
    throw DimensionMismatch("coefficient vector length differs from algebra dim");
  }
}

Element Element::zero(AlgebraPtr algebra) {
  const std::size_t n = algebra->dim();
  return Element(std::move(algebra), Vector(n));
}

Element Element::basis(AlgebraPtr algebra, std::size_t index) {
  Element e = zero(std::move(algebra));
  e.coeffs_.at(index) = 1;
  return e;
}

Element Element::one(AlgebraPtr algebra) {
  const auto id = algebra->identityIndex();
  if (!id) throw InvalidStructureConstants("algebra '" + algebra->name() + "' has no identity");
  return basis(std::move(algebra), *id);
}

Element& Element::operator+=(const Element& o) {
  requireSameAlgebra(algebra_, o.algebra_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  requireSameAlgebra(algebra_, o.algebra_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (a.algebra_ != b.algebra_ && !a.algebra_->sameStructure(*b.algebra_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string Element::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.isZero()) continue;
    const bool isIdentity = algebra_->identityIndex() == i;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Scalar mag = c.sign() < 0 ? -c : c;
    if (isIdentity) {
      os << mag;
    } else {
      if (!mag.isOne()) os << mag << "*";
      os << algebra_->labels()[i];
    }
  }
  return first ? "0" : os.str();
}

Element multiply(const Element& a, const Element& b) {
  requireSameAlgebra(a.algebra(), b.algebra());
  const FiniteAlgebra& alg = *a.algebra();
  const std::size_t n = alg.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].isZero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].isZero()) continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& f = alg.f(i, j, k);
        if (!f.isZero()) out[k] += ab * f;
      }
    }
  }
  return Element(a.algebra(), std::move(out));
}

}  // namespace algint
