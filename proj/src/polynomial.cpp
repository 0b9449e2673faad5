#include "algint/polynomial.hpp"

#include "algint/errors.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace algint {

bool Polynomial::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t variables, const Scalar& c) {
  Polynomial p(variables);
  p.addTerm(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  Polynomial p(variables);
  Exponents e(variables, 0);
  e.at(index) = 1;
  p.addTerm(e, Scalar(1));
  return p;
}

void Polynomial::addTerm(const Exponents& e, const Scalar& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

unsigned Polynomial::totalDegree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != variables_) throw DimensionMismatch("evaluation point has wrong arity");
  Scalar sum;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t v = 0; v < variables_; ++v)
      for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
    sum += term;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(a.variables_);
  Polynomial::Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      p.addTerm(e, ca * cb);
    }
  }
  return p;
}

Polynomial operator*(Polynomial a, const Scalar& s) {
  if (s.isZero()) return Polynomial(a.variables_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

Polynomial Polynomial::divideExact(const Polynomial& a, const Polynomial& b) {
  if (b.isZero()) throw Singular("polynomial division by zero");
  Polynomial q(a.variables_);
  Polynomial r = a;
  const auto& [lb, cb] = *b.terms_.rbegin();
  while (!r.isZero()) {
    const auto& [lr, cr] = *r.terms_.rbegin();
    Exponents shift(a.variables_);
    for (std::size_t v = 0; v < shift.size(); ++v) {
      if (lr[v] < lb[v]) throw Error("polynomial division is not exact");
      shift[v] = lr[v] - lb[v];
    }
    Polynomial t(a.variables_);
    t.addTerm(shift, cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Scalar mag = c.sign() < 0 ? -c : c;
    const bool constantTerm = std::accumulate(e.begin(), e.end(), 0u) == 0;
    if (!mag.isOne() || constantTerm) os << mag;
    bool needStar = !mag.isOne() && !constantTerm;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (needStar) os << "*";
      os << "t" << v;
      if (e[v] > 1) os << "^" << e[v];
      needStar = true;
    }
  }
  return os.str();
}

PolyMatrix affinePencil(const Matrix& base, const std::vector<Matrix>& directions) {
  if (!base.isSquare()) throw NonSquare("pencil base must be square");
  const std::size_t vars = directions.size();
  PolyMatrix pm{base.rows(), {}};
  pm.entries.reserve(pm.n * pm.n);
  for (std::size_t r = 0; r < pm.n; ++r) {
    for (std::size_t c = 0; c < pm.n; ++c) {
      Polynomial p = Polynomial::constant(vars, base(r, c));
      for (std::size_t v = 0; v < vars; ++v) {
        if (!directions[v](r, c).isZero()) p += Polynomial::variable(vars, v) * directions[v](r, c);
      }
      pm.entries.push_back(std::move(p));
    }
  }
  return pm;
}

Polynomial symbolicDet(PolyMatrix m) {
  const std::size_t n = m.n;
  const std::size_t vars = n == 0 ? 0 : m.entries.front().variables();
  if (n == 0) return Polynomial::constant(vars, Scalar(1));

  bool negate = false;
  Polynomial prev = Polynomial::constant(vars, Scalar(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).isZero()) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k).isZero()) ++p;
      if (p == n) return Polynomial(vars);
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      negate = !negate;
    }
    const Polynomial pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial t = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
        m.at(i, j) = Polynomial::divideExact(t, prev);
      }
      m.at(i, k) = Polynomial(vars);
    }
    prev = pivot;
  }
  Polynomial d = m.at(n - 1, n - 1);
  return negate ? d * Scalar(-1) : d;
}

}  // namespace algint
