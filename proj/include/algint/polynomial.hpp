#pragma once

#include "algint/matrix.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace algint {

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables t_0..t_{n-1}. Terms are kept in graded-lex order.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Scalar, GradedLex>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
  static Polynomial constant(std::size_t variables, const Scalar& c);
  static Polynomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return variables_; }
  bool isZero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  unsigned totalDegree() const;

  Scalar evaluate(std::span<const Scalar> point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Exact quotient a / b. Throws Error when b does not divide a.
  static Polynomial divideExact(const Polynomial& a, const Polynomial& b);

  std::string str() const;

 private:
  void addTerm(const Exponents& e, const Scalar& c);

  std::size_t variables_;
  Terms terms_;
};

/// Square matrix whose entries are polynomials.
struct PolyMatrix {
  std::size_t n = 0;
  std::vector<Polynomial> entries;  // row-major

  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
};

/// The matrix base + sum_p t_p * directions[p] with polynomial entries.
PolyMatrix affinePencil(const Matrix& base, const std::vector<Matrix>& directions);

/// Determinant expanded as a polynomial (fraction-free elimination over the
/// polynomial ring).
Polynomial symbolicDet(PolyMatrix m);

}  // namespace algint
