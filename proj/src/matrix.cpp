#include "algint/matrix.hpp"

#include "algint/errors.hpp"

#include <algorithm>
#include <utility>

namespace algint {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged row list");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.isZero(); });
}

bool Matrix::isIdentity() const {
  auto k = scalarMultipleOfIdentity();
  return k && k->isOne();
}

std::optional<Scalar> Matrix::scalarMultipleOfIdentity() const {
  if (!isSquare()) return std::nullopt;
  const Scalar k = rows_ == 0 ? Scalar(1) : (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (r == c ? e != k : !e.isZero()) return std::nullopt;
    }
  }
  return k;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).isZero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).isZero() && !v[k].isZero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar det(const Matrix& m) {
  if (!m.isSquare()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);

  // Clear denominators row by row so elimination runs over the integers.
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = m(r, c).raw();
      a[r * n + c] = q.get_num() * (l / q.get_den());
    }
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Scalar(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const mpz_class pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  mpq_class d(sign * a[n * n - 1], scale);
  return Scalar(std::move(d));
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix r = m;
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t p = lead;
    while (p < r.rows() && r(p, c).isZero()) ++p;
    if (p == r.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(lead, j));
    }
    const Scalar inv = Scalar(1) / r(lead, c);
    for (std::size_t j = c; j < r.cols(); ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, c).isZero()) continue;
      const Scalar factor = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) {
        if (!r(lead, j).isZero()) r(i, j) -= factor * r(lead, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

void normalizeLeading(Vector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.isZero(); });
  if (it == v.end() || it->isOne()) return;
  const Scalar inv = Scalar(1) / *it;
  for (auto& e : v) e *= inv;
}

bool isZeroVector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : pivots) isPivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, f);
    normalizeLeading(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solveParticular(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t row = 0; row < pivots.size(); ++row) x[pivots[row]] = r(row, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.isSquare()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const Matrix r = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Singular("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

}  // namespace algint
