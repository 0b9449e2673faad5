#include "algint/scalar.hpp"

#include "algint/errors.hpp"

#include <cctype>

namespace algint {

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw Singular("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!allDigits(num) || !allDigits(den)) {
    throw BadScalar("malformed scalar '" + std::string(text) + "'");
  }

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw BadScalar("zero denominator in scalar '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const { return value_.get_str(10); }

std::size_t Scalar::bitSize() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.isZero()) throw Singular("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace algint
