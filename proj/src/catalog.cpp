#include "algint/catalog.hpp"

#include "algint/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace algint::catalog {

namespace {

struct Tensor {
  explicit Tensor(std::size_t d) : dim(d), f(d * d * d) {}
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { f[(i * dim + j) * dim + k] = v; }
  std::size_t dim;
  std::vector<Scalar> f;
};

long singleParam(const std::string& name, const std::vector<long>& params, long lo, long hi) {
  if (params.size() != 1 || params[0] < lo || params[0] > hi) {
    throw BadParams(name + " takes one parameter in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return params[0];
}

void noParams(const std::string& name, const std::vector<long>& params) {
  if (!params.empty()) throw BadParams(name + " takes no parameters");
}

// Monomials of N anticommuting generators as bitmasks, ordered by degree then
// lexicographically by their sorted generator lists.
std::vector<std::uint32_t> grassmannBasis(long n) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t m = 0; m < (1u << n); ++m) basis.push_back(m);
  auto key = [](std::uint32_t m) {
    std::vector<int> idx;
    for (int b = 0; b < 32; ++b)
      if (m & (1u << b)) idx.push_back(b);
    return idx;
  };
  std::stable_sort(basis.begin(), basis.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da < db;
    return key(a) < key(b);
  });
  return basis;
}

AlgebraPtr grassmann(long n) {
  const auto basis = grassmannBasis(n);
  const std::size_t d = basis.size();
  std::vector<std::string> labels;
  for (std::uint32_t m : basis) {
    if (m == 0) {
      labels.emplace_back("1");
      continue;
    }
    std::string l;
    for (int b = 0; b < n; ++b)
      if (m & (1u << b)) l += n == 1 ? "theta" : "theta" + std::to_string(b + 1);
    labels.push_back(l);
  }
  auto indexOf = [&](std::uint32_t m) {
    return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), m) - basis.begin());
  };

  Tensor t(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint32_t a = basis[i], b = basis[j];
      if (a & b) continue;
      // Moving each generator of b left past the larger generators of a.
      int swaps = 0;
      for (int gb = 0; gb < n; ++gb) {
        if (!(b & (1u << gb))) continue;
        swaps += std::popcount(a >> (gb + 1));
      }
      t.set(i, j, indexOf(a | b), swaps % 2 == 0 ? 1 : -1);
    }
  }
  return FiniteAlgebra::fromDense("grassmann(" + std::to_string(n) + ")", labels, t.f);
}

AlgebraPtr paragrassmann(long p) {
  const std::size_t d = static_cast<std::size_t>(p) + 1;
  std::vector<std::string> labels{"1", "theta"};
  for (long e = 2; e <= p; ++e) labels.push_back("theta^" + std::to_string(e));
  Tensor t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) t.set(i, j, i + j, 1);
  return FiniteAlgebra::fromDense("paragrassmann(" + std::to_string(p) + ")", labels, t.f);
}

AlgebraPtr complexNumbers() {
  Tensor t(2);
  t.set(0, 0, 0, 1);
  t.set(0, 1, 1, 1);
  t.set(1, 0, 1, 1);
  t.set(1, 1, 0, -1);
  return FiniteAlgebra::fromDense("complex", {"1", "i"}, t.f);
}

// e_a e_b = e_c along each oriented triple (and cyclically), reversed order
// flips the sign, e_a^2 = -1.
AlgebraPtr cayleyDickson(const std::string& name, std::size_t dim,
                         const std::vector<std::array<std::size_t, 3>>& triples) {
  Tensor t(dim);
  std::vector<std::string> labels{"1"};
  for (std::size_t a = 1; a < dim; ++a) labels.push_back("e" + std::to_string(a));
  for (std::size_t a = 0; a < dim; ++a) {
    t.set(0, a, a, 1);
    t.set(a, 0, a, 1);
  }
  for (std::size_t a = 1; a < dim; ++a) t.set(a, a, 0, -1);
  for (const auto& [a, b, c] : triples) {
    for (const auto& [x, y, z] : {std::array{a, b, c}, std::array{b, c, a}, std::array{c, a, b}}) {
      t.set(x, y, z, 1);
      t.set(y, x, z, -1);
    }
  }
  return FiniteAlgebra::fromDense(name, labels, t.f);
}

AlgebraPtr su2() {
  Tensor t(3);
  for (const auto& [a, b, c] : {std::array<std::size_t, 3>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    t.set(a, b, c, 1);
    t.set(b, a, c, -1);
  }
  return FiniteAlgebra::fromDense("su2", {"J1", "J2", "J3"}, t.f);
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"grassmann", "paragrassmann", "complex", "quaternions", "octonions", "su2"};
  return n;
}

AlgebraPtr build(const std::string& name, const std::vector<long>& params) {
  if (name == "grassmann") return grassmann(singleParam(name, params, 1, 3));
  if (name == "paragrassmann") return paragrassmann(singleParam(name, params, 1, 6));
  if (name == "complex") {
    noParams(name, params);
    return complexNumbers();
  }
  if (name == "quaternions") {
    noParams(name, params);
    return cayleyDickson("quaternions", 4, {{1, 2, 3}});
  }
  if (name == "octonions") {
    noParams(name, params);
    return cayleyDickson("octonions", 8,
                         {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}});
  }
  if (name == "su2") {
    noParams(name, params);
    return su2();
  }
  throw UnknownName("unknown catalog algebra '" + name + "'");
}

std::vector<Pin> defaultGauge(const std::string& name, const std::vector<long>& params) {
  if (name == "grassmann" || name == "paragrassmann") {
    const std::size_t dim = build(name, params)->dim();
    std::vector<Pin> pins;
    for (std::size_t k = 0; k < dim; ++k) pins.push_back({k, k + 1 == dim ? 1 : 0});
    return pins;
  }
  if (name == "complex" || name == "quaternions" || name == "octonions") {
    noParams(name, params);
    return {{0, 1}};
  }
  if (name == "su2") {
    noParams(name, params);
    return {};
  }
  throw UnknownName("unknown catalog algebra '" + name + "'");
}

CatalogKey parseAlgebraName(const std::string& algebraName) {
  const auto open = algebraName.find('(');
  if (open == std::string::npos) {
    if (std::find(names().begin(), names().end(), algebraName) == names().end() ||
        algebraName == "grassmann" || algebraName == "paragrassmann") {
      throw UnknownName("'" + algebraName + "' is not a catalog algebra name");
    }
    return {algebraName, {}};
  }
  const std::string base = algebraName.substr(0, open);
  const std::string arg = algebraName.substr(open + 1);
  if ((base != "grassmann" && base != "paragrassmann") || arg.size() < 2 || arg.back() != ')') {
    throw UnknownName("'" + algebraName + "' is not a catalog algebra name");
  }
  const std::string digits = arg.substr(0, arg.size() - 1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UnknownName("'" + algebraName + "' is not a catalog algebra name");
  }
  return {base, {std::stol(digits)}};
}

std::vector<CatalogKey> allEntries() {
  std::vector<CatalogKey> out;
  for (long n = 1; n <= 3; ++n) out.push_back({"grassmann", {n}});
  for (long p = 1; p <= 6; ++p) out.push_back({"paragrassmann", {p}});
  out.push_back({"complex", {}});
  out.push_back({"quaternions", {}});
  out.push_back({"octonions", {}});
  out.push_back({"su2", {}});
  return out;
}

}  // namespace algint::catalog
