#include "algint/catalog.hpp"
#include "algint/errors.hpp"
#include "algint/measure.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace algint;
using algint::testing::Gen;

namespace {

Scalar norm(const Element& a) {
  Scalar n;
  for (const Scalar& c : a.coeffs()) n += c * c;
  return n;
}

Element power(const Element& x, int n) {
  Element r = Element::one(x.algebra());
  for (int i = 0; i < n; ++i) r = multiply(r, x);
  return r;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("names and parameters") {
    CHECK(catalog::build("grassmann", {3})->dim() == 8);
    CHECK(catalog::build("paragrassmann", {6})->dim() == 7);
    CHECK(catalog::build("octonions")->dim() == 8);
    CHECK_THROWS_AS(catalog::build("grassmann", {4}), BadParams);
    CHECK_THROWS_AS(catalog::build("grassmann", {0}), BadParams);
    CHECK_THROWS_AS(catalog::build("grassmann"), BadParams);
    CHECK_THROWS_AS(catalog::build("paragrassmann", {7}), BadParams);
    CHECK_THROWS_AS(catalog::build("complex", {1}), BadParams);
    CHECK_THROWS_AS(catalog::build("sedenions"), UnknownName);
    CHECK_THROWS_AS(catalog::defaultGauge("sedenions"), UnknownName);
  }

  TEST_CASE("algebra names parse back to catalog keys") {
    for (const auto& key : catalog::allEntries()) {
      const auto a = catalog::build(key.name, key.params);
      const auto back = catalog::parseAlgebraName(a->name());
      CHECK(back.name == key.name);
      CHECK(back.params == key.params);
    }
    CHECK_THROWS_AS(catalog::parseAlgebraName("random"), UnknownName);
  }

  TEST_CASE("grassmann labels and order") {
    CHECK(catalog::build("grassmann", {1})->labels() == std::vector<std::string>{"1", "theta"});
    CHECK(catalog::build("grassmann", {2})->labels() ==
          std::vector<std::string>{"1", "theta1", "theta2", "theta1theta2"});
    CHECK(catalog::build("grassmann", {3})->labels() ==
          std::vector<std::string>{"1", "theta1", "theta2", "theta3", "theta1theta2", "theta1theta3",
                                   "theta2theta3", "theta1theta2theta3"});
  }

  TEST_CASE("grassmann generators anticommute") {
    for (long n = 1; n <= 3; ++n) {
      const auto a = catalog::build("grassmann", {n});
      for (std::size_t i = 1; i <= std::size_t(n); ++i)
        for (std::size_t j = 1; j <= std::size_t(n); ++j) {
          const Element ti = Element::basis(a, i), tj = Element::basis(a, j);
          CHECK((multiply(ti, tj) + multiply(tj, ti)).isZero());
        }
      CHECK(a->isAssociative());
    }
    // theta1 theta2 theta3 is the top monomial with sign +1, theta3 theta2 theta1 with -1.
    const auto g3 = catalog::build("grassmann", {3});
    auto prod3 = [&](std::size_t a, std::size_t b, std::size_t c) {
      return multiply(multiply(Element::basis(g3, a), Element::basis(g3, b)), Element::basis(g3, c));
    };
    CHECK(prod3(1, 2, 3) == Element::basis(g3, 7));
    CHECK(prod3(3, 2, 1) == Element::basis(g3, 7) * Scalar(-1));
    CHECK(prod3(2, 1, 3) == Element::basis(g3, 7) * Scalar(-1));
  }

  TEST_CASE("paragrassmann nilpotency") {
    for (long p = 1; p <= 6; ++p) {
      const auto a = catalog::build("paragrassmann", {p});
      const Element theta = Element::basis(a, 1);
      CHECK(power(theta, p + 1).isZero());
      CHECK(power(theta, p) == Element::basis(a, p));
      CHECK(a->labels()[p] == (p == 1 ? "theta" : "theta^" + std::to_string(p)));
    }
  }

  TEST_CASE("norm composition on basis pairs") {
    for (const char* name : {"complex", "quaternions", "octonions"}) {
      const auto a = catalog::build(name);
      for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) {
          const Element p = multiply(Element::basis(a, i), Element::basis(a, j));
          CHECK(norm(p) == 1);
        }
    }
  }

  TEST_CASE("norm composition on random pairs") {
    Gen g(91);
    for (const char* name : {"complex", "quaternions", "octonions"}) {
      const auto a = catalog::build(name);
      for (int t = 0; t < 100; ++t) {
        const Element x = g.element(a), y = g.element(a);
        CHECK(norm(multiply(x, y)) == norm(x) * norm(y));
      }
    }
  }

  TEST_CASE("octonion table is a division algebra table") {
    // Imaginary units square to -1 and anticommute pairwise.
    const auto o = catalog::build("octonions");
    for (std::size_t i = 1; i < 8; ++i) {
      CHECK(multiply(Element::basis(o, i), Element::basis(o, i)) == Element::basis(o, 0) * Scalar(-1));
      for (std::size_t j = 1; j < 8; ++j)
        if (i != j)
          CHECK((multiply(Element::basis(o, i), Element::basis(o, j)) +
                 multiply(Element::basis(o, j), Element::basis(o, i)))
                    .isZero());
    }
  }

  TEST_CASE("su2 structure") {
    const auto s = catalog::build("su2");
    CHECK(s->labels() == std::vector<std::string>{"J1", "J2", "J3"});
    CHECK(s->f(0, 1, 2) == 1);
    CHECK(s->f(1, 0, 2) == -1);
    CHECK_FALSE(s->identityIndex().has_value());
  }

  TEST_CASE("default gauges") {
    CHECK(catalog::defaultGauge("grassmann", {1}) == std::vector<Pin>{{0, 0}, {1, 1}});
    CHECK(catalog::defaultGauge("quaternions") == std::vector<Pin>{{0, 1}});
    CHECK(catalog::defaultGauge("su2").empty());
    const auto g2 = catalog::defaultGauge("grassmann", {2});
    CHECK(g2 == std::vector<Pin>{{0, 0}, {1, 0}, {2, 0}, {3, 1}});
  }

  TEST_CASE("every entry but su2 has a measure under its default gauge") {
    for (const auto& key : catalog::allEntries()) {
      const auto a = catalog::build(key.name, key.params);
      CAPTURE(a->name());
      if (key.name == "su2") {
        try {
          findMeasure(a, catalog::defaultGauge(key.name, key.params));
          FAIL("su2 should have no measure");
        } catch (const NoMeasure& e) {
          CHECK(e.certified());
        }
        continue;
      }
      const Measure m = findMeasure(a, catalog::defaultGauge(key.name, key.params));
      CHECK(verifyCompleteness(m).passed());
    }
  }
}
