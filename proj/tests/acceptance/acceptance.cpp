// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include "algint/catalog.hpp"
#include "algint/errors.hpp"
#include "algint/json_io.hpp"
#include "algint/measure.hpp"
#include "algint/reps.hpp"
#include "algint/symmetry.hpp"
#include "algint/tensor.hpp"
#include "support/c_space_oracle.hpp"
#include "support/generators.hpp"
#include "support/workdir.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace algint;
using algint::io::Json;
using algint::testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "failed: " << what << "; ";
    pass = pass && cond;
  }
};

AlgebraPtr cat(const std::string& name, std::vector<long> p = {}) { return catalog::build(name, p); }

Measure defaultMeasure(const std::string& name, std::vector<long> p = {}) {
  return findMeasure(cat(name, p), catalog::defaultGauge(name, p));
}

void completenessExact(Outcome& o, const Measure& m, const std::string& label) {
  const auto r = verifyCompleteness(m);
  const std::size_t n = m.algebra->dim();
  o.require(r.pairsChecked == n * n, label + " checks all pairs");
  o.require(r.passed(), label + " completeness");
}

// Hand-solved oracle for grassmann(1). With mu = (a, b) the moment matrix is
// M = [[a, b], [b, 0]]. X_0 = Pi_0 = 1, and for x_1 = theta
// M Pi_1 = [[a,b],[b,0]] [[0,0],[1,0]] = [[b,0],[0,0]],
// X_1 M = [[0,1],[0,0]] [[a,b],[b,0]] = [[b,0],[0,0]],
// so every (a, b) intertwines, det M = -b^2, and the pins a = 0, b = 1 give
// M = C = [[0,1],[1,0]].
void berezin(Outcome& o) {
  const auto g1 = cat("grassmann", {1});
  const Measure m = findMeasure(g1, {{0, 0}, {1, 1}});
  o.require(m.mu == Vector{0, 1}, "mu = (0, 1)");
  o.require(integrate(m, Element::basis(g1, 0)) == 0, "integral of 1 is 0");
  o.require(integrate(m, Element::basis(g1, 1)) == 1, "integral of theta is 1");
  o.require(m.M == Matrix{{0, 1}, {1, 0}}, "M matches the hand solution");
  o.require(m.C == Matrix{{0, 1}, {1, 0}}, "C = [[0,1],[1,0]]");
  completenessExact(o, m, "grassmann(1)");
  o.detail << "mu = (0, 1), C = [[0,1],[1,0]], 4/4 pairs";
}

void multiBerezin(Outcome& o) {
  const auto g2 = cat("grassmann", {2});
  const Measure m = defaultMeasure("grassmann", {2});
  o.require(integrate(m, Element::basis(g2, 3)) == 1, "integral of theta1theta2 is 1");
  for (std::size_t i = 0; i < 3; ++i) o.require(integrate(m, Element::basis(g2, i)).isZero(), "lower moments vanish");
  completenessExact(o, m, "grassmann(2)");
  o.detail << "mu = (0, 0, 0, 1), 16/16 pairs";
}

void paraGrassmann(Outcome& o) {
  for (long p : {2, 3}) {
    const Measure m = defaultMeasure("paragrassmann", {p});
    Vector expected(p + 1);
    expected[p] = 1;
    o.require(m.mu == expected, "mu = e_p for p = " + std::to_string(p));
    Matrix anti(p + 1, p + 1);
    for (long i = 0; i <= p; ++i) anti(i, p - i) = 1;
    o.require(m.M == anti, "antidiagonal Hankel M for p = " + std::to_string(p));
    completenessExact(o, m, "paragrassmann(" + std::to_string(p) + ")");
  }
  o.detail << "p = 2, 3: antidiagonal M, completeness exact";
}

void divisionAlgebras(Outcome& o) {
  for (const char* name : {"quaternions", "octonions"}) {
    const Measure m = defaultMeasure(name);
    const std::size_t n = m.algebra->dim();
    Vector d(n, Scalar(-1));
    d[0] = 1;
    o.require(m.M == Matrix::diagonal(d), std::string(name) + " M = diag(1,-1,...,-1)");
    completenessExact(o, m, name);
  }
  const auto oct = cat("octonions");
  std::size_t composed = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Element p = multiply(Element::basis(oct, i), Element::basis(oct, j));
      Scalar normSq;
      for (const Scalar& c : p.coeffs()) normSq += c * c;
      composed += normSq == 1;
    }
  o.require(composed == 64, "octonion norm composition on 64 basis pairs");
  o.detail << "16/16 and 64/64 pairs, octonion composition " << composed << "/64";
}

void lieObstruction(Outcome& o) {
  try {
    findMeasure(cat("su2"));
    o.require(false, "su2 must have no measure");
  } catch (const NoMeasure& e) {
    o.require(e.certified(), "certified");
    o.require(e.certificate() == "symbolic-determinant", "certificate is the symbolic determinant");
    o.require(e.determinant() == "0", "det M(mu) expands to 0");
    o.detail << "NoMeasure certified by " << e.certificate() << ", det = " << e.determinant();
  }
}

void repIdentities(Outcome& o) {
  Gen g(2024);
  std::vector<AlgebraPtr> algebras;
  for (const auto& key : catalog::allEntries()) algebras.push_back(catalog::build(key.name, key.params));
  const std::size_t catalogCount = algebras.size();
  for (int t = 0; t < 100; ++t) algebras.push_back(g.symmetrizedAlgebra(g.integer(1, 4)));
  for (const auto& a : algebras) {
    try {
      const auto r = checkRepIdentities(buildReps(a));
      o.require(r.transpose.holds == a->isAbelian(), a->name() + ": (a) iff abelian");
      o.require(r.rightHomomorphism.holds == a->isAssociative(), a->name() + ": (b) iff associative");
      o.require(r.leftHomomorphism.holds == a->isAssociative(), a->name() + ": (c) iff associative");
      o.require(r.commute.holds == a->isAssociative(), a->name() + ": (d) iff associative");
      if (&a - algebras.data() >= std::ptrdiff_t(catalogCount)) o.require(a->isAbelian(), "symmetrized is abelian");
    } catch (const InternalInconsistency& e) {
      o.require(false, e.what());
    }
  }
  o.detail << catalogCount << " catalog algebras, 100 symmetrized tensors";
}

void scaleLaw(Outcome& o) {
  const auto p2 = cat("paragrassmann", {2});
  const Measure m = defaultMeasure("paragrassmann", {2});
  Automorphism a = checkAutomorphism(p2, Matrix::diagonal(Vector{1, 2, 4}));
  const Scalar k = scaleFactor(a, m);
  o.require(k == 4, "k = 4 for paragrassmann(2)");
  const auto t = verifyMeasureTransform(a, m);
  o.require(t.passed() && t.primedCompleteness, "primed completeness");

  Automorphism b = checkAutomorphism(cat("grassmann", {1}), Matrix::diagonal(Vector{1, 3}));
  const Scalar k3 = scaleFactor(b, defaultMeasure("grassmann", {1}));
  o.require(k3 == 3, "k = 3 for grassmann(1)");
  o.detail << "k = " << k.str() << " and k = " << k3.str() << ", primed completeness " << (t.passed() ? "exact" : "failed");
}

void byPartsCriterion(Outcome& o) {
  const auto q = cat("quaternions");
  Matrix D(4, 4);
  D(2, 3) = 2;
  D(3, 2) = -2;
  try {
    const Derivation d = checkDerivation(q, D);
    const auto r = byParts(defaultMeasure("quaternions"), d);
    o.require(r.holds, "ad(e1): D mu = 0");
  } catch (const NotADerivation& e) {
    o.require(false, std::string("ad(e1) Leibniz: ") + e.what());
  }

  const auto p2 = cat("paragrassmann", {2});
  const Measure m = defaultMeasure("paragrassmann", {2});
  const auto r = byParts(m, checkDerivation(p2, Matrix::diagonal(Vector{0, 1, 2})));
  o.require(!r.holds && r.dMu == Vector{0, 0, 2}, "number operator: D mu = (0, 0, 2)");
  // The scaling generated by the number operator, lambda = 2.
  Automorphism s = checkAutomorphism(p2, Matrix::diagonal(Vector{1, 2, 4}));
  const Scalar k = scaleFactor(s, m);
  o.require(k != 1, "its scaling has k != 1");
  o.detail << "ad(e1) D mu = 0; number operator D mu = (0, 0, 2) with k = " << k.str();
}

void secondKind(Outcome& o) {
  Gen g(99);
  const auto g1 = cat("grassmann", {1});
  const auto t = buildTensor(g1);
  const auto m = secondKindMeasure(t);
  o.require(m.moments == Vector{1, 0, 0, 1}, "moments (1, 0, 0, 1)");
  int invariant = 0, rejected = 0, nonAutomorphisms = 0;
  for (int r = 0; r < 25; ++r) {
    const Matrix S = g.orthogonal(2);
    invariant += checkInvariance(t, S, StarAction::Conjugate).invariant;
    try {
      checkAutomorphism(g1, S);
    } catch (const NotAnAutomorphism&) {
      ++nonAutomorphisms;
    }
  }
  for (int r = 0; r < 25; ++r) rejected += !checkInvariance(t, g.nonOrthogonal(2), StarAction::Plain).invariant;
  o.require(invariant == 25, "25 orthogonal matrices are invariant");
  o.require(rejected == 25, "25 non-orthogonal matrices are not");
  o.require(nonAutomorphisms >= 1, "some orthogonal S is not an automorphism");
  o.detail << "orthogonal " << invariant << "/25 invariant, non-orthogonal " << rejected
           << "/25 rejected, " << nonAutomorphisms << " orthogonal non-automorphisms";
}

void oracleEquivalence(Outcome& o) {
  int compared = 0;
  for (const auto& key : catalog::allEntries()) {
    const auto a = catalog::build(key.name, key.params);
    if (a->dim() > 3) continue;
    ++compared;
    const auto oracle = algint::testing::cSpaceOracle(*a);
    const auto space = momentSpace(a);
    bool solver = true;
    try {
      const Measure m = findMeasure(a);
      // The solver's pick lies in the oracle's family.
      std::vector<Vector> rows = oracle.moments;
      rows.push_back(m.mu);
      o.require(rank(Matrix::fromRows(rows)) == oracle.span(), a->name() + ": solver mu in oracle span");
    } catch (const NoMeasure&) {
      solver = false;
    }
    o.require(solver == oracle.exists(), a->name() + ": existence agrees");
    if (!oracle.exists()) continue;
    for (const Vector& mu : oracle.moments) {
      o.require(space.contains(mu), a->name() + ": oracle mu in moment space");
    }
    o.require(oracle.span() == space.freeDim, a->name() + ": families have equal dimension");
  }
  o.detail << compared << " catalog algebras of dim <= 3";
}

// Mutations that always produce an invalid algebra file.
std::string mutate(std::mt19937& rng, const std::string& text) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  Json j = Json::parse(text);
  switch (pick(9)) {
    case 0:  // strict prefix
      return text.substr(0, pick(text.size()));
    case 1: {  // structural byte outside strings
      std::vector<std::size_t> spots;
      bool inString = false;
      for (std::size_t i = 0; i <= text.size(); ++i) {
        if (!inString) spots.push_back(i);
        if (i < text.size() && text[i] == '"') inString = !inString;
      }
      const std::string bytes = "x{}[]:,#@!";
      std::string out = text;
      out.insert(spots[pick(spots.size())], 1, bytes[pick(bytes.size())]);
      return out;
    }
    case 2: {
      const char* bad[] = {"1/0", "abc", "", "1//2", "--3", "0x1", "1.5", "+2", "1/-2"};
      j["f"][pick(j["f"].size())][3] = bad[pick(std::size(bad))];
      return j.dump();
    }
    case 3: {
      const long dim = j["dim"].get<long>();
      const long idx = pick(2) ? dim + long(pick(5)) : -1 - long(pick(5));
      j["f"][pick(j["f"].size())][pick(3)] = idx;
      return j.dump();
    }
    case 4:
      j["f"].push_back(j["f"][pick(j["f"].size())]);
      return j.dump();
    case 5:
      j["dim"] = j["dim"].get<long>() + (pick(2) ? 1 : -1);
      return j.dump();
    case 6: {
      const char* keys[] = {"name", "dim", "labels", "f"};
      j.erase(keys[pick(4)]);
      return j.dump();
    }
    case 7:
      j["labels"][1] = j["labels"][0];
      return j.dump();
    default: {
      const char* keys[] = {"name", "dim", "labels", "f"};
      const Json wrong[] = {Json(nullptr), Json(true), Json::object(), Json("7"), Json(2.5)};
      j[keys[pick(4)]] = wrong[pick(std::size(wrong))];
      if (j["name"].is_string() && j["dim"].is_number_integer() && j["labels"].is_array() && j["f"].is_array())
        j["name"] = Json::array();
      return j.dump();
    }
  }
}

void robustness(Outcome& o) {
  std::mt19937 rng(7);
  std::vector<std::string> seeds;
  for (const auto& key : catalog::allEntries()) seeds.push_back(io::serializeAlgebra(*catalog::build(key.name, key.params)));
  algint::testing::WorkDir dir("acceptance");
  const std::string path = dir.file("mutant.json");
  int exit1 = 0, withDiagnostic = 0;
  const int total = 1000;
  for (int t = 0; t < total; ++t) {
    const std::string& seed = seeds[std::uniform_int_distribution<std::size_t>(0, seeds.size() - 1)(rng)];
    io::writeFile(path, mutate(rng, seed));
    const auto r = algint::testing::runCli({"inspect", path});
    exit1 += r.code == cli::kUsage;
    withDiagnostic += r.err.find("error:") != std::string::npos;
    if (r.code != cli::kUsage && o.pass) o.require(false, "mutant " + std::to_string(t) + " exited " + std::to_string(r.code));
  }
  o.require(exit1 == total, "every mutant exits 1");
  o.require(withDiagnostic == total, "every mutant prints a diagnostic");
  o.detail << exit1 << "/" << total << " mutants exit 1 with a diagnostic";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"berezin-recovery", berezin},
      {"multi-generator-berezin", multiBerezin},
      {"paragrassmann", paraGrassmann},
      {"quaternions-octonions", divisionAlgebras},
      {"lie-obstruction", lieObstruction},
      {"representation-identities", repIdentities},
      {"scale-law", scaleLaw},
      {"integration-by-parts", byPartsCriterion},
      {"second-kind-integration", secondKind},
      {"oracle-equivalence", oracleEquivalence},
      {"robustness", robustness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail.str()
              << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
