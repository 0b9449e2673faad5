#include "algint/cli.hpp"

#include "algint/catalog.hpp"
#include "algint/expression.hpp"
#include "algint/reps.hpp"
#include "algint/symmetry.hpp"
#include "algint/tensor.hpp"

#include <CLI11.hpp>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace algint::cli {

using io::Json;

io::Json Report::toJson() const {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  Json in = Json::array();
  for (const auto& [path, digest] : inputs) in.push_back(Json{{"path", path}, {"sha256", digest}});
  j["inputs"] = std::move(in);
  j["status"] = exitCode == kOk ? "ok" : "error";
  j["exitCode"] = exitCode;
  if (exitCode != kOk) j["error"] = error;
  j["findings"] = findings;
  return j;
}

namespace {

void flatten(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out.emplace_back(prefix, node.is_string() ? node.get<std::string>() : node.dump());
}

}  // namespace

std::string Report::toTable(bool color) const {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(findings, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());

  std::ostringstream os;
  const char* on = color ? (exitCode == kOk ? "\x1b[32m" : "\x1b[31m") : "";
  const char* off = color ? "\x1b[0m" : "";
  os << command << ": " << on << (exitCode == kOk ? "ok" : "error (exit " + std::to_string(exitCode) + ")") << off
     << "\n";
  if (exitCode != kOk) os << "  " << error << "\n";
  for (const auto& [k, v] : rows) os << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
  return os.str();
}

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  bool json = false;
  std::string file;
  std::vector<std::string> pins;
  bool defaultGauge = false;
  std::string out;
  std::string measure;
  std::string element;
  std::string matrix;
  bool star = false;
  std::string catalogName;
  std::vector<long> params;
};

struct Context {
  Report report;
  std::vector<AlgebraPtr> keepAlive;

  std::string load(const std::string& path) {
    std::string bytes = io::readFile(path);
    report.inputs.emplace_back(path, io::sha256Hex(bytes));
    return bytes;
  }
  AlgebraPtr loadAlgebra(const std::string& path) { return io::parseAlgebra(load(path)); }
  Json loadJson(const std::string& path) {
    const std::string bytes = load(path);
    try {
      return Json::parse(bytes);
    } catch (const Json::exception& e) {
      throw io::FormatError("invalid JSON in '" + path + "': " + e.what());
    }
  }
};

Json indexPair(const std::optional<std::array<std::size_t, 2>>& w) {
  if (!w) return nullptr;
  return Json::array({(*w)[0], (*w)[1]});
}

Json optionalIndex(std::optional<std::size_t> i) { return i ? Json(*i) : Json(nullptr); }

std::vector<Pin> parsePins(const std::vector<std::string>& specs) {
  std::vector<Pin> pins;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    const std::string idx = s.substr(0, eq);
    if (eq == std::string::npos || idx.empty() || idx.size() > 6 ||
        !std::all_of(idx.begin(), idx.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("bad pin '" + s + "'; expected k=p/q, e.g. --pin 0=1");
    }
    try {
      pins.push_back({std::stoul(idx), Scalar::parse(s.substr(eq + 1))});
    } catch (const BadScalar& e) {
      throw UsageError("bad pin '" + s + "': " + e.what());
    }
  }
  return pins;
}

void doInspect(Context& ctx, const Options& o) {
  const AlgebraPtr a = ctx.loadAlgebra(o.file);
  auto& f = ctx.report.findings;
  f["name"] = a->name();
  f["dim"] = a->dim();
  f["abelian"] = a->isAbelian();
  f["associative"] = a->isAssociative();
  f["identityIndex"] = optionalIndex(a->identityIndex());
  const RepIdentityReport r = checkRepIdentities(buildReps(a));
  f["repIdentities"] = Json{{"a", r.transpose.holds},
                            {"b", r.rightHomomorphism.holds},
                            {"c", r.leftHomomorphism.holds},
                            {"d", r.commute.holds}};
  f["witnesses"] = Json{{"a", r.transpose.witness ? Json((*r.transpose.witness)[0]) : Json(nullptr)},
                        {"b", indexPair(r.rightHomomorphism.witness)},
                        {"c", indexPair(r.leftHomomorphism.witness)},
                        {"d", indexPair(r.commute.witness)}};
}

Json completenessJson(const CompletenessReport& c) {
  Json failed = Json::array();
  for (const auto& [i, j] : c.failedPairs) failed.push_back(Json::array({i, j}));
  return Json{{"pairsChecked", c.pairsChecked},
              {"failedPairs", failed},
              {"failedIntertwiners", c.failedIntertwiners},
              {"identityConsistent", c.identityConsistent ? Json(*c.identityConsistent) : Json(nullptr)},
              {"passed", c.passed()}};
}

void doMeasure(Context& ctx, const Options& o) {
  const AlgebraPtr a = ctx.loadAlgebra(o.file);
  std::vector<Pin> pins = parsePins(o.pins);
  if (o.defaultGauge) {
    if (!pins.empty()) throw UsageError("--default-gauge cannot be combined with --pin");
    const auto key = catalog::parseAlgebraName(a->name());
    pins = catalog::defaultGauge(key.name, key.params);
  }
  auto& f = ctx.report.findings;
  const MomentSpace space = momentSpace(a);
  f["freeDim"] = space.freeDim;
  Json basis = Json::array();
  for (const auto& v : space.basis) basis.push_back(io::vectorToJson(v));
  f["momentSpace"] = std::move(basis);

  const Measure m = findMeasure(a, pins);
  f["mu"] = io::vectorToJson(m.mu);
  f["M"] = io::matrixToJson(m.M);
  f["C"] = io::matrixToJson(m.C);
  Json gauge = Json::array();
  for (const auto& p : m.gauge) gauge.push_back(Json::array({p.index, p.value.str()}));
  f["gauge"] = std::move(gauge);
  const CompletenessReport c = verifyCompleteness(m);
  f["completeness"] = completenessJson(c);
  if (!c.passed()) throw InternalInconsistency("constructed measure fails the completeness check");
  if (!o.out.empty()) {
    io::writeFile(o.out, io::measureToJson(m).dump(2) + "\n");
    f["out"] = o.out;
  }
}

void doIntegrate(Context& ctx, const Options& o) {
  const AlgebraPtr a = ctx.loadAlgebra(o.file);
  const Measure m = io::measureFromJson(ctx.loadJson(o.measure), a);
  const Element e = evalExpression(a, o.element);
  auto& f = ctx.report.findings;
  f["element"] = e.str();
  f["value"] = integrate(m, e).str();
}

void doAuto(Context& ctx, const Options& o) {
  const AlgebraPtr a = ctx.loadAlgebra(o.file);
  const Matrix S = io::matrixFromJson(ctx.loadJson(o.matrix));
  auto& f = ctx.report.findings;
  Automorphism au = checkAutomorphism(a, S);
  f["automorphism"] = true;
  f["det"] = det(S).str();
  if (o.measure.empty()) return;

  const Measure m = io::measureFromJson(ctx.loadJson(o.measure), a);
  try {
    f["k"] = scaleFactor(au, m).str();
  } catch (const NotScalar& e) {
    f["k"] = nullptr;
    f["notScalar"] = io::matrixToJson(e.product());
    return;
  }
  const TransformReport t = verifyMeasureTransform(au, m);
  f["transform"] = Json{{"muPrimed", io::vectorToJson(t.muPrimed)},
                        {"inMomentSpace", t.inMomentSpace},
                        {"nonsingular", t.nonsingular},
                        {"primedCompleteness", t.primedCompleteness},
                        {"preservesMeasure", t.preservesMeasure},
                        {"passed", t.passed()}};
  if (!t.passed()) throw InternalInconsistency("transformed measure fails its checks");
}

void doDerivation(Context& ctx, const Options& o) {
  const AlgebraPtr a = ctx.loadAlgebra(o.file);
  const Matrix D = io::matrixFromJson(ctx.loadJson(o.matrix));
  auto& f = ctx.report.findings;
  const Derivation d = checkDerivation(a, D);
  f["derivation"] = true;
  f["nilpotent"] = isNilpotent(D);
  if (o.measure.empty()) return;

  const Measure m = io::measureFromJson(ctx.loadJson(o.measure), a);
  const ByPartsReport r = byParts(m, d);
  Json bp{{"dMu", io::vectorToJson(r.dMu)}, {"holds", r.holds}};
  if (!r.nilpotent) {
    bp["exponentiation"] = "NotNilpotent";
  } else {
    bp["exponentiation"] = "exact";
    bp["exponential"] = io::matrixToJson(*r.exponential);
    bp["k"] = r.k ? Json(r.k->str()) : Json(nullptr);
    bp["consistent"] = r.consistent ? Json(*r.consistent) : Json(nullptr);
  }
  f["byParts"] = std::move(bp);
  if (r.consistent && !*r.consistent) {
    throw InternalInconsistency("k = 1 and D mu = 0 disagree for a nilpotent derivation");
  }
}

void doTensor(Context& ctx, const Options& o) {
  const AlgebraPtr a = ctx.loadAlgebra(o.file);
  const TensorAlgebra t = buildTensor(a);
  io::writeFile(o.out, io::serializeAlgebra(*t.product) + "\n");
  auto& f = ctx.report.findings;
  f["name"] = t.product->name();
  f["dim"] = t.product->dim();
  f["abelian"] = t.product->isAbelian();
  f["associative"] = t.product->isAssociative();
  f["digest"] = io::algebraDigest(*t.product);
  f["out"] = o.out;
}

void doIntegrate2(Context& ctx, const Options& o) {
  const AlgebraPtr product = ctx.loadAlgebra(o.file);
  const SecondKindMeasure m = secondKindMeasure(product);
  const Element e = evalExpression(product, o.element);
  auto& f = ctx.report.findings;
  f["baseDim"] = m.baseDim;
  f["element"] = e.str();
  f["value"] = integrate2(m, e).str();
}

void doCatalog(Context& ctx, const Options& o) {
  const AlgebraPtr a = catalog::build(o.catalogName, o.params);
  io::writeFile(o.out, io::serializeAlgebra(*a) + "\n");
  auto& f = ctx.report.findings;
  f["name"] = a->name();
  f["dim"] = a->dim();
  f["identityIndex"] = optionalIndex(a->identityIndex());
  f["abelian"] = a->isAbelian();
  f["associative"] = a->isAssociative();
  Json gauge = Json::array();
  for (const auto& p : catalog::defaultGauge(o.catalogName, o.params)) {
    gauge.push_back(Json::array({p.index, p.value.str()}));
  }
  f["defaultGauge"] = std::move(gauge);
  f["out"] = o.out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integration functionals on finite-dimensional algebras", "algint"};
  app.require_subcommand(1);
  Options o;

  auto addJson = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit the report as JSON"); };
  auto addFile = [&](CLI::App* c, const char* what) { c->add_option("FILE", o.file, what)->required(); };

  auto* inspect = app.add_subcommand("inspect", "Structural flags and representation identities");
  addFile(inspect, "Algebra file");
  addJson(inspect);

  auto* measure = app.add_subcommand("measure", "Find an integration measure");
  addFile(measure, "Algebra file");
  measure->add_option("--pin", o.pins, "Gauge pin k=p/q (repeatable)");
  measure->add_flag("--default-gauge", o.defaultGauge, "Use the catalog gauge for a catalog algebra");
  measure->add_option("--out", o.out, "Write the measure file here");
  addJson(measure);

  auto* integ = app.add_subcommand("integrate", "Integrate an element with a saved measure");
  addFile(integ, "Algebra file");
  integ->add_option("--measure", o.measure, "Measure file")->required();
  integ->add_option("--element", o.element, "Element expression")->required();
  addJson(integ);

  auto* autom = app.add_subcommand("auto", "Check an automorphism and its scale factor");
  addFile(autom, "Algebra file");
  autom->add_option("--matrix", o.matrix, "Matrix file S (x'_i = S_ij x_j)")->required();
  autom->add_option("--measure", o.measure, "Measure file");
  addJson(autom);

  auto* deriv = app.add_subcommand("derivation", "Check a derivation and integration by parts");
  addFile(deriv, "Algebra file");
  deriv->add_option("--matrix", o.matrix, "Matrix file D (D x_i = D_ij x_j)")->required();
  deriv->add_option("--measure", o.measure, "Measure file");
  addJson(deriv);

  auto* tensor = app.add_subcommand("tensor", "Build the product of an algebra with its star copy");
  addFile(tensor, "Algebra file");
  tensor->add_flag("--star", o.star, "Tensor with the star copy (the only supported product)");
  tensor->add_option("-o,--out", o.out, "Output algebra file")->required();
  addJson(tensor);

  auto* integ2 = app.add_subcommand("integrate2", "Second-kind integral on a product algebra");
  addFile(integ2, "Product algebra file written by 'tensor'");
  integ2->add_option("--element", o.element, "Element expression")->required();
  addJson(integ2);

  auto* cat = app.add_subcommand("catalog", "Write a catalog algebra");
  cat->add_option("NAME", o.catalogName, "grassmann, paragrassmann, complex, quaternions, octonions, su2")
      ->required();
  cat->add_option("PARAMS", o.params, "Integer parameters");
  cat->add_option("-o,--out", o.out, "Output algebra file")->required();
  addJson(cat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string sub;
    for (const auto* s : app.get_subcommands()) sub = s->get_name();
    err << "error: " << e.what() << "\nhint: run 'algint " << (sub.empty() ? "" : sub + " ") << "--help'\n";
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  Context ctx;
  ctx.report.command = chosen->get_name();

  auto fail = [&](int code, const std::string& msg, const char* hint = nullptr) {
    ctx.report.exitCode = code;
    ctx.report.error = msg;
    err << "error: " << msg << "\n";
    if (hint) err << "hint: " << hint << "\n";
  };

  try {
    const std::string& name = ctx.report.command;
    if (name == "inspect") doInspect(ctx, o);
    else if (name == "measure") doMeasure(ctx, o);
    else if (name == "integrate") doIntegrate(ctx, o);
    else if (name == "auto") doAuto(ctx, o);
    else if (name == "derivation") doDerivation(ctx, o);
    else if (name == "tensor") doTensor(ctx, o);
    else if (name == "integrate2") doIntegrate2(ctx, o);
    else if (name == "catalog") doCatalog(ctx, o);
  } catch (const NoMeasure& e) {
    ctx.report.findings["certified"] = e.certified();
    ctx.report.findings["certificate"] = e.certificate();
    if (!e.determinant().empty()) ctx.report.findings["determinant"] = e.determinant();
    fail(kNoMeasure, e.what());
  } catch (const GaugeInfeasible& e) {
    fail(kGaugeInfeasible, e.what(), "adjust or drop the --pin values");
  } catch (const NotAnAutomorphism& e) {
    ctx.report.findings["automorphism"] = false;
    ctx.report.findings["witness"] = e.witness();
    fail(kNotAMorphism, e.what());
  } catch (const NotADerivation& e) {
    ctx.report.findings["derivation"] = false;
    ctx.report.findings["witness"] = e.witness();
    fail(kNotAMorphism, e.what());
  } catch (const NotInvertible& e) {
    ctx.report.findings["automorphism"] = false;
    fail(kNotAMorphism, e.what());
  } catch (const InternalInconsistency& e) {
    fail(kInternal, e.what());
  } catch (const UsageError& e) {
    fail(kUsage, e.what(), "see 'algint --help'");
  } catch (const Error& e) {
    fail(kUsage, e.what(), "check the input files and expression syntax");
  } catch (const std::exception& e) {
    fail(kUsage, std::string("unexpected failure: ") + e.what());
  }

  if (o.json) {
    out << ctx.report.toJson().dump(2) << "\n";
  } else {
    const bool color = &out == &std::cout && ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
    out << ctx.report.toTable(color);
  }
  return ctx.report.exitCode;
}

}  // namespace algint::cli
