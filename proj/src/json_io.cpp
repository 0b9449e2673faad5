#include "algint/json_io.hpp"

#include "algint/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <set>
#include <sstream>

namespace algint::io {

namespace {

std::int64_t integerFromJson(const Json& j, const char* what) {
  if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return static_cast<std::int64_t>(u);
    }
  }
  throw FormatError(std::string(what) + " must be an integer");
}

const Json& member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

void onlyKeys(const Json& obj, std::initializer_list<const char*> keys, const char* what) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw FormatError(std::string("unexpected key \"") + k + "\" in " + what);
  }
}

}  // namespace

Json scalarToJson(const Scalar& s) { return s.str(); }

Scalar scalarFromJson(const Json& j) {
  if (!j.is_string()) throw FormatError("scalars must be strings of the form \"p\" or \"p/q\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const BadScalar& e) {
    throw FormatError(e.what());
  }
}

Json vectorToJson(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalarToJson(s));
  return out;
}

Json matrixToJson(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vectorToJson(m.row(r)));
  return out;
}

Matrix matrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  std::vector<Vector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError("matrix rows must be arrays");
    Vector v;
    for (const auto& e : row) v.push_back(scalarFromJson(e));
    rows.push_back(std::move(v));
  }
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw FormatError("matrix rows have different lengths");
  }
  return Matrix::fromRows(rows);
}

Json algebraToJson(const FiniteAlgebra& a) {
  Json out;
  out["name"] = a.name();
  out["dim"] = a.dim();
  out["labels"] = a.labels();
  Json f = Json::array();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.f(i, j, k).isZero()) f.push_back(Json::array({i, j, k, a.f(i, j, k).str()}));
  out["f"] = std::move(f);
  return out;
}

AlgebraPtr algebraFromJson(const Json& j) {
  if (!j.is_object()) throw FormatError("algebra file must be a JSON object");
  onlyKeys(j, {"name", "dim", "labels", "f"}, "algebra file");
  RawAlgebra raw;
  const Json& name = member(j, "name");
  if (!name.is_string()) throw FormatError("\"name\" must be a string");
  raw.name = name.get<std::string>();
  raw.dim = integerFromJson(member(j, "dim"), "\"dim\"");

  const Json& labels = member(j, "labels");
  if (!labels.is_array()) throw FormatError("\"labels\" must be an array of strings");
  for (const auto& l : labels) {
    if (!l.is_string()) throw FormatError("\"labels\" must be an array of strings");
    raw.labels.push_back(l.get<std::string>());
  }

  const Json& f = member(j, "f");
  if (!f.is_array()) throw FormatError("\"f\" must be an array of [i, j, k, \"p/q\"] entries");
  for (const auto& t : f) {
    if (!t.is_array() || t.size() != 4) throw FormatError("each \"f\" entry must be [i, j, k, \"p/q\"]");
    if (!t[3].is_string()) throw FormatError("structure constants must be scalar strings");
    raw.triples.push_back({integerFromJson(t[0], "index"), integerFromJson(t[1], "index"),
                           integerFromJson(t[2], "index"), t[3].get<std::string>()});
  }
  return validate(raw);
}

AlgebraPtr parseAlgebra(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return algebraFromJson(j);
}

std::string serializeAlgebra(const FiniteAlgebra& a) { return algebraToJson(a).dump(); }

std::string sha256Hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string algebraDigest(const FiniteAlgebra& a) { return "sha256:" + sha256Hex(serializeAlgebra(a)); }

Json measureToJson(const Measure& m) {
  Json out;
  out["algebra"] = algebraDigest(*m.algebra);
  out["mu"] = vectorToJson(m.mu);
  out["M"] = matrixToJson(m.M);
  out["C"] = matrixToJson(m.C);
  Json gauge = Json::array();
  for (const auto& p : m.gauge) gauge.push_back(Json::array({p.index, p.value.str()}));
  out["gauge"] = std::move(gauge);
  return out;
}

Measure measureFromJson(const Json& j, const AlgebraPtr& algebra) {
  if (!j.is_object()) throw FormatError("measure file must be a JSON object");
  onlyKeys(j, {"algebra", "mu", "M", "C", "gauge"}, "measure file");
  const Json& tag = member(j, "algebra");
  if (!tag.is_string()) throw FormatError("\"algebra\" must be a digest string");
  if (tag.get<std::string>() != algebraDigest(*algebra)) {
    throw FormatError("measure was built for a different algebra (digest mismatch)");
  }

  const Json& muJson = member(j, "mu");
  if (!muJson.is_array()) throw FormatError("\"mu\" must be an array of scalars");
  Vector mu;
  for (const auto& e : muJson) mu.push_back(scalarFromJson(e));
  if (mu.size() != algebra->dim()) throw FormatError("\"mu\" length differs from algebra dim");

  std::vector<Pin> gauge;
  const Json& g = member(j, "gauge");
  if (!g.is_array()) throw FormatError("\"gauge\" must be an array of [k, \"p/q\"]");
  for (const auto& p : g) {
    if (!p.is_array() || p.size() != 2) throw FormatError("gauge entries must be [k, \"p/q\"]");
    const std::int64_t k = integerFromJson(p[0], "gauge index");
    if (k < 0 || static_cast<std::size_t>(k) >= algebra->dim()) throw FormatError("gauge index out of range");
    gauge.push_back({static_cast<std::size_t>(k), scalarFromJson(p[1])});
  }

  Measure m;
  try {
    m = Measure::fromMoments(algebra, std::move(mu), std::move(gauge));
  } catch (const Singular&) {
    throw FormatError("measure file has a singular moment matrix");
  }
  if (matrixFromJson(member(j, "M")) != m.M) throw FormatError("\"M\" does not match the moments");
  if (matrixFromJson(member(j, "C")) != m.C) throw FormatError("\"C\" is not the inverse of M");
  return m;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void writeFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << content;
  if (!out) throw FormatError("write to '" + path + "' failed");
}

}  // namespace algint::io
