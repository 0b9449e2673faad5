#pragma once

#include "algint/errors.hpp"
#include "algint/measure.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace algint::io {

using Json = nlohmann::ordered_json;

/// Malformed file content (bad JSON, wrong types, stale digests).
class FormatError : public Error {
 public:
  using Error::Error;
};

Json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const Json& j);

/// Rows of canonical scalar strings.
Json matrixToJson(const Matrix& m);
Matrix matrixFromJson(const Json& j);
Json vectorToJson(const Vector& v);

/// Canonical algebra file: name, dim, labels, and the nonzero triples in
/// (i, j, k) order with canonical scalars.
Json algebraToJson(const FiniteAlgebra& a);
/// Parses and validates. Throws FormatError or InvalidStructureConstants.
AlgebraPtr algebraFromJson(const Json& j);
AlgebraPtr parseAlgebra(std::string_view text);
std::string serializeAlgebra(const FiniteAlgebra& a);

/// "sha256:<hex>" of the canonical algebra serialization.
std::string algebraDigest(const FiniteAlgebra& a);
std::string sha256Hex(std::string_view bytes);

Json measureToJson(const Measure& m);
/// Rebuilds the measure from mu, rejecting files whose digest, M or C do not
/// match `algebra`. Throws FormatError.
Measure measureFromJson(const Json& j, const AlgebraPtr& algebra);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view content);

}  // namespace algint::io
