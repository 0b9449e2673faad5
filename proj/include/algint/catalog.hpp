#pragma once

#include "algint/measure.hpp"

#include <string>
#include <vector>

namespace algint::catalog {

/// grassmann N (1..3), paragrassmann p (1..6), complex, quaternions,
/// octonions, su2. Throws UnknownName, BadParams.
AlgebraPtr build(const std::string& name, const std::vector<long>& params = {});

/// Conventional pins: top monomial 1 and lower moments 0 for the Grassmann
/// families, mu_0 = 1 for the division algebras, nothing for su2.
/// Throws UnknownName, BadParams.
std::vector<Pin> defaultGauge(const std::string& name, const std::vector<long>& params = {});

struct CatalogKey {
  std::string name;
  std::vector<long> params;
};

/// Recovers the catalog key from an algebra name such as "grassmann(2)";
/// throws UnknownName for names the catalog does not produce.
CatalogKey parseAlgebraName(const std::string& algebraName);

/// Every catalog algebra at every supported parameter.
std::vector<CatalogKey> allEntries();

const std::vector<std::string>& names();

}  // namespace algint::catalog
