#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdc/copula.hpp"

namespace qdc {

// Parsed family request: a registry name plus key=value parameters.  The mix
// family nests two children through the string-valued keys "left"/"right"
// and dotted keys such as "left.rho=0.5".
struct FamilySpec {
  std::string name;
  std::map<std::string, double> params;
  std::map<std::string, std::string> strings;
};

// Parses "k1=v1,k2=v2,..."; values that name nested families stay strings.
FamilySpec parse_family_spec(const std::string& name, const std::string& params);

// Instantiates a registry family; throws DomainError on unknown names,
// missing or out-of-range parameters.
Copula make_family(const FamilySpec& spec);

const std::vector<std::string>& family_names();

}  // namespace qdc
