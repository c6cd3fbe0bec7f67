#include "qdc/registry.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

#include "qdc/errors.hpp"
#include "qdc/families.hpp"

namespace qdc {

namespace {

const std::set<std::string> kStringKeys = {"left", "right"};

double parse_real(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || std::isnan(v)) {
    throw DomainError("parameter " + key + ": expected a real number, got '" + text + "'");
  }
  return v;
}

double require(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw DomainError("family " + spec.name + ": missing parameter " + key);
  }
  return it->second;
}

double get_or(const FamilySpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

void reject_unknown(const FamilySpec& spec, const std::set<std::string>& known) {
  for (const auto& [k, v] : spec.params) {
    if (!known.count(k)) {
      throw DomainError("family " + spec.name + ": unknown parameter " + k);
    }
  }
  if (spec.name != "mix" && !spec.strings.empty()) {
    throw DomainError("family " + spec.name + ": unexpected parameter " +
                      spec.strings.begin()->first);
  }
}

// Child spec for mix: "left"/"right" names the family, "left.key" its params.
FamilySpec child_spec(const FamilySpec& spec, const std::string& role,
                      const std::string& fallback_name) {
  FamilySpec child;
  child.name = fallback_name;
  auto it = spec.strings.find(role);
  if (it != spec.strings.end()) child.name = it->second;
  const std::string prefix = role + ".";
  for (const auto& [k, v] : spec.params) {
    if (k.rfind(prefix, 0) == 0) child.params[k.substr(prefix.size())] = v;
  }
  for (const auto& [k, v] : spec.strings) {
    if (k.rfind(prefix, 0) == 0) child.strings[k.substr(prefix.size())] = v;
  }
  return child;
}

Copula make_family_depth(const FamilySpec& spec, int depth);

Copula make_mix(const FamilySpec& spec, int depth) {
  const double omega = require(spec, "omega");
  if (omega < 0.0 || omega > 1.0) {
    throw DomainError("family mix: omega outside [0,1]");
  }
  const Copula left = make_family_depth(child_spec(spec, "left", "frechet-upper"), depth + 1);
  const Copula right = make_family_depth(child_spec(spec, "right", "frechet-lower"), depth + 1);
  return convex_mix(left, right, UnitValue(omega));
}

Copula make_family_depth(const FamilySpec& spec, int depth) {
  if (depth > 4) throw DomainError("family mix: nesting too deep");
  const std::string& n = spec.name;

  if (n == "independence") {
    reject_unknown(spec, {});
    return make_product();
  }
  if (n == "frechet-upper") {
    reject_unknown(spec, {});
    return make_frechet_upper();
  }
  if (n == "frechet-lower") {
    reject_unknown(spec, {});
    return make_frechet_lower();
  }
  if (n == "gaussian") {
    reject_unknown(spec, {"rho"});
    return make_gaussian(GaussianParams{require(spec, "rho")});
  }
  if (n == "student-t") {
    reject_unknown(spec, {"rho", "nu"});
    const double nu = require(spec, "nu");
    if (nu < 1.0 || nu != std::floor(nu)) {
      throw DomainError("family student-t: nu must be a positive integer");
    }
    return make_student_t(StudentTParams{require(spec, "rho"), static_cast<int>(nu)});
  }
  if (n == "cuadras-auge") {
    reject_unknown(spec, {"theta"});
    return make_cuadras_auge(require(spec, "theta"));
  }
  if (n == "ev-flat") {
    reject_unknown(spec, {"theta"});
    return make_ev_flat(require(spec, "theta"));
  }
  if (n == "archimedean-ex8") {
    reject_unknown(spec, {"theta"});
    return make_archimedean_ex8(require(spec, "theta"));
  }
  if (n == "clayton") {
    reject_unknown(spec, {"alpha"});
    return make_clayton(require(spec, "alpha"));
  }
  if (n == "gumbel") {
    reject_unknown(spec, {"alpha"});
    return make_gumbel(require(spec, "alpha"));
  }
  if (n == "shuffle3") {
    reject_unknown(spec, {});
    return make_shuffle();
  }
  if (n == "regression") {
    reject_unknown(spec, {"beta0", "beta1"});
    return make_regression_model(get_or(spec, "beta0", 0.0), get_or(spec, "beta1", 0.0));
  }
  if (n == "mix") {
    return make_mix(spec, depth);
  }
  std::string known;
  for (const auto& f : family_names()) known += (known.empty() ? "" : ", ") + f;
  throw DomainError("unknown family '" + n + "' (known: " + known + ")");
}

}  // namespace

FamilySpec parse_family_spec(const std::string& name, const std::string& params) {
  FamilySpec spec;
  spec.name = name;
  std::size_t pos = 0;
  while (pos < params.size()) {
    std::size_t comma = params.find(',', pos);
    if (comma == std::string::npos) comma = params.size();
    const std::string item = params.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw DomainError("--params: expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key.empty()) throw DomainError("--params: empty key in '" + item + "'");
    const std::size_t dot = key.find('.');
    const std::string tail = dot == std::string::npos ? key : key.substr(dot + 1);
    if (kStringKeys.count(tail)) {
      spec.strings[key] = val;
    } else {
      spec.params[key] = parse_real(key, val);
    }
  }
  return spec;
}

Copula make_family(const FamilySpec& spec) { return make_family_depth(spec, 0); }

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "independence", "frechet-upper", "frechet-lower", "gaussian",
      "student-t",    "cuadras-auge",  "ev-flat",       "archimedean-ex8",
      "clayton",      "gumbel",        "shuffle3",      "regression",
      "mix"};
  return names;
}

}  // namespace qdc
