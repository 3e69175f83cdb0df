#pragma once

// Table of Frullani-type identities with their integrands, closed forms,
// parameter constraints and default verification grids.
//
// Every entry states its integrand exactly as tabulated and is checked by the
// quadrature pipeline matching its evaluation class. Entry ids follow the
// table numbering: "GR-x.y.z" for Gradshteyn-Ryzhik, "R-3.n" for the
// Ramanujan notebook list.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frullani/limit_probe.hpp"
#include "frullani/verification.hpp"

namespace frullani {

enum class EvalClass { SmoothDecay, FiniteInterval, Oscillatory };

std::string_view to_string(EvalClass c);

/// Verification tolerance used when the caller does not give one.
double class_tolerance(EvalClass c);

struct Constraint {
  std::string prose;
  std::function<bool(const Params&)> holds;
};

/// The generator f and scales that turn an entry into
/// int (f(a x^p) - f(b x^p)) / x dx, with the analytic end values of f.
struct FrullaniForm {
  RealFunction generator;
  double a, b, power;
  double f0, finf;
};

struct CatalogEntry {
  std::string id;
  std::string source;
  std::vector<std::string> parameters;
  std::vector<Constraint> constraints;
  EvalClass eval_class;
  std::function<RealFunction(const Params&)> integrand;
  std::function<double(const Params&)> closed_form;
  /// Frequencies present in the integrand; oscillatory entries only.
  std::function<std::vector<double>(const Params&)> frequencies;
  std::function<std::optional<FrullaniForm>(const Params&)> frullani_form;
  /// The two parameters whose equality makes the integral vanish, if any.
  std::optional<std::pair<std::string, std::string>> scale_pair;
  std::vector<Params> default_grid;

  std::string constraint_prose() const;
};

struct EntrySummary {
  std::string id;
  std::string source;
  std::string constraints;
  EvalClass eval_class;
};

class ConstraintViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownEntry : public std::out_of_range {
public:
  explicit UnknownEntry(const std::string& id) : std::out_of_range("unknown catalog entry '" + id + "'") {}
};

struct Instance {
  RealFunction integrand;
  double expected;
};

class Catalog {
public:
  /// The shared immutable catalog.
  static const Catalog& instance();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<EntrySummary> list_entries() const;

  /// Resolves ids and aliases (R-3.7 -> GR-4.324.2 with n,a,b -> a,p,q).
  /// Returns the entry and the parameters renamed to its letters.
  std::pair<const CatalogEntry*, Params> resolve(std::string_view id, const Params& params) const;
  const CatalogEntry& find(std::string_view id) const;
  bool contains(std::string_view id) const;

  /// Throws ConstraintViolation naming the first violated predicate.
  Instance instantiate(std::string_view id, const Params& params) const;

  /// Never throws for known ids; failures land in the record status.
  VerificationRecord verify_entry(std::string_view id, const Params& params,
                                  std::optional<double> tol = std::nullopt) const;

  std::vector<Params> default_grid(std::string_view id) const;

private:
  Catalog();
  std::vector<CatalogEntry> entries_;
};

/// "a=1;b=2" with shortest round-trip numbers, keys in lexical order.
std::string format_params(const Params& params);

}  // namespace frullani
