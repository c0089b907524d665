#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubble/laurent.hpp"
#include "bubble/number_field.hpp"

namespace bubble {

// Per-colour parameter: an exact rational value, a root-of-unity order l >= 2
// (delta = 2cos(pi/l), q = e^{i pi / l}), or a generic indeterminate.
struct ParamEntry {
  enum class Kind { Generic, Rational, RootOfUnity };
  Kind kind = Kind::Generic;
  Rat value;   // Rational only
  long order = 0;  // RootOfUnity only
};

class ParameterSpec {
 public:
  ParameterSpec() = default;
  explicit ParameterSpec(std::vector<ParamEntry> entries);

  static ParameterSpec generic(int m);
  // tokens: "<integer>", "<p>/<q>", "root:<l>", or "generic"
  static ParameterSpec parse(const std::vector<std::string>& tokens);

  int m() const { return static_cast<int>(entries_.size()); }
  const ParamEntry& entry(int j) const { return entries_.at(j); }

  bool all_specialized() const;
  bool any_generic() const { return !all_specialized(); }
  bool is_generic(int j) const {
    return entries_.at(j).kind == ParamEntry::Kind::Generic;
  }
  // specialized with exact value 0 (rational 0 or root:2)
  bool is_zero(int j) const;
  bool all_zero() const;
  bool any_zero() const;

  // Root-of-unity order for the representation-theoretic formulas.  Declared
  // orders are returned as-is; rational 0 -> 2 and +-1 -> 3 (the only
  // rational delta = 2cos(pi k/l) values by Niven); +-2 is the rejected
  // l = 1 case and throws; other rationals and generics have no order.
  std::optional<long> order(int j) const;
  bool any_root_of_unity() const;

  std::string token(int j) const;  // canonical re-print of one entry

 private:
  std::vector<ParamEntry> entries_;
};

// Exact evaluation of Laurent scalars at a fully specialized parameter point.
// All root-of-unity colours are embedded in the single real cyclotomic field
// Q(2cos(pi/L)) with L = lcm of the declared orders; delta_j maps to the
// Dickson polynomial D_{L/l_j} of the generator (z^k + z^-k = D_k(z + z^-1)).
class Evaluator {
 public:
  explicit Evaluator(const ParameterSpec& point);

  const FieldPtr& field() const { return field_; }
  const Algebraic& value(int j) const { return values_.at(j); }

  Algebraic operator()(const Laurent& p) const;

 private:
  FieldPtr field_;
  std::vector<Algebraic> values_;
};

}  // namespace bubble
