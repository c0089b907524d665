#include "bubble/params.hpp"

#include <numeric>
#include <sstream>

namespace bubble {

ParameterSpec::ParameterSpec(std::vector<ParamEntry> entries)
    : entries_(std::move(entries)) {
  for (const ParamEntry& e : entries_) {
    if (e.kind == ParamEntry::Kind::RootOfUnity && e.order < 2)
      throw std::invalid_argument(
          "parameter: root-of-unity order must be >= 2 (l = 1 means q = +-1)");
  }
}

ParameterSpec ParameterSpec::generic(int m) {
  return ParameterSpec(std::vector<ParamEntry>(m));
}

ParameterSpec ParameterSpec::parse(const std::vector<std::string>& tokens) {
  std::vector<ParamEntry> entries;
  entries.reserve(tokens.size());
  for (const std::string& t : tokens) {
    ParamEntry e;
    if (t == "generic") {
      e.kind = ParamEntry::Kind::Generic;
    } else if (t.rfind("root:", 0) == 0) {
      e.kind = ParamEntry::Kind::RootOfUnity;
      try {
        e.order = std::stol(t.substr(5));
      } catch (const std::exception&) {
        throw std::invalid_argument("parameter: bad order in '" + t + "'");
      }
      if (e.order < 2)
        throw std::invalid_argument(
            "parameter: root-of-unity order must be >= 2 (l = 1 means q = +-1)");
    } else {
      e.kind = ParamEntry::Kind::Rational;
      e.value = parse_rational(t);
    }
    entries.push_back(std::move(e));
  }
  return ParameterSpec(std::move(entries));
}

bool ParameterSpec::all_specialized() const {
  for (const ParamEntry& e : entries_)
    if (e.kind == ParamEntry::Kind::Generic) return false;
  return true;
}

bool ParameterSpec::is_zero(int j) const {
  const ParamEntry& e = entries_.at(j);
  if (e.kind == ParamEntry::Kind::Rational) return e.value == 0;
  if (e.kind == ParamEntry::Kind::RootOfUnity) return e.order == 2;
  return false;
}

bool ParameterSpec::all_zero() const {
  for (int j = 0; j < m(); ++j)
    if (!is_zero(j)) return false;
  return m() > 0;
}

bool ParameterSpec::any_zero() const {
  for (int j = 0; j < m(); ++j)
    if (is_zero(j)) return true;
  return false;
}

std::optional<long> ParameterSpec::order(int j) const {
  const ParamEntry& e = entries_.at(j);
  switch (e.kind) {
    case ParamEntry::Kind::RootOfUnity:
      return e.order;
    case ParamEntry::Kind::Rational:
      if (e.value == 0) return 2;
      if (e.value == 1 || e.value == -1) return 3;
      if (e.value == 2 || e.value == -2)
        throw std::invalid_argument(
            "parameter: delta = +-2 means q = +-1 (l = 1), which is rejected");
      return std::nullopt;  // |delta| not a root-of-unity value: generic factor
    case ParamEntry::Kind::Generic:
      return std::nullopt;
  }
  return std::nullopt;
}

bool ParameterSpec::any_root_of_unity() const {
  for (int j = 0; j < m(); ++j) {
    const ParamEntry& e = entries_[j];
    if (e.kind == ParamEntry::Kind::RootOfUnity) return true;
    if (e.kind == ParamEntry::Kind::Rational &&
        (e.value == 0 || e.value == 1 || e.value == -1))
      return true;
  }
  return false;
}

std::string ParameterSpec::token(int j) const {
  const ParamEntry& e = entries_.at(j);
  switch (e.kind) {
    case ParamEntry::Kind::Generic:
      return "generic";
    case ParamEntry::Kind::Rational:
      return rat_str(e.value);
    case ParamEntry::Kind::RootOfUnity:
      return "root:" + std::to_string(e.order);
  }
  return "generic";
}

namespace {

// D_k(y) with z^k + z^-k = D_k(z + z^-1): D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2}
Algebraic dickson(const Algebraic& y, long k) {
  Algebraic prev = Algebraic::from_rational(y.field(), Rat(2));
  if (k == 0) return prev;
  Algebraic cur = y;
  for (long i = 2; i <= k; ++i) {
    Algebraic next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Evaluator::Evaluator(const ParameterSpec& point) {
  if (!point.all_specialized())
    throw std::invalid_argument("evaluate: parameter point has generic entries");

  long lcm_order = 1;
  for (int j = 0; j < point.m(); ++j) {
    const ParamEntry& e = point.entry(j);
    if (e.kind == ParamEntry::Kind::RootOfUnity)
      lcm_order = std::lcm(lcm_order, e.order);
  }
  field_ = NumberField::cosine(lcm_order);
  const Algebraic gen = Algebraic::generator(field_);

  values_.reserve(point.m());
  for (int j = 0; j < point.m(); ++j) {
    const ParamEntry& e = point.entry(j);
    if (e.kind == ParamEntry::Kind::Rational) {
      values_.push_back(Algebraic::from_rational(field_, e.value));
    } else {
      values_.push_back(dickson(gen, lcm_order / e.order));
    }
  }
}

Algebraic Evaluator::operator()(const Laurent& p) const {
  if (p.vars() != static_cast<int>(values_.size()))
    throw std::invalid_argument("evaluate: colour count mismatch");
  Algebraic acc = Algebraic::from_rational(field_, Rat(0));
  for (const auto& [exps, coeff] : p.terms()) {
    Algebraic term = Algebraic::from_rational(field_, Rat(coeff));
    for (int j = 0; j < p.vars(); ++j) {
      if (exps[j] == 0) continue;
      if (exps[j] < 0 && values_[j].is_zero())
        throw std::domain_error("non-invertible specialization");
      term *= values_[j].pow(exps[j]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace bubble
