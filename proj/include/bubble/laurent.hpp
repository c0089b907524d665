#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bubble/scalar.hpp"

namespace bubble {

// Multivariate Laurent polynomial with integer coefficients, one variable
// d0..d{m-1} per colour.  Stored in canonical form: exponent vectors mapped
// to nonzero coefficients, ordered lexicographically.
class Laurent {
 public:
  using Exponents = std::vector<long>;

  explicit Laurent(int vars) : vars_(vars) {
    if (vars < 0) throw std::invalid_argument("Laurent: negative variable count");
  }

  static Laurent constant(int vars, Int c) {
    Laurent p(vars);
    if (c != 0) p.terms_.emplace(Exponents(vars, 0), std::move(c));
    return p;
  }

  static Laurent one(int vars) { return constant(vars, 1); }

  static Laurent monomial(int vars, Exponents e, Int c) {
    if (static_cast<int>(e.size()) != vars)
      throw std::invalid_argument("Laurent: exponent arity mismatch");
    Laurent p(vars);
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  static Laurent variable(int vars, int idx, long exp = 1) {
    if (idx < 0 || idx >= vars)
      throw std::invalid_argument("Laurent: variable index out of range");
    Exponents e(vars, 0);
    e[idx] = exp;
    return monomial(vars, std::move(e), 1);
  }

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == Exponents(vars_, 0);
  }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  Laurent operator-() const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Laurent& operator+=(const Laurent& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  Laurent& operator-=(const Laurent& o) { return *this += -o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_vars(b);
    Laurent r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.vars_);
        for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          r.terms_.emplace(std::move(e), ca * cb);
        } else {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // integer power, k >= 0
  Laurent pow(long k) const {
    if (k < 0) throw std::invalid_argument("Laurent::pow: negative exponent");
    Laurent r = one(vars_);
    Laurent base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base = (k >>= 1) ? base * base : base;
    }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Exact division; throws if b does not divide *this in Z[d0^??1,...].
  Laurent exact_div(const Laurent& b) const;

  // canonical printing, variables d0..d{m-1}, terms in descending lex order
  std::string str() const;

 private:
  void check_vars(const Laurent& o) const {
    if (vars_ != o.vars_)
      throw std::invalid_argument("Laurent: colour count mismatch");
  }

  int vars_;
  std::map<Exponents, Int> terms_;
};

}  // namespace bubble
