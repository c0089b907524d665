#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bubble/scalar.hpp"

namespace bubble {

// Integer polynomials, dense ascending coefficients, trailing zeros trimmed.
using IntPoly = std::vector<Int>;

// Cyclotomic polynomial Phi_N, N >= 1.
IntPoly cyclotomic(long n);

// Minimal polynomial over Q of 2cos(pi/l), l >= 2, obtained from
// Phi_{2l}(z) = z^{phi(2l)/2} p(z + z^-1).  Degree phi(2l)/2.
IntPoly minpoly_for_order(long l);

double ipoly_eval(const IntPoly& p, double x);
std::string ipoly_str(const IntPoly& p, const std::string& var);

// Q[y]/(p(y)) for a monic irreducible integer polynomial p.  Degree-1 fields
// represent Q itself.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> rationals();
  // Q(2cos(pi/l)); l = 1 gives the rationals
  static std::shared_ptr<const NumberField> cosine(long l);

  explicit NumberField(IntPoly monic_minpoly);

  int degree() const { return degree_; }
  const IntPoly& minpoly() const { return minpoly_; }
  std::string minpoly_str() const { return ipoly_str(minpoly_, "a"); }

  bool same(const NumberField& o) const { return minpoly_ == o.minpoly_; }

  // y^(degree+k) reduced mod minpoly, k = 0 .. degree-2
  const std::vector<std::vector<Rat>>& power_table() const { return powers_; }

 private:
  IntPoly minpoly_;
  int degree_;
  std::vector<std::vector<Rat>> powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q[y]/(minpoly): rational coefficient vector of length degree.
class Algebraic {
 public:
  Algebraic() : field_(NumberField::rationals()), c_(1, Rat(0)) {}
  Algebraic(FieldPtr field, std::vector<Rat> coeffs);

  static Algebraic from_rational(FieldPtr field, const Rat& q);
  static Algebraic generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  Algebraic operator-() const;
  friend Algebraic operator+(const Algebraic& a, const Algebraic& b);
  friend Algebraic operator-(const Algebraic& a, const Algebraic& b);
  friend Algebraic operator*(const Algebraic& a, const Algebraic& b);
  Algebraic& operator+=(const Algebraic& o) { return *this = *this + o; }
  Algebraic& operator-=(const Algebraic& o) { return *this = *this - o; }
  Algebraic& operator*=(const Algebraic& o) { return *this = *this * o; }

  // multiplicative inverse via extended Euclid in Q[y]; throws on zero
  Algebraic inverse() const;
  Algebraic pow(long k) const;  // negative k via inverse

  friend bool operator==(const Algebraic& a, const Algebraic& b);
  friend bool operator!=(const Algebraic& a, const Algebraic& b) {
    return !(a == b);
  }

  std::string str() const;  // polynomial in generator "a"

 private:
  static void check_compatible(const Algebraic& a, const Algebraic& b);

  FieldPtr field_;
  std::vector<Rat> c_;
};

}  // namespace bubble
