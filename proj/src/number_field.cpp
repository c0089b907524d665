#include "bubble/number_field.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace bubble {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// exact division of integer polynomials, throws if not exact
IntPoly div_exact(IntPoly num, const IntPoly& den) {
  if (den.empty()) throw std::invalid_argument("poly division by zero");
  trim(num);
  if (num.empty()) return {};
  if (num.size() < den.size()) throw std::domain_error("poly division not exact");
  IntPoly q(num.size() - den.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Int& lead = num[k + den.size() - 1];
    Int qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                den.back().get_mpz_t());
    if (r != 0) throw std::domain_error("poly division not exact");
    q[k] = qc;
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= qc * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw std::domain_error("poly division not exact");
  return q;
}

}  // namespace

IntPoly cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::map<long, IntPoly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (z^n - 1) / prod_{d|n, d<n} Phi_d
  std::function<IntPoly(long)> phi = [&](long k) -> IntPoly {
    auto hit = cache.find(k);
    if (hit != cache.end()) return hit->second;
    IntPoly num(k + 1, Int(0));
    num[0] = -1;
    num[k] = 1;
    for (long d = 1; d < k; ++d) {
      if (k % d == 0) num = div_exact(std::move(num), phi(d));
    }
    cache.emplace(k, num);
    return num;
  };
  return phi(n);
}

IntPoly minpoly_for_order(long l) {
  if (l < 2)
    throw std::invalid_argument(
        "minpoly_for_order: order must be >= 2 (l = 1 means q = +-1, which is "
        "rejected)");
  IntPoly phi = cyclotomic(2 * l);
  const long d = static_cast<long>(phi.size() - 1) / 2;  // phi(2l)/2

  // Phi_{2l} is palindromic of degree 2d; peel off a_k * z^{d-k} (z^2+1)^k.
  IntPoly rem = phi;
  IntPoly p(d + 1, Int(0));
  for (long k = d; k >= 0; --k) {
    Int a = (static_cast<long>(rem.size()) > d + k) ? rem[d + k] : Int(0);
    p[k] = a;
    if (a == 0) continue;
    // subtract a * z^{d-k} * (z^2+1)^k
    IntPoly term{1};
    IntPoly z2p1{1, 0, 1};
    for (long i = 0; i < k; ++i) term = mul(term, z2p1);
    for (std::size_t i = 0; i < term.size(); ++i)
      rem[d - k + i] -= a * term[i];
  }
  trim(rem);
  if (!rem.empty())
    throw std::logic_error("minpoly_for_order: symmetrization failed");
  trim(p);
  return p;
}

double ipoly_eval(const IntPoly& p, double x) {
  double r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i].get_d();
  return r;
}

std::string ipoly_str(const IntPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    const bool neg = p[i] < 0;
    Int mag = neg ? Int(-p[i]) : p[i];
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

NumberField::NumberField(IntPoly monic_minpoly) : minpoly_(std::move(monic_minpoly)) {
  trim(minpoly_);
  if (minpoly_.size() < 2 || minpoly_.back() != 1)
    throw std::invalid_argument("NumberField: minpoly must be monic, degree >= 1");
  degree_ = static_cast<int>(minpoly_.size()) - 1;

  // y^degree = -(c_{d-1} y^{d-1} + ... + c_0); extend up to y^{2d-2}
  if (degree_ >= 1) {
    std::vector<Rat> base(degree_);
    for (int i = 0; i < degree_; ++i) base[i] = Rat(-minpoly_[i]);
    powers_.push_back(base);
    for (int k = 1; k <= degree_ - 2; ++k) {
      const std::vector<Rat>& prev = powers_.back();
      std::vector<Rat> next(degree_, Rat(0));
      // next = y * prev mod minpoly
      for (int i = degree_ - 1; i >= 1; --i) next[i] = prev[i - 1];
      const Rat carry = prev[degree_ - 1];
      if (carry != 0)
        for (int i = 0; i < degree_; ++i) next[i] += carry * base[i];
      powers_.push_back(std::move(next));
    }
  }
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = std::make_shared<NumberField>(IntPoly{0, 1});
  return q;
}

FieldPtr NumberField::cosine(long l) {
  if (l == 1) return rationals();
  static std::map<long, FieldPtr> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  FieldPtr f = std::make_shared<NumberField>(minpoly_for_order(l));
  cache.emplace(l, f);
  return f;
}

Algebraic::Algebraic(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_->degree())
    throw std::invalid_argument("Algebraic: coefficient length != degree");
  for (Rat& q : c_) q.canonicalize();
}

Algebraic Algebraic::from_rational(FieldPtr field, const Rat& q) {
  std::vector<Rat> c(field->degree(), Rat(0));
  c[0] = q;
  return Algebraic(std::move(field), std::move(c));
}

Algebraic Algebraic::generator(FieldPtr field) {
  if (field->degree() == 1) {
    // y is congruent to the rational root -c0
    Rat root(-field->minpoly()[0]);
    return from_rational(std::move(field), root);
  }
  std::vector<Rat> c(field->degree(), Rat(0));
  c[1] = 1;
  return Algebraic(std::move(field), std::move(c));
}

bool Algebraic::is_zero() const {
  for (const Rat& q : c_)
    if (q != 0) return false;
  return true;
}

bool Algebraic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Algebraic::rational_value() const {
  if (!is_rational()) throw std::domain_error("Algebraic: not rational");
  return c_[0];
}

void Algebraic::check_compatible(const Algebraic& a, const Algebraic& b) {
  if (a.field_ != b.field_ && !a.field_->same(*b.field_))
    throw std::invalid_argument("Algebraic: elements of different fields");
}

Algebraic Algebraic::operator-() const {
  std::vector<Rat> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Algebraic(field_, std::move(c));
}

Algebraic operator+(const Algebraic& a, const Algebraic& b) {
  Algebraic::check_compatible(a, b);
  std::vector<Rat> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return Algebraic(a.field_, std::move(c));
}

Algebraic operator-(const Algebraic& a, const Algebraic& b) {
  Algebraic::check_compatible(a, b);
  std::vector<Rat> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return Algebraic(a.field_, std::move(c));
}

Algebraic operator*(const Algebraic& a, const Algebraic& b) {
  Algebraic::check_compatible(a, b);
  const int d = a.field_->degree();
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> c(prod.begin(), prod.begin() + d);
  const auto& table = a.field_->power_table();
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const std::vector<Rat>& red = table[k - d];
    for (int i = 0; i < d; ++i) c[i] += prod[k] * red[i];
  }
  return Algebraic(a.field_, std::move(c));
}

Algebraic Algebraic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const int d = field_->degree();
  if (d == 1) {
    std::vector<Rat> c{Rat(1) / c_[0]};
    return Algebraic(field_, std::move(c));
  }

  // extended Euclid in Q[y] on (self, minpoly): s*self + t*minpoly = gcd
  using Poly = std::vector<Rat>;
  auto deg = [](const Poly& p) -> int {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  Poly r0(c_.begin(), c_.end());
  Poly r1(d + 1);
  for (int i = 0; i <= d; ++i) r1[i] = Rat(field_->minpoly()[i]);
  Poly s0{Rat(1)}, s1{Rat(0)};

  while (deg(r1) >= 0) {
    const int dr0 = deg(r0), dr1 = deg(r1);
    if (dr0 < dr1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // r0 -= (lead0/lead1) y^(dr0-dr1) * r1, same on s
    const Rat q = r0[dr0] / r1[dr1];
    const int shift = dr0 - dr1;
    for (int i = 0; i <= dr1; ++i) r0[i + shift] -= q * r1[i];
    if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, Rat(0));
    for (std::size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= q * s1[i];
    if (deg(r0) < deg(r1)) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  const int g = deg(r0);
  if (g != 0)
    throw std::domain_error("Algebraic::inverse: gcd with minpoly not constant");
  const Rat lead = r0[0];
  std::vector<Rat> c(d, Rat(0));
  for (std::size_t i = 0; i < s0.size() && i < static_cast<std::size_t>(d); ++i)
    c[i] = s0[i] / lead;
  return Algebraic(field_, std::move(c));
}

Algebraic Algebraic::pow(long k) const {
  Algebraic base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k)
                          : static_cast<unsigned long>(k);
  Algebraic r = from_rational(field_, Rat(1));
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

bool operator==(const Algebraic& a, const Algebraic& b) {
  Algebraic::check_compatible(a, b);
  return a.c_ == b.c_;
}

std::string Algebraic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat mag = c_[i] < 0 ? Rat(-c_[i]) : c_[i];
    if (first) {
      if (c_[i] < 0) os << "-";
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace bubble
