#include "bubble/laurent.hpp"

#include <sstream>

namespace bubble {

namespace {

// Shift exponents so every variable has minimum exponent 0; returns the
// applied shift.  Turns a Laurent polynomial into an ordinary one so the
// leading-term division below runs over a well-ordered monomial set.
std::vector<long> normalize_shift(const std::map<Laurent::Exponents, Int>& terms,
                                  int vars) {
  std::vector<long> shift(vars, 0);
  bool first = true;
  for (const auto& [e, c] : terms) {
    (void)c;
    for (int i = 0; i < vars; ++i)
      shift[i] = first ? e[i] : std::min(shift[i], e[i]);
    first = false;
  }
  return shift;
}

}  // namespace

Laurent Laurent::exact_div(const Laurent& b) const {
  check_vars(b);
  if (b.is_zero()) throw std::invalid_argument("Laurent::exact_div: zero divisor");
  if (is_zero()) return Laurent(vars_);

  const std::vector<long> sa = normalize_shift(terms_, vars_);
  const std::vector<long> sb = normalize_shift(b.terms_, vars_);

  std::map<Exponents, Int> rem;
  for (const auto& [e, c] : terms_) {
    Exponents f(vars_);
    for (int i = 0; i < vars_; ++i) f[i] = e[i] - sa[i];
    rem.emplace(std::move(f), c);
  }
  std::map<Exponents, Int> div;
  for (const auto& [e, c] : b.terms_) {
    Exponents f(vars_);
    for (int i = 0; i < vars_; ++i) f[i] = e[i] - sb[i];
    div.emplace(std::move(f), c);
  }

  const auto& lead_div = *div.rbegin();
  Laurent q(vars_);
  while (!rem.empty()) {
    const auto& lead_rem = *rem.rbegin();
    Exponents qe(vars_);
    for (int i = 0; i < vars_; ++i) {
      qe[i] = lead_rem.first[i] - lead_div.first[i];
      if (qe[i] < 0)
        throw std::domain_error("Laurent::exact_div: not divisible");
    }
    Int qc;
    mpz_class r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), lead_rem.second.get_mpz_t(),
                lead_div.second.get_mpz_t());
    if (r != 0) throw std::domain_error("Laurent::exact_div: not divisible");

    // rem -= qc * d^qe * div
    for (const auto& [e, c] : div) {
      Exponents f(vars_);
      for (int i = 0; i < vars_; ++i) f[i] = e[i] + qe[i];
      auto it = rem.find(f);
      Int delta = qc * c;
      if (it == rem.end()) {
        rem.emplace(std::move(f), -delta);
      } else {
        it->second -= delta;
        if (it->second == 0) rem.erase(it);
      }
    }
    // restore the Laurent shift on the quotient term
    for (int i = 0; i < vars_; ++i) qe[i] += sa[i] - sb[i];
    q.terms_.emplace(std::move(qe), std::move(qc));
  }
  return q;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    const Exponents& e = it->first;
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::ostringstream vars_part;
    bool any_var = false;
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars_part << "*";
      vars_part << "d" << i;
      if (e[i] != 1) vars_part << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << vars_part.str();
    } else {
      os << mag.get_str() << "*" << vars_part.str();
    }
  }
  return os.str();
}

}  // namespace bubble
