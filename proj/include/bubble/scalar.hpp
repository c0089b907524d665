#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bubble {

using Int = mpz_class;
using Rat = mpq_class;

inline long long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  if (!r.fits_slong_p())
    throw std::overflow_error("binomial overflows long");
  return r.get_si();
}

// C(n; k_0, ..., k_{m-1}) with sum k_i = n
inline long long multinomial(long n, const std::vector<long>& parts) {
  long long result = 1;
  long rest = n;
  for (long k : parts) {
    result *= binomial(rest, k);
    rest -= k;
  }
  if (rest != 0) throw std::invalid_argument("multinomial: parts do not sum to n");
  return result;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat parse_rational(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("invalid rational: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace bubble
