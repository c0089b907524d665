#include "bubble/matrix.hpp"

namespace bubble {

long symbolic_dim_limit() {
  if (const char* env = std::getenv("BUBBLE_MAX_SYMBOLIC_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 64;
}

Laurent determinant(const Matrix<Laurent>& m, long max_dim) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  if (max_dim < 0) max_dim = symbolic_dim_limit();
  if (m.rows() > max_dim)
    throw std::invalid_argument(
        "determinant: symbolic dimension " + std::to_string(m.rows()) +
        " exceeds limit " + std::to_string(max_dim) +
        "; use the factorized formula or specialize parameters "
        "(BUBBLE_MAX_SYMBOLIC_DIM overrides)");
  const int vars = m.zero().vars();
  return bareiss_determinant<Laurent>(
      m, Laurent::one(vars), [](const Laurent& x) { return x.is_zero(); },
      [](const Laurent& a, const Laurent& b) { return a.exact_div(b); });
}

Algebraic determinant(const Matrix<Algebraic>& m) {
  const FieldPtr field = m.zero().field();
  return bareiss_determinant<Algebraic>(
      m, Algebraic::from_rational(field, Rat(1)),
      [](const Algebraic& x) { return x.is_zero(); },
      [](const Algebraic& a, const Algebraic& b) { return a * b.inverse(); });
}

long rank(const Matrix<Algebraic>& m) {
  Matrix<Algebraic> w = m;
  const long rows = w.rows(), cols = w.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot = -1;
    for (long i = r; i < rows; ++i)
      if (!w.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (long j = c; j < cols; ++j) std::swap(w.at(r, j), w.at(pivot, j));
    const Algebraic inv = w.at(r, c).inverse();
    for (long i = r + 1; i < rows; ++i) {
      if (w.at(i, c).is_zero()) continue;
      const Algebraic f = w.at(i, c) * inv;
      for (long j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    ++r;
  }
  return r;
}

long rank(const Matrix<Laurent>&) {
  throw std::invalid_argument("rank: specialize parameters first");
}

}  // namespace bubble
