#include "bubble/bubble.h"

#include <cstring>
#include <sstream>

#include "bubble/check.hpp"
#include "bubble/io.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
bubble_status guarded(Fn&& fn) {
  try {
    fn();
    return BUBBLE_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return BUBBLE_ERROR_INVALID;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return BUBBLE_ERROR_INVALID;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return BUBBLE_ERROR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BUBBLE_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return BUBBLE_ERROR_INTERNAL;
  }
}

bubble::WeightOrder parse_order(const char* order) {
  if (order == nullptr || *order == '\0') return bubble::WeightOrder::Default;
  if (std::strcmp(order, "paper-6-2") == 0) return bubble::WeightOrder::Paper62;
  throw std::invalid_argument(std::string("unknown weight order '") + order +
                              "'");
}

const bubble_algebra& require(const bubble_algebra* a) {
  if (a == nullptr) throw std::invalid_argument("null algebra handle");
  return *a;
}

}  // namespace

struct bubble_algebra {
  int n;
  int m;
  bubble::ParameterSpec params;
};

extern "C" {

const char* bubble_version(void) { return "1.0.0"; }

const char* bubble_last_error(void) { return g_last_error.c_str(); }

void bubble_string_free(char* s) { std::free(s); }

bubble_status bubble_algebra_new(int n, int m, const char* const* deltas,
                                 int n_deltas, bubble_algebra** out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output pointer");
    if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
    bubble::ParameterSpec params;
    if (deltas == nullptr || n_deltas == 0) {
      params = bubble::ParameterSpec::generic(m);
    } else {
      if (n_deltas != m)
        throw std::invalid_argument(
            "expected one --delta per colour (m = " + std::to_string(m) + ")");
      std::vector<std::string> tokens;
      tokens.reserve(n_deltas);
      for (int i = 0; i < n_deltas; ++i) tokens.emplace_back(deltas[i]);
      params = bubble::ParameterSpec::parse(tokens);
    }
    *out = new bubble_algebra{n, m, std::move(params)};
  });
}

void bubble_algebra_free(bubble_algebra* a) { delete a; }

bubble_status bubble_basis(const bubble_algebra* a, const char* lambda,
                           const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    std::optional<bubble::WeightLambda> lw;
    if (lambda && *lambda)
      lw = bubble::WeightLambda::parse(alg.n, alg.m, lambda);
    *out = dup_string(
        bubble::render_basis(alg.n, alg.m, lw, bubble::parse_format(format)));
  });
}

bubble_status bubble_multiply(const bubble_algebra* a, const char* diagram_a,
                              const char* diagram_b, const char* format,
                              char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    const auto da = bubble::ColouredDiagram::parse(diagram_a);
    const auto db = bubble::ColouredDiagram::parse(diagram_b);
    if (da.n() != alg.n || da.m() != alg.m || db.n() != alg.n || db.m() != alg.m)
      throw std::invalid_argument("diagram does not match the algebra's n, m");
    *out = dup_string(bubble::render_multiply(diagram_a, diagram_b,
                                              bubble::parse_format(format)));
  });
}

bubble_status bubble_gram(const bubble_algebra* a, const char* lambda,
                          int factorized, const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    const auto lw = bubble::WeightLambda::parse(alg.n, alg.m, lambda);
    std::optional<bubble::ParameterSpec> params;
    if (alg.params.all_specialized()) params = alg.params;
    *out = dup_string(bubble::render_gram(lw, params, factorized != 0,
                                          bubble::parse_format(format)));
  });
}

bubble_status bubble_det(const bubble_algebra* a, const char* lambda,
                         const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    const auto lw = bubble::WeightLambda::parse(alg.n, alg.m, lambda);
    std::optional<bubble::ParameterSpec> params;
    if (alg.params.all_specialized()) params = alg.params;
    *out = dup_string(
        bubble::render_det(lw, params, bubble::parse_format(format)));
  });
}

bubble_status bubble_rank(const bubble_algebra* a, const char* lambda,
                          long* out_rank) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    const auto lw = bubble::WeightLambda::parse(alg.n, alg.m, lambda);
    *out_rank = bubble::compute_rank(lw, alg.params);
  });
}

bubble_status bubble_dims(const bubble_algebra* a, const char* format,
                          char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    *out = dup_string(bubble::render_dims(alg.n, alg.m, alg.params,
                                          bubble::parse_format(format)));
  });
}

bubble_status bubble_radical_series(const bubble_algebra* a, const char* lambda,
                                    const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    const auto lw = bubble::WeightLambda::parse(alg.n, alg.m, lambda);
    *out = dup_string(bubble::render_radical_series(
        lw, alg.params, bubble::parse_format(format)));
  });
}

bubble_status bubble_decomp(const bubble_algebra* a, const char* order,
                            const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    *out = dup_string(bubble::render_decomp(alg.n, alg.m, alg.params,
                                            parse_order(order),
                                            bubble::parse_format(format)));
  });
}

bubble_status bubble_cartan(const bubble_algebra* a, const char* order,
                            const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    *out = dup_string(bubble::render_cartan(alg.n, alg.m, alg.params,
                                            parse_order(order),
                                            bubble::parse_format(format)));
  });
}

bubble_status bubble_blocks(const bubble_algebra* a, const char* order,
                            const char* format, char** out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    *out = dup_string(bubble::render_blocks(alg.n, alg.m, alg.params,
                                            parse_order(order),
                                            bubble::parse_format(format)));
  });
}

bubble_status bubble_is_semisimple(const bubble_algebra* a, int* out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    *out = bubble::is_semisimple(alg.n, alg.m, alg.params) ? 1 : 0;
  });
}

bubble_status bubble_is_quasi_hereditary(const bubble_algebra* a, int* out) {
  return guarded([&] {
    const bubble_algebra& alg = require(a);
    *out = bubble::is_quasi_hereditary(alg.n, alg.m, alg.params) ? 1 : 0;
  });
}

bubble_status bubble_check(char** out, int* ok) {
  return guarded([&] {
    std::ostringstream os;
    const bool good = bubble::run_check_suite(os);
    *out = dup_string(os.str());
    *ok = good ? 1 : 0;
  });
}

}  // extern "C"
