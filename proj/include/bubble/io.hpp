#pragma once

#include <optional>
#include <string>

#include "bubble/repr.hpp"

namespace bubble {

enum class Format { Text, Json, Csv, Dot };
Format parse_format(const std::string& name);

// Rendered computations shared by the C API and the CLI.  All output is
// byte-stable: fixed orderings, canonical scalar strings, no floating point.
std::string render_basis(int n, int m, const std::optional<WeightLambda>& lambda,
                         Format f);
std::string render_multiply(const std::string& diagram_a,
                            const std::string& diagram_b, Format f);
std::string render_gram(const WeightLambda& lw,
                        const std::optional<ParameterSpec>& params,
                        bool factorized, Format f);
std::string render_det(const WeightLambda& lw,
                       const std::optional<ParameterSpec>& params, Format f);
long compute_rank(const WeightLambda& lw, const ParameterSpec& params);
std::string render_dims(int n, int m, const ParameterSpec& params, Format f);
std::string render_radical_series(const WeightLambda& lw,
                                  const ParameterSpec& params, Format f);
std::string render_decomp(int n, int m, const ParameterSpec& params,
                          WeightOrder order, Format f);
std::string render_cartan(int n, int m, const ParameterSpec& params,
                          WeightOrder order, Format f);
std::string render_blocks(int n, int m, const ParameterSpec& params,
                          WeightOrder order, Format f);

}  // namespace bubble
