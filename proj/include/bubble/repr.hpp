#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubble/cell.hpp"

namespace bubble {

// weights with nonzero bilinear form: all of Lambda unless n is even and
// every parameter is zero, in which case the all-zero weight drops out
std::vector<WeightLambda> lambda_zero(int n, int m, const ParameterSpec& params);

// the paper-6-2 row ordering is the block-grouped one used by the worked
// T_{6,2} example; default is enumerate_lambda order restricted to Lambda^0
enum class WeightOrder { Default, Paper62 };

struct DecompositionMatrix {
  std::vector<WeightLambda> weights;  // row = column order
  std::vector<std::vector<int>> entries;

  int index_of(const WeightLambda& w) const;
};

DecompositionMatrix decomposition_matrix(int n, int m,
                                         const ParameterSpec& params,
                                         WeightOrder order = WeightOrder::Default);

// C = D^T D (cellular-algebra identity)
std::vector<std::vector<int>> cartan_matrix(const DecompositionMatrix& d);

struct BlockPartition {
  std::vector<WeightLambda> weights;          // same order as the matrix
  std::vector<std::vector<int>> classes;      // indices into weights
};

// linkage classes: connected components of the off-diagonal incidence of D
BlockPartition blocks(const DecompositionMatrix& d);

// restriction of a square matrix to one linkage class
std::vector<std::vector<int>> submatrix(const std::vector<std::vector<int>>& a,
                                        const std::vector<int>& idx);

// DOT graph of the block structure; nodes annotated with their critical
// colours (lambda_j + 1 = 0 mod l_j)
std::string blocks_dot(const DecompositionMatrix& d, const ParameterSpec& params);

// Nontrivial homomorphism Delta(from) -> Delta(to).  Requires invertible
// delta_j for every colour; to = from - 2t componentwise.  Colours with
// t_j = 0 contribute the identity; t_j > 0 needs a declared order with
// 0 < t_j < l_j and from_j - t_j + 1 = 0 (mod l_j).
bool cell_hom_exists(const WeightLambda& from, const WeightLambda& to,
                     const ParameterSpec& params);

// the order-theoretic condition alone, without the invertibility gate
bool cell_hom_condition(const WeightLambda& from, const WeightLambda& to,
                        const ParameterSpec& params);

bool is_semisimple(int n, int m, const ParameterSpec& params);
bool is_quasi_hereditary(int n, int m, const ParameterSpec& params);

}  // namespace bubble
