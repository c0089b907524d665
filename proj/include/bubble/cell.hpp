#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubble/diagram.hpp"
#include "bubble/matrix.hpp"
#include "bubble/params.hpp"
#include "bubble/tl.hpp"

namespace bubble {

// Weight of a cell module: an m-tuple of per-colour defect counts with
// sum(lambda) = n - 2v for some 0 <= v <= n/2.
struct WeightLambda {
  int n = 0;
  int m = 0;
  std::vector<long> lambda;

  long total() const;
  int v() const;  // number of arc pairs: (n - total) / 2
  void validate() const;

  friend bool operator==(const WeightLambda& a, const WeightLambda& b) {
    return a.n == b.n && a.m == b.m && a.lambda == b.lambda;
  }
  friend bool operator<(const WeightLambda& a, const WeightLambda& b) {
    if (a.total() != b.total()) return a.total() > b.total();  // v ascending
    return a.lambda < b.lambda;
  }

  std::string str() const;  // "(0,2)"
  static WeightLambda parse(int n, int m, const std::string& csv);
};

// all weights, ordered by (v ascending, lexicographic lambda)
std::vector<WeightLambda> enumerate_lambda(int n, int m);

// compositions of total into m nonnegative parts, lexicographic
std::vector<std::vector<long>> compositions(long total, int m);

// Basis element of a cell module: a colour word on {1..n} plus per-colour
// arcs (global node indices); the colour-j defect count equals lambda_j.
class MultiLinkState {
 public:
  MultiLinkState(int n, int m, std::vector<int> colour_word,
                 std::vector<std::pair<int, int>> arcs);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& colours() const { return word_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  std::vector<long> defect_counts() const;  // per colour
  std::vector<long> arc_counts() const;     // per colour

  // the colour-j fragment as a plain link state on the colour-j node
  // subsequence (positions renumbered 1..n_j)
  LinkState fragment(int colour) const;

  friend bool operator==(const MultiLinkState& a, const MultiLinkState& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.word_ == b.word_ &&
           a.arcs_ == b.arcs_;
  }
  friend bool operator<(const MultiLinkState& a, const MultiLinkState& b) {
    if (a.word_ != b.word_) return a.word_ < b.word_;
    return a.arcs_ < b.arcs_;
  }

  // `colours=rrbrb; 0:arcs=(1,2); 1:arcs=(3,5)`
  std::string str() const;
  static MultiLinkState parse(int n, int m, const std::string& text);

 private:
  int n_, m_;
  std::vector<int> word_;
  std::vector<std::pair<int, int>> arcs_;  // sorted, global nodes
};

// basis of the cell module, grouped by colour word (lexicographic), then
// per-colour link states in row-major order (colour 0 outermost)
std::vector<MultiLinkState> enumerate_delta_basis(const WeightLambda& lw);

// Diagram action on a basis state: concatenate d above a, collect loop
// monomials per colour; zero on colour mismatch or when any colour loses
// defects (quotient rule).  d must have all blocks of size 2.
struct ActResult {
  Laurent coeff;
  std::optional<MultiLinkState> state;
  bool is_zero() const { return !state.has_value(); }
};
ActResult act(const ColouredDiagram& d, const MultiLinkState& a);

// contravariant form: zero unless the colour distributions match, otherwise
// the product of the per-colour TL forms in variables d0..d{m-1}
Laurent inner_product(const MultiLinkState& a, const MultiLinkState& b);

Matrix<Laurent> gram_direct(const WeightLambda& lw);

// One block family of the factorized Gram matrix: the tensor factors for a
// fixed arc distribution u, repeated once per colour word.
struct GramBlock {
  std::vector<long> u;
  long long multiplicity = 0;  // n_{lambda+2u}
  std::vector<Matrix<Laurent>> factors;
  std::vector<long long> factor_dims;
};
struct GramBlockReport {
  WeightLambda lw;
  std::vector<GramBlock> blocks;
  Laurent det;  // closed product formula

  long long dimension() const;  // sum multiplicity * prod factor dims
};

GramBlockReport gram_factorized(const WeightLambda& lw);
Laurent gram_det(const WeightLambda& lw);

// entry-for-entry assembly of the factorized blocks in the basis order
Matrix<Laurent> assemble_factorized(const WeightLambda& lw,
                                    const GramBlockReport& report);

long long dim_delta(const WeightLambda& lw);
long long dim_head(const WeightLambda& lw, const ParameterSpec& params);
long long dim_radical(const WeightLambda& lw, const ParameterSpec& params);
// inclusion-exclusion closed form, m = 2 only
long long dim_radical_two_colours(const WeightLambda& lw,
                                  const ParameterSpec& params);

// Loewy layers: layer k lists the weights obtained by replacing
// lambda_j -> lambda_j + 2t_j on exactly k of the non-critical root-of-unity
// colours (t_j the unique 0 < t_j < l_j with lambda_j + t_j + 1 = 0 mod l_j),
// keeping sum <= n.  Layer 0 is the head.
std::vector<std::vector<WeightLambda>> radical_series(const WeightLambda& lw,
                                                      const ParameterSpec& params);

// idempotent localization: 1_mu Delta(lambda) as per-colour TL cells
// (mu_j, t_j) when every mu_j - lambda_j is even and nonnegative
struct TLWeight {
  int n = 0;
  int p = 0;
};
std::optional<std::vector<TLWeight>> localize(const WeightLambda& lw,
                                              const std::vector<long>& mu);

}  // namespace bubble
