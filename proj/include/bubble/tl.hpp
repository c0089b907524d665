#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bubble/matrix.hpp"

namespace bubble {

// Half-diagram with p disjoint non-crossing arcs over {1..n}; the other
// n - 2p nodes are defects.  No defect lies under an arc, so the count of
// (n,p)-link states is C(n,p) - C(n,p-1).
class LinkState {
 public:
  LinkState(int n, std::vector<std::pair<int, int>> arcs);

  int n() const { return n_; }
  int p() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  std::vector<int> defects() const;

  friend bool operator==(const LinkState& a, const LinkState& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }
  friend bool operator<(const LinkState& a, const LinkState& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.arcs_ < b.arcs_;
  }

  // `n=5; arcs=(1,2)(4,5)`
  std::string str() const;
  static LinkState parse(const std::string& text);

 private:
  int n_;
  std::vector<std::pair<int, int>> arcs_;  // sorted by opener, each (lo, hi)
};

long long dim_cell(int n, int p);  // C(n,p) - C(n,p-1)

// all (n,p)-link states, sorted by arc list
std::vector<LinkState> enumerate_link_states(int n, int p);

// Bilinear form value: reflect x onto y; nullopt when some defect of x glues
// to another defect of x (ditto for y), otherwise the number of closed loops
// (value delta^loops).
std::optional<long> tl_form_loops(const LinkState& x, const LinkState& y);

// the form as a Laurent scalar in variable `var` of an m-variable ring
Laurent tl_form(const LinkState& x, const LinkState& y, int vars = 1, int var = 0);

// Gram matrix of the (n,p) cell in the enumerate_link_states order
Matrix<Laurent> gram_tl(int n, int p, int vars = 1, int var = 0);

// n - 2p + 1 = kl + r with r in {1..l}; r = l means critical
long r_value(int n, int p, long l);
bool is_critical(int n, int p, long l);

// Radical/head dimensions of the (n,p) cell at order l (no order = generic,
// radical 0).  Critical pairs have radical 0; otherwise the radical is the
// head of the (n, p + r - l) cell when that index is nonnegative.
long long dim_radical_tl(int n, int p, std::optional<long> l);
long long dim_head_tl(int n, int p, std::optional<long> l);

// nontrivial cell homomorphism V_{n,p2} -> V_{n,p1} at order l
bool hom_exists_tl(int n, int p2, int p1, long l);

}  // namespace bubble
