#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bubble/laurent.hpp"
#include "bubble/partition.hpp"

namespace bubble {

// One block of a multi-colour diagram: a colour index plus a sorted node set.
// Nodes 1..n are the top row, n+1..2n the bottom row (i' = n + i).
struct ColouredBlock {
  int colour;
  std::vector<int> nodes;

  friend bool operator==(const ColouredBlock& a, const ColouredBlock& b) {
    return a.colour == b.colour && a.nodes == b.nodes;
  }
  friend bool operator<(const ColouredBlock& a, const ColouredBlock& b) {
    if (a.nodes != b.nodes) return a.nodes < b.nodes;
    return a.colour < b.colour;
  }
};

// Per-colour split of a boundary row into node subsets.
struct ColourProfile {
  std::vector<std::vector<int>> top;  // m entries, sorted node lists
  std::vector<std::vector<int>> bot;

  friend bool operator==(const ColourProfile& a, const ColourProfile& b) {
    return a.top == b.top && a.bot == b.bot;
  }
};

// Basis element of the multi-colour partition algebra: an m-tuple of set
// partitions on disjoint supports covering {1..n} u {1'..n'}.  Canonical
// form: blocks sorted, each block sorted.
class ColouredDiagram {
 public:
  ColouredDiagram(int n, int m, std::vector<ColouredBlock> blocks);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<ColouredBlock>& blocks() const { return blocks_; }

  int colour_of(int node) const { return colour_of_.at(node - 1); }
  std::vector<int> top_word() const;  // colour of nodes 1..n
  std::vector<int> bottom_word() const;
  ColourProfile profile() const;

  ColouredDiagram reflected() const;

  // total and per-colour counts of blocks meeting both rows
  std::pair<int, std::vector<int>> propagating_profile() const;

  friend bool operator==(const ColouredDiagram& a, const ColouredDiagram& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const ColouredDiagram& a, const ColouredDiagram& b) {
    return !(a == b);
  }
  friend bool operator<(const ColouredDiagram& a, const ColouredDiagram& b);

  // `n=2 m=2; 0:{1,1'}; 1:{2,2'}`
  std::string str() const;
  static ColouredDiagram parse(const std::string& text);

 private:
  int n_, m_;
  std::vector<ColouredBlock> blocks_;
  std::vector<int> colour_of_;  // per node, 0-indexed by node-1
};

// Product value: a monomial coefficient times a diagram, or zero.
struct ScaledDiagram {
  Laurent coeff;
  std::optional<ColouredDiagram> diagram;

  static ScaledDiagram zero(int m) { return {Laurent(m), std::nullopt}; }
  bool is_zero() const { return !diagram.has_value(); }

  friend bool operator==(const ScaledDiagram& a, const ScaledDiagram& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.coeff == b.coeff && *a.diagram == *b.diagram;
  }
};

// alpha placed on top, beta below; zero when the colour profiles at the
// interface disagree, otherwise prod_i delta_i^{c_i} times the stacked
// diagram with c_i the middle components removed in colour i.
ScaledDiagram multiply(const ColouredDiagram& alpha, const ColouredDiagram& beta);
ScaledDiagram multiply(const ScaledDiagram& alpha, const ColouredDiagram& beta);
ScaledDiagram multiply(const ColouredDiagram& alpha, const ScaledDiagram& beta);

// Formal linear combination of diagrams, used at the API edge (identity,
// conjugators, parity identities).
class DiagramSum {
 public:
  DiagramSum() = default;

  void add(const ColouredDiagram& d, const Laurent& coeff);
  void add(const ScaledDiagram& s);

  bool is_zero() const { return terms_.empty(); }
  const std::map<ColouredDiagram, Laurent>& terms() const { return terms_; }

  friend DiagramSum operator*(const DiagramSum& a, const DiagramSum& b);
  friend bool operator==(const DiagramSum& a, const DiagramSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<ColouredDiagram, Laurent> terms_;
};

// The m^n summands of the identity: i joined to i' in every colour
// assignment, ordered by colour word.
std::vector<ColouredDiagram> identity_diagrams(int n, int m);
DiagramSum identity_sum(int n, int m);

// every block a pair and no same-colour crossing
bool is_bubble(const ColouredDiagram& d);

// All bubble diagrams, sorted by (top colour word, bottom colour word,
// canonical block list).  The visitor form enumerates without materializing.
void for_each_bubble_diagram(int n, int m,
                             const std::function<void(const ColouredDiagram&)>& fn);
std::vector<ColouredDiagram> bubble_basis(int n, int m);
std::vector<ColouredDiagram> bubble_basis_lambda(int n, int m,
                                                 const std::vector<long>& lambda);

// m = 2 splitting by the parity of blue nodes on the top row
enum class Parity { Even, Odd };
Parity parity_split(const ColouredDiagram& d);

// Conjugating pair (D, D_inv) for a colour assignment A of {1..n}:
// D * 1_A * D_inv = 1_sorted(A) and D * D_inv = identity.  The permutation
// reorders coloured strands into contiguous colour groups without crossing
// lines of equal colour.
std::pair<DiagramSum, DiagramSum> conjugator(int n, int m,
                                             const std::vector<int>& assignment);

// identity summand 1_A for a colour assignment of {1..n}
ColouredDiagram identity_for_assignment(int n, int m,
                                        const std::vector<int>& assignment);

}  // namespace bubble
