#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bubble {

// Set partition of {1..n_top} u {1'..n_bot}.  Primes are stored as
// n_top + i; all public text I/O uses the primed notation.  Canonical form:
// each block sorted ascending, blocks sorted by smallest element.
class SetPartition {
 public:
  SetPartition(int n_top, int n_bot, std::vector<std::vector<int>> blocks);

  static SetPartition identity(int n);

  int n_top() const { return n_top_; }
  int n_bot() const { return n_bot_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  bool is_top(int node) const { return node >= 1 && node <= n_top_; }
  bool is_bot(int node) const { return node > n_top_; }

  // count of blocks meeting both rows
  int propagating_number() const;

  // every block has exactly two nodes
  bool is_pair_partition() const;

  SetPartition reflected() const;  // swap top and bottom rows

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_top_ == b.n_top_ && a.n_bot_ == b.n_bot_ &&
           a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) {
    return !(a == b);
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    if (a.n_top_ != b.n_top_) return a.n_top_ < b.n_top_;
    if (a.n_bot_ != b.n_bot_) return a.n_bot_ < b.n_bot_;
    return a.blocks_ < b.blocks_;
  }

  // `{1,3,2'}`-style blocks joined by "; "
  std::string str() const;
  static SetPartition parse(int n_top, int n_bot, const std::string& text);

 private:
  int n_top_, n_bot_;
  std::vector<std::vector<int>> blocks_;
};

// Composition: alpha placed above beta, alpha's bottom row identified with
// beta's top row.  Returns the boundary partition together with the number
// of connected components entirely inside the middle row.
std::pair<SetPartition, int> stack(const SetPartition& alpha,
                                   const SetPartition& beta);

// Non-crossing test for pair partitions on the boundary cycle
// 1,...,n, n',...,1'.  Throws if some block has size != 2.
bool is_noncrossing(const SetPartition& d);

// Interleaving test for chords on a cycle given by linear positions.
bool chords_noncross(const std::vector<std::pair<int, int>>& chords);

namespace detail {

// Small union-find used for diagram gluing.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

}  // namespace bubble
