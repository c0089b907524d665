#include "bubble/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bubble {

SetPartition::SetPartition(int n_top, int n_bot,
                           std::vector<std::vector<int>> blocks)
    : n_top_(n_top), n_bot_(n_bot), blocks_(std::move(blocks)) {
  if (n_top < 0 || n_bot < 0)
    throw std::invalid_argument("SetPartition: negative row size");
  std::vector<bool> seen(n_top_ + n_bot_ + 1, false);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n_top_ + n_bot_)
        throw std::invalid_argument("SetPartition: node out of range");
      if (seen[v]) throw std::invalid_argument("SetPartition: node repeated");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n_top_ + n_bot_)
    throw std::invalid_argument("SetPartition: nodes not covered");
  std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::identity(int n) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i) blocks.push_back({i, n + i});
  return SetPartition(n, n, std::move(blocks));
}

int SetPartition::propagating_number() const {
  int count = 0;
  for (const auto& b : blocks_) {
    bool top = false, bot = false;
    for (int v : b) (is_top(v) ? top : bot) = true;
    if (top && bot) ++count;
  }
  return count;
}

bool SetPartition::is_pair_partition() const {
  for (const auto& b : blocks_)
    if (b.size() != 2) return false;
  return true;
}

SetPartition SetPartition::reflected() const {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int v : b) nb.push_back(is_top(v) ? v + n_bot_ : v - n_top_);
    blocks.push_back(std::move(nb));
  }
  return SetPartition(n_bot_, n_top_, std::move(blocks));
}

std::string SetPartition::str() const {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& b : blocks_) {
    if (!first_block) os << "; ";
    first_block = false;
    os << "{";
    bool first = true;
    for (int v : b) {
      if (!first) os << ",";
      first = false;
      if (is_top(v))
        os << v;
      else
        os << (v - n_top_) << "'";
    }
    os << "}";
  }
  return os.str();
}

SetPartition SetPartition::parse(int n_top, int n_bot, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ';')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{')
      throw std::invalid_argument("diagram text: expected '{' at position " +
                                  std::to_string(i));
    ++i;
    std::vector<int> block;
    while (i < text.size() && text[i] != '}') {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw std::invalid_argument("diagram text: expected node number");
      int v = std::stoi(text.substr(start, i - start));
      if (i < text.size() && text[i] == '\'') {
        v += n_top;
        ++i;
      }
      block.push_back(v);
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    }
    if (i >= text.size())
      throw std::invalid_argument("diagram text: unterminated block");
    ++i;  // '}'
    blocks.push_back(std::move(block));
    skip_ws();
  }
  return SetPartition(n_top, n_bot, std::move(blocks));
}

std::pair<SetPartition, int> stack(const SetPartition& alpha,
                                   const SetPartition& beta) {
  if (alpha.n_bot() != beta.n_top())
    throw std::invalid_argument("stack: boundary size mismatch");
  const int nt = alpha.n_top();
  const int mid = alpha.n_bot();
  const int nb = beta.n_bot();

  // slots: alpha top 0..nt-1, middle nt..nt+mid-1, beta bottom from nt+mid
  detail::UnionFind uf(nt + mid + nb);
  auto alpha_slot = [&](int v) {
    return alpha.is_top(v) ? v - 1 : nt + (v - nt - 1);
  };
  auto beta_slot = [&](int v) {
    return beta.is_top(v) ? nt + (v - 1) : nt + mid + (v - mid - 1);
  };
  for (const auto& b : alpha.blocks())
    for (std::size_t i = 1; i < b.size(); ++i)
      uf.unite(alpha_slot(b[0]), alpha_slot(b[i]));
  for (const auto& b : beta.blocks())
    for (std::size_t i = 1; i < b.size(); ++i)
      uf.unite(beta_slot(b[0]), beta_slot(b[i]));

  std::map<int, std::vector<int>> comp;  // root -> boundary nodes of result
  for (int i = 0; i < nt; ++i) comp[uf.find(i)].push_back(i + 1);
  for (int i = 0; i < nb; ++i)
    comp[uf.find(nt + mid + i)].push_back(nt + i + 1);

  std::set<int> middle_only;
  for (int i = 0; i < mid; ++i) {
    const int root = uf.find(nt + i);
    if (comp.find(root) == comp.end()) middle_only.insert(root);
  }
  const int removed = static_cast<int>(middle_only.size());

  std::vector<std::vector<int>> blocks;
  blocks.reserve(comp.size());
  for (auto& [root, nodes] : comp) {
    (void)root;
    blocks.push_back(std::move(nodes));
  }
  return {SetPartition(nt, nb, std::move(blocks)), removed};
}

bool chords_noncross(const std::vector<std::pair<int, int>>& chords) {
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      int a1 = chords[i].first, b1 = chords[i].second;
      int a2 = chords[j].first, b2 = chords[j].second;
      if (a1 > b1) std::swap(a1, b1);
      if (a2 > b2) std::swap(a2, b2);
      const bool inside2 = (a1 < a2 && a2 < b1);
      const bool inside2b = (a1 < b2 && b2 < b1);
      if (inside2 != inside2b) return true;
    }
  }
  return false;
}

bool is_noncrossing(const SetPartition& d) {
  if (!d.is_pair_partition())
    throw std::invalid_argument("is_noncrossing: block of size != 2");
  // boundary cycle 1,...,n, n',...,1': bottom nodes in reverse order
  auto pos = [&](int v) {
    return d.is_top(v) ? v : d.n_top() + (d.n_bot() - (v - d.n_top()) + 1);
  };
  std::vector<std::pair<int, int>> chords;
  chords.reserve(d.blocks().size());
  for (const auto& b : d.blocks()) chords.emplace_back(pos(b[0]), pos(b[1]));
  return !chords_noncross(chords);
}

}  // namespace bubble
