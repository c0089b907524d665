#include "bubble/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bubble {

ColouredDiagram::ColouredDiagram(int n, int m, std::vector<ColouredBlock> blocks)
    : n_(n), m_(m), blocks_(std::move(blocks)), colour_of_(2 * n, -1) {
  if (n < 0 || m < 1) throw std::invalid_argument("ColouredDiagram: bad n or m");
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.colour < 0 || b.colour >= m_)
      throw std::invalid_argument("ColouredDiagram: colour out of range");
    if (b.nodes.empty())
      throw std::invalid_argument("ColouredDiagram: empty block");
    std::sort(b.nodes.begin(), b.nodes.end());
    for (int v : b.nodes) {
      if (v < 1 || v > 2 * n_)
        throw std::invalid_argument("ColouredDiagram: node out of range");
      if (colour_of_[v - 1] != -1)
        throw std::invalid_argument("ColouredDiagram: node repeated");
      colour_of_[v - 1] = b.colour;
      ++covered;
    }
  }
  if (covered != 2 * n_)
    throw std::invalid_argument("ColouredDiagram: nodes not covered");
  std::sort(blocks_.begin(), blocks_.end());
}

std::vector<int> ColouredDiagram::top_word() const {
  return std::vector<int>(colour_of_.begin(), colour_of_.begin() + n_);
}

std::vector<int> ColouredDiagram::bottom_word() const {
  return std::vector<int>(colour_of_.begin() + n_, colour_of_.end());
}

ColourProfile ColouredDiagram::profile() const {
  ColourProfile p;
  p.top.assign(m_, {});
  p.bot.assign(m_, {});
  for (int v = 1; v <= n_; ++v) p.top[colour_of_[v - 1]].push_back(v);
  for (int v = n_ + 1; v <= 2 * n_; ++v) p.bot[colour_of_[v - 1]].push_back(v - n_);
  return p;
}

ColouredDiagram ColouredDiagram::reflected() const {
  std::vector<ColouredBlock> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    ColouredBlock nb{b.colour, {}};
    nb.nodes.reserve(b.nodes.size());
    for (int v : b.nodes) nb.nodes.push_back(v <= n_ ? v + n_ : v - n_);
    blocks.push_back(std::move(nb));
  }
  return ColouredDiagram(n_, m_, std::move(blocks));
}

std::pair<int, std::vector<int>> ColouredDiagram::propagating_profile() const {
  std::vector<int> per(m_, 0);
  int total = 0;
  for (const auto& b : blocks_) {
    bool top = false, bot = false;
    for (int v : b.nodes) (v <= n_ ? top : bot) = true;
    if (top && bot) {
      ++per[b.colour];
      ++total;
    }
  }
  return {total, per};
}

bool operator<(const ColouredDiagram& a, const ColouredDiagram& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.m_ != b.m_) return a.m_ < b.m_;
  const auto wa = a.top_word(), wb = b.top_word();
  if (wa != wb) return wa < wb;
  const auto va = a.bottom_word(), vb = b.bottom_word();
  if (va != vb) return va < vb;
  return a.blocks_ < b.blocks_;
}

std::string ColouredDiagram::str() const {
  std::ostringstream os;
  os << "n=" << n_ << " m=" << m_;
  for (const auto& b : blocks_) {
    os << "; " << b.colour << ":{";
    bool first = true;
    for (int v : b.nodes) {
      if (!first) os << ",";
      first = false;
      if (v <= n_)
        os << v;
      else
        os << (v - n_) << "'";
    }
    os << "}";
  }
  return os.str();
}

ColouredDiagram ColouredDiagram::parse(const std::string& text) {
  int n = -1, m = -1;
  // leading "n=<n> m=<m>"
  std::size_t i = 0;
  auto expect = [&](const std::string& tag) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (text.compare(i, tag.size(), tag) != 0)
      throw std::invalid_argument("diagram text: expected '" + tag + "'");
    i += tag.size();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i) throw std::invalid_argument("diagram text: expected number");
    return std::stoi(text.substr(start, i - start));
  };
  n = expect("n=");
  m = expect("m=");

  std::vector<ColouredBlock> blocks;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ';')) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i || i >= text.size() || text[i] != ':')
      throw std::invalid_argument("diagram text: expected '<colour>:{...}'");
    ColouredBlock b;
    b.colour = std::stoi(text.substr(start, i - start));
    ++i;  // ':'
    if (i >= text.size() || text[i] != '{')
      throw std::invalid_argument("diagram text: expected '{'");
    ++i;
    while (i < text.size() && text[i] != '}') {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i) throw std::invalid_argument("diagram text: expected node");
      int v = std::stoi(text.substr(start, i - start));
      if (i < text.size() && text[i] == '\'') {
        v += n;
        ++i;
      }
      b.nodes.push_back(v);
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    }
    if (i >= text.size())
      throw std::invalid_argument("diagram text: unterminated block");
    ++i;  // '}'
    blocks.push_back(std::move(b));
  }
  return ColouredDiagram(n, m, std::move(blocks));
}

ScaledDiagram multiply(const ColouredDiagram& alpha, const ColouredDiagram& beta) {
  if (alpha.n() != beta.n() || alpha.m() != beta.m())
    throw std::invalid_argument("multiply: dimension mismatch");
  const int n = alpha.n();
  const int m = alpha.m();

  if (alpha.bottom_word() != beta.top_word()) return ScaledDiagram::zero(m);

  // alpha top 0..n-1, middle n..2n-1, beta bottom 2n..3n-1
  detail::UnionFind uf(3 * n);
  auto a_slot = [&](int v) { return v - 1; };      // alpha node 1..2n
  auto b_slot = [&](int v) { return n + v - 1; };  // beta top -> middle, bottom -> last third
  for (const auto& b : alpha.blocks())
    for (std::size_t i = 1; i < b.nodes.size(); ++i)
      uf.unite(a_slot(b.nodes[0]), a_slot(b.nodes[i]));
  for (const auto& b : beta.blocks())
    for (std::size_t i = 1; i < b.nodes.size(); ++i)
      uf.unite(b_slot(b.nodes[0]), b_slot(b.nodes[i]));

  // colour of each slot
  std::vector<int> colour(3 * n, -1);
  for (int v = 1; v <= n; ++v) colour[v - 1] = alpha.colour_of(v);
  for (int v = n + 1; v <= 2 * n; ++v) colour[v - 1] = alpha.colour_of(v);
  for (int v = n + 1; v <= 2 * n; ++v) colour[n + v - 1] = beta.colour_of(v);

  std::map<int, std::vector<int>> comp;  // root -> result nodes
  for (int i = 0; i < n; ++i) comp[uf.find(i)].push_back(i + 1);
  for (int i = 0; i < n; ++i) comp[uf.find(2 * n + i)].push_back(n + i + 1);

  std::vector<long> removed(m, 0);
  std::set<int> counted;
  for (int i = 0; i < n; ++i) {
    const int root = uf.find(n + i);
    if (comp.find(root) == comp.end() && counted.insert(root).second)
      ++removed[colour[n + i]];
  }

  std::vector<ColouredBlock> blocks;
  blocks.reserve(comp.size());
  for (auto& [root, nodes] : comp) {
    ColouredBlock blk;
    blk.colour = colour[root];  // components never mix colours
    blk.nodes = std::move(nodes);
    blocks.push_back(std::move(blk));
  }

  Laurent coeff = Laurent::one(m);
  for (int j = 0; j < m; ++j)
    if (removed[j] > 0)
      coeff *= Laurent::variable(m, j, removed[j]);

  return {std::move(coeff), ColouredDiagram(n, m, std::move(blocks))};
}

ScaledDiagram multiply(const ScaledDiagram& alpha, const ColouredDiagram& beta) {
  if (alpha.is_zero()) return alpha;
  ScaledDiagram r = multiply(*alpha.diagram, beta);
  if (!r.is_zero()) r.coeff *= alpha.coeff;
  return r;
}

ScaledDiagram multiply(const ColouredDiagram& alpha, const ScaledDiagram& beta) {
  if (beta.is_zero()) return beta;
  ScaledDiagram r = multiply(alpha, *beta.diagram);
  if (!r.is_zero()) r.coeff *= beta.coeff;
  return r;
}

void DiagramSum::add(const ColouredDiagram& d, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiagramSum::add(const ScaledDiagram& s) {
  if (!s.is_zero()) add(*s.diagram, s.coeff);
}

DiagramSum operator*(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum r;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      ScaledDiagram p = multiply(da, db);
      if (p.is_zero()) continue;
      r.add(*p.diagram, p.coeff * ca * cb);
    }
  }
  return r;
}

ColouredDiagram identity_for_assignment(int n, int m,
                                        const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("identity_for_assignment: bad assignment size");
  std::vector<ColouredBlock> blocks;
  blocks.reserve(n);
  for (int i = 1; i <= n; ++i) {
    if (assignment[i - 1] < 0 || assignment[i - 1] >= m)
      throw std::invalid_argument("identity_for_assignment: colour out of range");
    blocks.push_back({assignment[i - 1], {i, n + i}});
  }
  return ColouredDiagram(n, m, std::move(blocks));
}

std::vector<ColouredDiagram> identity_diagrams(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("identity: n, m must be >= 1");
  std::vector<ColouredDiagram> out;
  std::vector<int> word(n, 0);
  while (true) {
    out.push_back(identity_for_assignment(n, m, word));
    int i = n - 1;
    while (i >= 0 && word[i] == m - 1) word[i--] = 0;
    if (i < 0) break;
    ++word[i];
  }
  return out;
}

DiagramSum identity_sum(int n, int m) {
  DiagramSum s;
  for (const auto& d : identity_diagrams(n, m)) s.add(d, Laurent::one(m));
  return s;
}

bool is_bubble(const ColouredDiagram& d) {
  for (const auto& b : d.blocks())
    if (b.nodes.size() != 2) return false;
  // same-colour crossings on the boundary cycle 1..n, n'..1'
  const int n = d.n();
  auto pos = [&](int v) { return v <= n ? v : n + (2 * n - v + 1); };
  for (int c = 0; c < d.m(); ++c) {
    std::vector<std::pair<int, int>> chords;
    for (const auto& b : d.blocks())
      if (b.colour == c) chords.emplace_back(pos(b.nodes[0]), pos(b.nodes[1]));
    if (chords_noncross(chords)) return false;
  }
  return true;
}

namespace {

// Non-crossing perfect matchings of positions [lo, hi) in a linear sequence.
void noncross_matchings(std::vector<int>& points,
                        std::vector<std::pair<int, int>>& acc,
                        const std::function<void()>& emit) {
  if (points.empty()) {
    emit();
    return;
  }
  const int first = points[0];
  for (std::size_t k = 1; k < points.size(); k += 2) {
    const int partner = points[k];
    std::vector<int> inside(points.begin() + 1, points.begin() + k);
    std::vector<int> outside(points.begin() + k + 1, points.end());
    acc.emplace_back(first, partner);
    noncross_matchings(inside, acc, [&] {
      noncross_matchings(outside, acc, emit);
    });
    acc.pop_back();
  }
}

}  // namespace

void for_each_bubble_diagram(
    int n, int m, const std::function<void(const ColouredDiagram&)>& fn) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("bubble basis: n, m must be >= 1");
  // iterate over (top word, bottom word); per colour the nodes on the
  // boundary cycle carry an independent non-crossing perfect matching
  std::vector<int> top(n, 0), bot(n, 0);
  auto next_word = [&](std::vector<int>& w) {
    int i = n - 1;
    while (i >= 0 && w[i] == m - 1) w[i--] = 0;
    if (i < 0) return false;
    ++w[i];
    return true;
  };
  do {
    std::vector<int> top_counts(m, 0);
    for (int c : top) ++top_counts[c];
    std::fill(bot.begin(), bot.end(), 0);
    do {
      std::vector<int> bot_counts(m, 0);
      for (int c : bot) ++bot_counts[c];
      bool ok = true;
      for (int c = 0; c < m; ++c)
        if ((top_counts[c] + bot_counts[c]) % 2 != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;

      // cycle positions per colour: top nodes 1..n then bottom reversed
      std::vector<std::vector<int>> nodes_of(m);  // global node ids in cycle order
      for (int v = 1; v <= n; ++v) nodes_of[top[v - 1]].push_back(v);
      for (int v = 2 * n; v > n; --v) nodes_of[bot[v - n - 1]].push_back(v);

      // per-colour matchings, then cartesian product
      std::vector<std::vector<std::vector<std::pair<int, int>>>> per_colour(m);
      for (int c = 0; c < m; ++c) {
        std::vector<std::pair<int, int>> acc;
        noncross_matchings(nodes_of[c], acc,
                           [&] { per_colour[c].push_back(acc); });
      }
      std::vector<std::size_t> idx(m, 0);
      while (true) {
        std::vector<ColouredBlock> blocks;
        for (int c = 0; c < m; ++c)
          for (const auto& [a, b] : per_colour[c][idx[c]])
            blocks.push_back({c, {a, b}});
        fn(ColouredDiagram(n, m, std::move(blocks)));
        int c = m - 1;
        while (c >= 0 && ++idx[c] == per_colour[c].size()) idx[c--] = 0;
        if (c < 0) break;
      }
    } while (next_word(bot));
  } while (next_word(top));
}

std::vector<ColouredDiagram> bubble_basis(int n, int m) {
  std::vector<ColouredDiagram> out;
  for_each_bubble_diagram(n, m, [&](const ColouredDiagram& d) { out.push_back(d); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColouredDiagram> bubble_basis_lambda(int n, int m,
                                                 const std::vector<long>& lambda) {
  if (static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("bubble basis: lambda arity mismatch");
  long sum = 0;
  for (long l : lambda) {
    if (l < 0) throw std::invalid_argument("bubble basis: negative lambda entry");
    sum += l;
  }
  if (sum > n || (n - sum) % 2 != 0)
    throw std::invalid_argument("bubble basis: lambda not a weight for this n");
  std::vector<ColouredDiagram> out;
  for_each_bubble_diagram(n, m, [&](const ColouredDiagram& d) {
    const auto [total, per] = d.propagating_profile();
    (void)total;
    for (int c = 0; c < m; ++c)
      if (per[c] != lambda[c]) return;
    out.push_back(d);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Parity parity_split(const ColouredDiagram& d) {
  if (d.m() != 2)
    throw std::invalid_argument("parity_split: defined for m = 2 only");
  int blue_top = 0;
  for (int v = 1; v <= d.n(); ++v)
    if (d.colour_of(v) == 1) ++blue_top;
  return blue_top % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::pair<DiagramSum, DiagramSum> conjugator(int n, int m,
                                             const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("conjugator: bad assignment size");
  for (int c : assignment)
    if (c < 0 || c >= m)
      throw std::invalid_argument("conjugator: colour out of range");

  std::vector<long> mu(m, 0);
  for (int c : assignment) ++mu[c];
  std::vector<long> offset(m, 0);
  for (int c = 1; c < m; ++c) offset[c] = offset[c - 1] + mu[c - 1];

  // theta(i) = (1-based rank of i within its colour class) + offset(colour)
  std::vector<int> theta(n + 1, 0);
  std::vector<long> seen(m, 0);
  for (int i = 1; i <= n; ++i) {
    const int c = assignment[i - 1];
    theta[i] = static_cast<int>(++seen[c] + offset[c]);
  }

  // sorted assignment: colour classes contiguous
  std::vector<int> sorted(n);
  for (int i = 1; i <= n; ++i) sorted[theta[i] - 1] = assignment[i - 1];

  // theta^{(A)}: top colours A, i joined to theta(i)'
  std::vector<ColouredBlock> theta_blocks;
  std::vector<ColouredBlock> theta_inv_blocks;
  for (int i = 1; i <= n; ++i) {
    theta_blocks.push_back({assignment[i - 1], {i, n + theta[i]}});
    theta_inv_blocks.push_back({assignment[i - 1], {theta[i], n + i}});
  }
  const ColouredDiagram theta_diag(n, m, std::move(theta_blocks));
  const ColouredDiagram theta_inv_diag(n, m, std::move(theta_inv_blocks));

  DiagramSum d;
  d.add(theta_diag, Laurent::one(m));
  if (!(theta_inv_diag == theta_diag)) d.add(theta_inv_diag, Laurent::one(m));
  for (const auto& one : identity_diagrams(n, m)) {
    const auto word = one.top_word();
    if (word == assignment || word == sorted) continue;
    d.add(one, Laurent::one(m));
  }
  return {d, d};
}

}  // namespace bubble
