#include "bubble/tl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bubble/partition.hpp"

namespace bubble {

LinkState::LinkState(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("LinkState: negative n");
  std::vector<bool> used(n + 1, false);
  for (auto& [a, b] : arcs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_ || a == b)
      throw std::invalid_argument("LinkState: arc out of range");
    if (used[a] || used[b]) throw std::invalid_argument("LinkState: node reused");
    used[a] = used[b] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (chords_noncross(arcs_))
    throw std::invalid_argument("LinkState: arcs cross");
  for (int d = 1; d <= n_; ++d) {
    if (used[d]) continue;
    for (const auto& [a, b] : arcs_)
      if (a < d && d < b)
        throw std::invalid_argument("LinkState: defect under an arc");
  }
}

std::vector<int> LinkState::defects() const {
  std::vector<bool> used(n_ + 1, false);
  for (const auto& [a, b] : arcs_) used[a] = used[b] = true;
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

std::string LinkState::str() const {
  std::ostringstream os;
  os << "n=" << n_ << "; arcs=";
  for (const auto& [a, b] : arcs_) os << "(" << a << "," << b << ")";
  return os.str();
}

LinkState LinkState::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&](char c) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size() || text[i] != c)
      throw std::invalid_argument("link state text: expected '" +
                                  std::string(1, c) + "'");
    ++i;
  };
  auto number = [&]() {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i) throw std::invalid_argument("link state text: expected number");
    return std::stoi(text.substr(start, i - start));
  };
  skip('n');
  skip('=');
  const int n = number();
  skip(';');
  while (i < text.size() && text[i] == ' ') ++i;
  if (text.compare(i, 5, "arcs=") != 0)
    throw std::invalid_argument("link state text: expected 'arcs='");
  i += 5;
  std::vector<std::pair<int, int>> arcs;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    skip('(');
    const int a = number();
    skip(',');
    const int b = number();
    skip(')');
    arcs.emplace_back(a, b);
  }
  return LinkState(n, std::move(arcs));
}

long long dim_cell(int n, int p) {
  if (p < 0 || 2 * p > n) return 0;
  return binomial(n, p) - binomial(n, p - 1);
}

namespace {

void gen_states(int n, int p, int pos, std::vector<int>& stack,
                std::vector<std::pair<int, int>>& arcs, int open_budget,
                std::vector<LinkState>& out) {
  if (pos > n) {
    if (stack.empty() && static_cast<int>(arcs.size()) == p)
      out.emplace_back(n, arcs);
    return;
  }
  // close an open arc
  if (!stack.empty()) {
    const int opener = stack.back();
    stack.pop_back();
    arcs.emplace_back(opener, pos);
    gen_states(n, p, pos + 1, stack, arcs, open_budget, out);
    arcs.pop_back();
    stack.push_back(opener);
  }
  // open a new arc
  if (open_budget > 0) {
    stack.push_back(pos);
    gen_states(n, p, pos + 1, stack, arcs, open_budget - 1, out);
    stack.pop_back();
  }
  // defect, only outside every arc
  if (stack.empty()) {
    gen_states(n, p, pos + 1, stack, arcs, open_budget, out);
  }
}

}  // namespace

std::vector<LinkState> enumerate_link_states(int n, int p) {
  if (p < 0 || 2 * p > n)
    throw std::invalid_argument("enumerate_link_states: need 0 <= p <= n/2");
  std::vector<LinkState> out;
  std::vector<int> stack;
  std::vector<std::pair<int, int>> arcs;
  gen_states(n, p, 1, stack, arcs, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<long> tl_form_loops(const LinkState& x, const LinkState& y) {
  if (x.n() != y.n()) throw std::invalid_argument("tl_form: size mismatch");
  if (x.p() != y.p()) throw std::invalid_argument("tl_form: arc count mismatch");
  const int n = x.n();
  std::vector<int> xp(n + 1, 0), yp(n + 1, 0);  // partner or 0
  for (const auto& [a, b] : x.arcs()) xp[a] = b, xp[b] = a;
  for (const auto& [a, b] : y.arcs()) yp[a] = b, yp[b] = a;

  std::vector<bool> visited(n + 1, false);
  long loops = 0;
  for (int v = 1; v <= n; ++v) {
    if (visited[v] || (xp[v] && yp[v])) continue;
    if (!xp[v] && !yp[v]) {
      visited[v] = true;  // defect meets defect
      continue;
    }
    // walk the path starting at an endpoint, alternating edge types
    const bool start_missing_x = (xp[v] == 0);
    int cur = v;
    bool use_x = !start_missing_x;
    visited[cur] = true;
    while (true) {
      const int nxt = use_x ? xp[cur] : yp[cur];
      if (nxt == 0) break;
      cur = nxt;
      visited[cur] = true;
      use_x = !use_x;
    }
    // `cur` is the other endpoint; it is missing the edge type `use_x`
    const bool end_missing_x = use_x;
    if (start_missing_x == end_missing_x) return std::nullopt;
  }
  // remaining unvisited nodes with both partners lie on cycles
  for (int v = 1; v <= n; ++v) {
    if (visited[v]) continue;
    ++loops;
    int cur = v;
    bool use_x = true;
    while (!visited[cur]) {
      visited[cur] = true;
      cur = use_x ? xp[cur] : yp[cur];
      use_x = !use_x;
    }
  }
  return loops;
}

Laurent tl_form(const LinkState& x, const LinkState& y, int vars, int var) {
  const auto loops = tl_form_loops(x, y);
  if (!loops) return Laurent(vars);
  return Laurent::variable(vars, var, *loops);
}

Matrix<Laurent> gram_tl(int n, int p, int vars, int var) {
  const auto states = enumerate_link_states(n, p);
  const long d = static_cast<long>(states.size());
  Matrix<Laurent> g(d, d, Laurent(vars));
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      Laurent v = tl_form(states[i], states[j], vars, var);
      g.at(i, j) = v;
      g.at(j, i) = std::move(v);
    }
  return g;
}

long r_value(int n, int p, long l) {
  if (l < 2) throw std::invalid_argument("r_value: order must be >= 2");
  const long v = n - 2 * p;  // n - 2p + 1 = kl + r, 1 <= r <= l
  return (v % l) + 1;
}

bool is_critical(int n, int p, long l) { return r_value(n, p, l) == l; }

long long dim_radical_tl(int n, int p, std::optional<long> l) {
  if (!l) return 0;  // generic: semisimple
  const long r = r_value(n, p, *l);
  if (r == *l) return 0;  // critical
  const long q = p + r - *l;
  if (q < 0) return 0;
  return dim_head_tl(n, static_cast<int>(q), l);
}

long long dim_head_tl(int n, int p, std::optional<long> l) {
  return dim_cell(n, p) - dim_radical_tl(n, p, l);
}

bool hom_exists_tl(int n, int p2, int p1, long l) {
  if (l < 2) throw std::invalid_argument("hom_exists_tl: order must be >= 2");
  if (p1 < 0 || p2 < 0 || 2 * p1 > n || 2 * p2 > n)
    throw std::invalid_argument("hom_exists_tl: invalid cell index");
  const int diff = p1 - p2;
  return diff >= 0 && diff < l && (n - p1 - p2 + 1) % l == 0;
}

}  // namespace bubble
