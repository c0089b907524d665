#include "bubble/cell.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace bubble {

long WeightLambda::total() const {
  long s = 0;
  for (long x : lambda) s += x;
  return s;
}

int WeightLambda::v() const { return static_cast<int>((n - total()) / 2); }

void WeightLambda::validate() const {
  if (n < 0 || m < 1 || static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("weight: arity mismatch");
  for (long x : lambda)
    if (x < 0) throw std::invalid_argument("weight: negative entry");
  const long t = total();
  if (t > n || (n - t) % 2 != 0)
    throw std::invalid_argument("weight: not in the lattice for this n");
}

std::string WeightLambda::str() const {
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < m; ++j) {
    if (j) os << ",";
    os << lambda[j];
  }
  os << ")";
  return os.str();
}

WeightLambda WeightLambda::parse(int n, int m, const std::string& csv) {
  WeightLambda w{n, m, {}};
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string digits;
    for (char c : item)
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    if (digits.empty())
      throw std::invalid_argument("weight: bad entry '" + item + "'");
    w.lambda.push_back(std::stol(digits));
  }
  w.validate();
  return w;
}

std::vector<std::vector<long>> compositions(long total, int m) {
  std::vector<std::vector<long>> out;
  if (m < 1 || total < 0) return out;
  std::vector<long> cur(m, 0);
  std::function<void(int, long)> rec = [&](int idx, long rest) {
    if (idx == m - 1) {
      cur[idx] = rest;
      out.push_back(cur);
      return;
    }
    for (long x = 0; x <= rest; ++x) {
      cur[idx] = x;
      rec(idx + 1, rest - x);
    }
  };
  rec(0, total);
  return out;
}

std::vector<WeightLambda> enumerate_lambda(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("enumerate_lambda: n, m must be >= 1");
  std::vector<WeightLambda> out;
  for (int v = 0; 2 * v <= n; ++v)
    for (auto& c : compositions(n - 2 * v, m))
      out.push_back(WeightLambda{n, m, std::move(c)});
  return out;
}

namespace {

char colour_letter(int c, int m) {
  static const char* letters = "rbgy";
  if (m <= 4) return letters[c];
  return static_cast<char>('0' + c);
}

int colour_from_letter(char ch, int m) {
  static const std::string letters = "rbgy";
  if (m <= 4) {
    const auto pos = letters.find(ch);
    if (pos == std::string::npos || static_cast<int>(pos) >= m)
      throw std::invalid_argument("link state text: bad colour letter");
    return static_cast<int>(pos);
  }
  if (!std::isdigit(static_cast<unsigned char>(ch)))
    throw std::invalid_argument("link state text: bad colour digit");
  return ch - '0';
}

}  // namespace

MultiLinkState::MultiLinkState(int n, int m, std::vector<int> colour_word,
                               std::vector<std::pair<int, int>> arcs)
    : n_(n), m_(m), word_(std::move(colour_word)), arcs_(std::move(arcs)) {
  if (static_cast<int>(word_.size()) != n_)
    throw std::invalid_argument("MultiLinkState: colour word size mismatch");
  for (int c : word_)
    if (c < 0 || c >= m_)
      throw std::invalid_argument("MultiLinkState: colour out of range");
  std::vector<bool> used(n_ + 1, false);
  for (auto& [a, b] : arcs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_ || a == b)
      throw std::invalid_argument("MultiLinkState: arc out of range");
    if (used[a] || used[b])
      throw std::invalid_argument("MultiLinkState: node reused");
    if (word_[a - 1] != word_[b - 1])
      throw std::invalid_argument("MultiLinkState: arc joins two colours");
    used[a] = used[b] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
  // the fragment constructor enforces per-colour planarity and the
  // defect-not-under-arc rule
  for (int c = 0; c < m_; ++c) (void)fragment(c);
}

std::vector<long> MultiLinkState::defect_counts() const {
  std::vector<long> counts(m_, 0);
  for (int c : word_) ++counts[c];
  for (const auto& [a, b] : arcs_) {
    (void)b;
    counts[word_[a - 1]] -= 2;
  }
  return counts;
}

std::vector<long> MultiLinkState::arc_counts() const {
  std::vector<long> counts(m_, 0);
  for (const auto& [a, b] : arcs_) {
    (void)b;
    ++counts[word_[a - 1]];
  }
  return counts;
}

LinkState MultiLinkState::fragment(int colour) const {
  std::vector<int> index(n_ + 1, 0);
  int k = 0;
  for (int v = 1; v <= n_; ++v)
    if (word_[v - 1] == colour) index[v] = ++k;
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [a, b] : arcs_)
    if (word_[a - 1] == colour) arcs.emplace_back(index[a], index[b]);
  return LinkState(k, std::move(arcs));
}

std::string MultiLinkState::str() const {
  std::ostringstream os;
  os << "colours=";
  for (int c : word_) os << colour_letter(c, m_);
  for (int c = 0; c < m_; ++c) {
    std::vector<std::pair<int, int>> arcs;
    for (const auto& [a, b] : arcs_)
      if (word_[a - 1] == c) arcs.emplace_back(a, b);
    if (arcs.empty()) continue;
    os << "; " << c << ":arcs=";
    for (const auto& [a, b] : arcs) os << "(" << a << "," << b << ")";
  }
  return os.str();
}

MultiLinkState MultiLinkState::parse(int n, int m, const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ';')) ++i;
  };
  skip_ws();
  if (text.compare(i, 8, "colours=") != 0)
    throw std::invalid_argument("link state text: expected 'colours='");
  i += 8;
  std::vector<int> word;
  while (i < text.size() && text[i] != ';' && text[i] != ' ')
    word.push_back(colour_from_letter(text[i++], m));
  std::vector<std::pair<int, int>> arcs;
  skip_ws();
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (start == i || i >= text.size() || text[i] != ':')
      throw std::invalid_argument("link state text: expected '<colour>:arcs='");
    ++i;  // ':'
    if (text.compare(i, 5, "arcs=") != 0)
      throw std::invalid_argument("link state text: expected 'arcs='");
    i += 5;
    while (i < text.size() && text[i] == '(') {
      ++i;
      std::size_t s2 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      const int a = std::stoi(text.substr(s2, i - s2));
      if (i >= text.size() || text[i] != ',')
        throw std::invalid_argument("link state text: expected ','");
      ++i;
      s2 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      const int b = std::stoi(text.substr(s2, i - s2));
      if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument("link state text: expected ')'");
      ++i;
      arcs.emplace_back(a, b);
    }
    skip_ws();
  }
  return MultiLinkState(n, m, std::move(word), std::move(arcs));
}

std::vector<MultiLinkState> enumerate_delta_basis(const WeightLambda& lw) {
  lw.validate();
  const int n = lw.n, m = lw.m;
  std::vector<MultiLinkState> out;
  std::vector<int> word(n, 0);
  auto next_word = [&]() {
    int i = n - 1;
    while (i >= 0 && word[i] == m - 1) word[i--] = 0;
    if (i < 0) return false;
    ++word[i];
    return true;
  };
  do {
    std::vector<long> counts(m, 0);
    for (int c : word) ++counts[c];
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      const long diff = counts[j] - lw.lambda[j];
      if (diff < 0 || diff % 2 != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    std::vector<std::vector<int>> pos(m);
    for (int v = 1; v <= n; ++v) pos[word[v - 1]].push_back(v);
    std::vector<std::vector<std::vector<std::pair<int, int>>>> choices(m);
    for (int j = 0; j < m; ++j) {
      const int u = static_cast<int>((counts[j] - lw.lambda[j]) / 2);
      for (const LinkState& st :
           enumerate_link_states(static_cast<int>(counts[j]), u)) {
        std::vector<std::pair<int, int>> global;
        global.reserve(st.arcs().size());
        for (const auto& [a, b] : st.arcs())
          global.emplace_back(pos[j][a - 1], pos[j][b - 1]);
        choices[j].push_back(std::move(global));
      }
    }
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      std::vector<std::pair<int, int>> arcs;
      for (int j = 0; j < m; ++j)
        arcs.insert(arcs.end(), choices[j][idx[j]].begin(),
                    choices[j][idx[j]].end());
      out.emplace_back(n, m, word, std::move(arcs));
      int j = m - 1;
      while (j >= 0 && ++idx[j] == choices[j].size()) idx[j--] = 0;
      if (j < 0) break;
    }
  } while (next_word());
  return out;
}

ActResult act(const ColouredDiagram& d, const MultiLinkState& a) {
  if (d.n() != a.n() || d.m() != a.m())
    throw std::invalid_argument("act: size mismatch");
  const int n = d.n(), m = d.m();
  for (const auto& b : d.blocks())
    if (b.nodes.size() != 2)
      throw std::invalid_argument("act: diagram has a block of size != 2");

  if (d.bottom_word() != a.colours()) return {Laurent(m), std::nullopt};

  // partner maps: d over 1..2n, a's arcs over bottom nodes n+1..2n
  std::vector<int> dp(2 * n + 1, 0), ap(2 * n + 1, 0);
  for (const auto& b : d.blocks()) {
    dp[b.nodes[0]] = b.nodes[1];
    dp[b.nodes[1]] = b.nodes[0];
  }
  for (const auto& [x, y] : a.arcs()) {
    ap[n + x] = n + y;
    ap[n + y] = n + x;
  }

  std::vector<bool> visited(2 * n + 1, false);
  std::vector<std::pair<int, int>> arcs;

  // paths from each top node: end at another top node (arc) or at a defect
  // of a (defect of the result)
  for (int v = 1; v <= n; ++v) {
    if (visited[v]) continue;
    visited[v] = true;
    int cur = dp[v];
    visited[cur] = true;
    bool use_a = true;
    while (cur > n) {
      const int nxt = use_a ? ap[cur] : dp[cur];
      if (nxt == 0) break;  // reached a defect of a
      cur = nxt;
      visited[cur] = true;
      use_a = !use_a;
    }
    if (cur <= n) arcs.emplace_back(std::min(v, cur), std::max(v, cur));
  }

  // a defect of a not reached from the top row sits on a bottom path joining
  // two defects: the state drops below the weight and dies in the quotient
  for (int v = n + 1; v <= 2 * n; ++v)
    if (!visited[v] && ap[v] == 0) return {Laurent(m), std::nullopt};

  // everything still unvisited lies on closed loops
  std::vector<long> loops(m, 0);
  for (int v = n + 1; v <= 2 * n; ++v) {
    if (visited[v]) continue;
    ++loops[a.colours()[v - n - 1]];
    int cur = v;
    bool use_a = true;
    while (!visited[cur]) {
      visited[cur] = true;
      cur = use_a ? ap[cur] : dp[cur];
      use_a = !use_a;
    }
  }

  Laurent coeff = Laurent::one(m);
  for (int j = 0; j < m; ++j)
    if (loops[j] > 0) coeff *= Laurent::variable(m, j, loops[j]);

  MultiLinkState result(n, m, d.top_word(), std::move(arcs));
  return {std::move(coeff), std::move(result)};
}

Laurent inner_product(const MultiLinkState& a, const MultiLinkState& b) {
  if (a.n() != b.n() || a.m() != b.m())
    throw std::invalid_argument("inner_product: size mismatch");
  if (a.defect_counts() != b.defect_counts())
    throw std::invalid_argument("inner_product: weight mismatch");
  const int m = a.m();
  if (a.colours() != b.colours()) return Laurent(m);
  Laurent result = Laurent::one(m);
  for (int j = 0; j < m; ++j) {
    const auto loops = tl_form_loops(a.fragment(j), b.fragment(j));
    if (!loops) return Laurent(m);
    if (*loops > 0) result *= Laurent::variable(m, j, *loops);
  }
  return result;
}

Matrix<Laurent> gram_direct(const WeightLambda& lw) {
  const auto basis = enumerate_delta_basis(lw);
  const long d = static_cast<long>(basis.size());
  Matrix<Laurent> g(d, d, Laurent(lw.m));
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      Laurent v = inner_product(basis[i], basis[j]);
      g.at(i, j) = v;
      g.at(j, i) = std::move(v);
    }
  return g;
}

long long GramBlockReport::dimension() const {
  long long total = 0;
  for (const auto& b : blocks) {
    long long prod = 1;
    for (long long d : b.factor_dims) prod *= d;
    total += b.multiplicity * prod;
  }
  return total;
}

GramBlockReport gram_factorized(const WeightLambda& lw) {
  lw.validate();
  GramBlockReport report{lw, {}, Laurent::one(lw.m)};
  for (const auto& u : compositions(lw.v(), lw.m)) {
    GramBlock block;
    block.u = u;
    std::vector<long> mu(lw.m);
    for (int j = 0; j < lw.m; ++j) mu[j] = lw.lambda[j] + 2 * u[j];
    block.multiplicity = multinomial(lw.n, mu);
    long long dim_prod = 1;
    for (int j = 0; j < lw.m; ++j) {
      block.factors.push_back(
          gram_tl(static_cast<int>(mu[j]), static_cast<int>(u[j]), lw.m, j));
      block.factor_dims.push_back(
          dim_cell(static_cast<int>(mu[j]), static_cast<int>(u[j])));
      dim_prod *= block.factor_dims.back();
    }
    // det contribution: prod_j det(G_j)^(multiplicity * prod_{j'!=j} d_{j'})
    for (int j = 0; j < lw.m; ++j) {
      const Laurent dj = determinant(block.factors[j]);
      const long long exponent =
          block.multiplicity * (dim_prod / block.factor_dims[j]);
      report.det *= dj.pow(exponent);
    }
    report.blocks.push_back(std::move(block));
  }
  return report;
}

Laurent gram_det(const WeightLambda& lw) { return gram_factorized(lw).det; }

Matrix<Laurent> assemble_factorized(const WeightLambda& lw,
                                    const GramBlockReport& report) {
  const int n = lw.n, m = lw.m;
  std::vector<Matrix<Laurent>> blocks;
  std::vector<int> word(n, 0);
  auto next_word = [&]() {
    int i = n - 1;
    while (i >= 0 && word[i] == m - 1) word[i--] = 0;
    if (i < 0) return false;
    ++word[i];
    return true;
  };
  do {
    std::vector<long> counts(m, 0);
    for (int c : word) ++counts[c];
    std::vector<long> u(m);
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      const long diff = counts[j] - lw.lambda[j];
      if (diff < 0 || diff % 2 != 0) {
        ok = false;
        break;
      }
      u[j] = diff / 2;
    }
    if (!ok) continue;
    const GramBlock* found = nullptr;
    for (const auto& b : report.blocks)
      if (b.u == u) {
        found = &b;
        break;
      }
    if (!found) throw std::logic_error("assemble_factorized: missing block");
    Matrix<Laurent> tensor = found->factors.empty()
                                 ? Matrix<Laurent>(1, 1, Laurent(m))
                                 : found->factors[0];
    for (std::size_t j = 1; j < found->factors.size(); ++j)
      tensor = kronecker(tensor, found->factors[j]);
    blocks.push_back(std::move(tensor));
  } while (next_word());
  return block_diagonal(blocks, Laurent(m));
}

long long dim_delta(const WeightLambda& lw) {
  lw.validate();
  long long total = 0;
  for (const auto& u : compositions(lw.v(), lw.m)) {
    std::vector<long> mu(lw.m);
    long long prod = 1;
    for (int j = 0; j < lw.m; ++j) {
      mu[j] = lw.lambda[j] + 2 * u[j];
      prod *= dim_cell(static_cast<int>(mu[j]), static_cast<int>(u[j]));
    }
    total += multinomial(lw.n, mu) * prod;
  }
  return total;
}

long long dim_head(const WeightLambda& lw, const ParameterSpec& params) {
  lw.validate();
  if (params.m() != lw.m)
    throw std::invalid_argument("dim_head: parameter arity mismatch");
  long long total = 0;
  for (const auto& u : compositions(lw.v(), lw.m)) {
    std::vector<long> mu(lw.m);
    long long prod = 1;
    for (int j = 0; j < lw.m; ++j) {
      mu[j] = lw.lambda[j] + 2 * u[j];
      prod *= dim_head_tl(static_cast<int>(mu[j]), static_cast<int>(u[j]),
                          params.order(j));
    }
    total += multinomial(lw.n, mu) * prod;
  }
  return total;
}

long long dim_radical(const WeightLambda& lw, const ParameterSpec& params) {
  return dim_delta(lw) - dim_head(lw, params);
}

long long dim_radical_two_colours(const WeightLambda& lw,
                                  const ParameterSpec& params) {
  if (lw.m != 2 || params.m() != 2)
    throw std::invalid_argument("dim_radical_two_colours: m = 2 only");
  lw.validate();
  long long total = 0;
  for (const auto& u : compositions(lw.v(), 2)) {
    const int n0 = static_cast<int>(lw.lambda[0] + 2 * u[0]);
    const int n1 = static_cast<int>(lw.lambda[1] + 2 * u[1]);
    const long long v0 = dim_cell(n0, static_cast<int>(u[0]));
    const long long v1 = dim_cell(n1, static_cast<int>(u[1]));
    const long long r0 =
        dim_radical_tl(n0, static_cast<int>(u[0]), params.order(0));
    const long long r1 =
        dim_radical_tl(n1, static_cast<int>(u[1]), params.order(1));
    total += multinomial(lw.n, {n0, n1}) * (r0 * v1 + v0 * r1 - r0 * r1);
  }
  return total;
}

std::vector<std::vector<WeightLambda>> radical_series(
    const WeightLambda& lw, const ParameterSpec& params) {
  lw.validate();
  if (params.m() != lw.m)
    throw std::invalid_argument("radical_series: parameter arity mismatch");

  // replaceable colours: declared order and non-critical (t_j > 0 solves
  // lambda_j + t_j + 1 = 0 mod l_j with 0 < t_j < l_j)
  std::vector<int> repl;
  std::vector<long> t(lw.m, 0);
  for (int j = 0; j < lw.m; ++j) {
    const auto l = params.order(j);
    if (!l) continue;
    t[j] = (*l - ((lw.lambda[j] + 1) % *l)) % *l;
    if (t[j] > 0) repl.push_back(j);
  }

  std::vector<std::vector<WeightLambda>> layers;
  const int s = static_cast<int>(repl.size());
  for (int k = 0; k <= s; ++k) {
    std::vector<WeightLambda> layer;
    std::vector<int> comb(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == k) {
        WeightLambda w = lw;
        for (int idx : comb) w.lambda[repl[idx]] += 2 * t[repl[idx]];
        if (w.total() <= lw.n) layer.push_back(std::move(w));
        return;
      }
      for (int i = start; i < s; ++i) {
        comb[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    if (layer.empty()) break;
    layers.push_back(std::move(layer));
  }
  return layers;
}

std::optional<std::vector<TLWeight>> localize(const WeightLambda& lw,
                                              const std::vector<long>& mu) {
  lw.validate();
  if (static_cast<int>(mu.size()) != lw.m)
    throw std::invalid_argument("localize: arity mismatch");
  long sum = 0;
  for (long x : mu) {
    if (x < 0) throw std::invalid_argument("localize: negative entry");
    sum += x;
  }
  if (sum != lw.n)
    throw std::invalid_argument("localize: mu must distribute all n nodes");
  std::vector<TLWeight> out(lw.m);
  for (int j = 0; j < lw.m; ++j) {
    const long diff = mu[j] - lw.lambda[j];
    if (diff < 0 || diff % 2 != 0) return std::nullopt;
    out[j] = TLWeight{static_cast<int>(mu[j]), static_cast<int>(diff / 2)};
  }
  return out;
}

}  // namespace bubble
