#include "bubble/repr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bubble {

std::vector<WeightLambda> lambda_zero(int n, int m, const ParameterSpec& params) {
  if (params.m() != m)
    throw std::invalid_argument("lambda_zero: parameter arity mismatch");
  std::vector<WeightLambda> all = enumerate_lambda(n, m);
  const bool drop_zero =
      n % 2 == 0 && params.all_specialized() && params.all_zero();
  if (!drop_zero) return all;
  std::vector<WeightLambda> out;
  for (auto& w : all)
    if (w.total() != 0) out.push_back(std::move(w));
  return out;
}

int DecompositionMatrix::index_of(const WeightLambda& w) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == w) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<WeightLambda> paper_6_2_order(int n, int m) {
  if (n != 6 || m != 2)
    throw std::invalid_argument("order paper-6-2 applies to n = 6, m = 2 only");
  const std::vector<std::vector<long>> order = {
      {0, 0}, {2, 0}, {0, 6}, {4, 0}, {6, 0}, {1, 1}, {1, 5}, {0, 2},
      {2, 2}, {0, 4}, {4, 2}, {2, 4}, {3, 1}, {1, 3}, {5, 1}, {3, 3}};
  std::vector<WeightLambda> out;
  out.reserve(order.size());
  for (const auto& l : order) out.push_back(WeightLambda{n, m, l});
  return out;
}

}  // namespace

DecompositionMatrix decomposition_matrix(int n, int m,
                                         const ParameterSpec& params,
                                         WeightOrder order) {
  if (params.m() != m)
    throw std::invalid_argument("decomposition_matrix: parameter arity mismatch");
  // probing each colour's order up front surfaces the rejected l = 1 case
  for (int j = 0; j < m; ++j) (void)params.order(j);

  DecompositionMatrix d;
  d.weights = order == WeightOrder::Paper62 ? paper_6_2_order(n, m)
                                            : lambda_zero(n, m, params);
  const int k = static_cast<int>(d.weights.size());
  d.entries.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (const auto& layer : radical_series(d.weights[i], params)) {
      for (const WeightLambda& w : layer) {
        const int j = d.index_of(w);
        if (j >= 0) d.entries[i][j] = 1;
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> cartan_matrix(const DecompositionMatrix& d) {
  const int k = static_cast<int>(d.weights.size());
  std::vector<std::vector<int>> c(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int s = 0;
      for (int r = 0; r < k; ++r) s += d.entries[r][i] * d.entries[r][j];
      c[i][j] = s;
    }
  return c;
}

BlockPartition blocks(const DecompositionMatrix& d) {
  const int k = static_cast<int>(d.weights.size());
  detail::UnionFind uf(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && (d.entries[i][j] || d.entries[j][i])) uf.unite(i, j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[uf.find(i)].push_back(i);
  BlockPartition p;
  p.weights = d.weights;
  // classes ordered by smallest member index
  std::vector<std::pair<int, std::vector<int>>> sorted;
  for (auto& [root, members] : groups) {
    (void)root;
    std::sort(members.begin(), members.end());
    sorted.emplace_back(members.front(), std::move(members));
  }
  std::sort(sorted.begin(), sorted.end());
  for (auto& [first, members] : sorted) {
    (void)first;
    p.classes.push_back(std::move(members));
  }
  return p;
}

std::vector<std::vector<int>> submatrix(const std::vector<std::vector<int>>& a,
                                        const std::vector<int>& idx) {
  std::vector<std::vector<int>> out(idx.size(), std::vector<int>(idx.size(), 0));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out[i][j] = a[idx[i]][idx[j]];
  return out;
}

std::string blocks_dot(const DecompositionMatrix& d, const ParameterSpec& params) {
  std::ostringstream os;
  os << "digraph blocks {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.weights.size(); ++i) {
    const WeightLambda& w = d.weights[i];
    std::vector<int> critical;
    for (int j = 0; j < w.m; ++j) {
      const auto l = params.order(j);
      if (l && (w.lambda[j] + 1) % *l == 0) critical.push_back(j);
    }
    os << "  n" << i << " [label=\"" << w.str() << "\"";
    if (!critical.empty()) {
      os << " critical=\"";
      for (std::size_t c = 0; c < critical.size(); ++c) {
        if (c) os << ",";
        os << critical[c];
      }
      os << "\" style=bold";
    }
    os << "];\n";
  }
  for (std::size_t i = 0; i < d.weights.size(); ++i)
    for (std::size_t j = 0; j < d.weights.size(); ++j)
      if (i != j && d.entries[i][j])
        os << "  n" << j << " -> n" << i << ";\n";
  os << "}\n";
  return os.str();
}

bool cell_hom_exists(const WeightLambda& from, const WeightLambda& to,
                     const ParameterSpec& params) {
  if (params.m() != from.m)
    throw std::invalid_argument("cell_hom_exists: parameter arity mismatch");
  for (int j = 0; j < params.m(); ++j)
    if (params.is_zero(j))
      throw std::invalid_argument(
          "cell_hom_exists: arc preservation requires invertible delta");
  return cell_hom_condition(from, to, params);
}

bool cell_hom_condition(const WeightLambda& from, const WeightLambda& to,
                        const ParameterSpec& params) {
  from.validate();
  to.validate();
  if (from.n != to.n || from.m != to.m)
    throw std::invalid_argument("cell_hom_exists: size mismatch");
  if (params.m() != from.m)
    throw std::invalid_argument("cell_hom_exists: parameter arity mismatch");

  if (from == to) return true;  // identity

  std::vector<long> t(from.m);
  for (int j = 0; j < from.m; ++j) {
    const long diff = from.lambda[j] - to.lambda[j];
    if (diff < 0 || diff % 2 != 0) return false;
    t[j] = diff / 2;
  }

  // the per-colour conditions are independent of the arc distribution p, but
  // some p in Gamma_{(v,m)} must realize the restriction
  const auto ps = compositions(from.v(), from.m);
  for (const auto& p : ps) {
    bool ok = true;
    for (int j = 0; j < from.m; ++j) {
      if (t[j] == 0) continue;  // identity factor
      const auto l = params.order(j);
      if (!l) {
        ok = false;  // generic colour admits no nontrivial hom
        break;
      }
      const int nj = static_cast<int>(from.lambda[j] + 2 * p[j]);
      const int p2 = static_cast<int>(p[j]);
      const int p1 = static_cast<int>(p[j] + t[j]);
      if (2 * p1 > nj || !hom_exists_tl(nj, p2, p1, *l)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_semisimple(int n, int m, const ParameterSpec& params) {
  if (params.m() != m)
    throw std::invalid_argument("is_semisimple: parameter arity mismatch");
  for (const WeightLambda& w : enumerate_lambda(n, m)) {
    for (int j = 0; j < m; ++j) {
      const auto l = params.order(j);
      if (l && (w.lambda[j] + 1) % *l != 0) return false;
    }
  }
  return true;
}

bool is_quasi_hereditary(int n, int m, const ParameterSpec& params) {
  if (params.m() != m)
    throw std::invalid_argument("is_quasi_hereditary: parameter arity mismatch");
  if (n % 2 == 1) return true;
  for (int j = 0; j < m; ++j)
    if (params.is_generic(j) || !params.is_zero(j)) return true;
  return false;
}

}  // namespace bubble
