#include "bubble/check.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "bubble/io.hpp"

namespace bubble {

namespace {

using Rng = std::mt19937;

Laurent random_laurent(Rng& rng, int vars) {
  std::uniform_int_distribution<int> terms(0, 3), coeff(-4, 4), exp(-2, 2);
  Laurent p(vars);
  const int k = terms(rng);
  for (int t = 0; t <= k; ++t) {
    std::vector<long> e(vars);
    for (int j = 0; j < vars; ++j) e[j] = exp(rng);
    p += Laurent::monomial(vars, e, coeff(rng));
  }
  return p;
}

// random coloured diagram whose top colour word is prescribed
ColouredDiagram random_diagram(Rng& rng, int n, int m,
                               const std::vector<int>& top_word) {
  std::uniform_int_distribution<int> colour(0, m - 1);
  std::vector<int> word(2 * n);
  for (int i = 0; i < n; ++i) word[i] = top_word[i];
  for (int i = n; i < 2 * n; ++i) word[i] = colour(rng);
  // random partition of each colour class
  std::vector<ColouredBlock> blocks;
  for (int c = 0; c < m; ++c) {
    std::vector<int> nodes;
    for (int v = 1; v <= 2 * n; ++v)
      if (word[v - 1] == c) nodes.push_back(v);
    std::vector<std::vector<int>> parts;
    for (int v : nodes) {
      std::uniform_int_distribution<std::size_t> pick(0, parts.size());
      const std::size_t w = pick(rng);
      if (w == parts.size())
        parts.push_back({v});
      else
        parts[w].push_back(v);
    }
    for (auto& p : parts) blocks.push_back({c, std::move(p)});
  }
  return ColouredDiagram(n, m, std::move(blocks));
}

ColouredDiagram random_bubble(Rng& rng, int n, int m,
                              const std::vector<int>& top_word) {
  std::uniform_int_distribution<int> colour(0, m - 1);
  while (true) {
    std::vector<int> word(2 * n);
    for (int i = 0; i < n; ++i) word[i] = top_word[i];
    for (int i = n; i < 2 * n; ++i) word[i] = colour(rng);
    std::vector<int> counts(m, 0);
    for (int c : word) ++counts[c];
    bool ok = true;
    for (int c = 0; c < m; ++c)
      if (counts[c] % 2) ok = false;
    if (!ok) continue;
    // random non-crossing matching per colour on the boundary cycle
    std::vector<ColouredBlock> blocks;
    auto cycle_nodes = [&](int c) {
      std::vector<int> out;
      for (int v = 1; v <= n; ++v)
        if (word[v - 1] == c) out.push_back(v);
      for (int v = 2 * n; v > n; --v)
        if (word[v - 1] == c) out.push_back(v);
      return out;
    };
    std::function<void(std::vector<int>)> match = [&](std::vector<int> pts) {
      if (pts.empty()) return;
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() / 2 - 1);
      const std::size_t k = 2 * pick(rng) + 1;
      blocks.push_back({word[pts[0] - 1], {pts[0], pts[k]}});
      match(std::vector<int>(pts.begin() + 1, pts.begin() + k));
      match(std::vector<int>(pts.begin() + k + 1, pts.end()));
    };
    for (int c = 0; c < m; ++c) match(cycle_nodes(c));
    return ColouredDiagram(n, m, std::move(blocks));
  }
}

struct Reporter {
  std::ostream& out;
  bool all_ok = true;
  void line(const std::string& name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) all_ok = false;
  }
};

}  // namespace

bool run_check_suite(std::ostream& out) {
  Reporter rep{out};
  Rng rng(12345);

  {  // ring axioms on random Laurent triples
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      const Laurent a = random_laurent(rng, 2), b = random_laurent(rng, 2),
                    c = random_laurent(rng, 2);
      ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
           a * b == b * a && a + b == b + a;
    }
    rep.line("laurent ring axioms", ok);
  }

  {  // minimal polynomials hit the numeric cosine roots
    bool ok = true;
    for (long l = 2; l <= 12; ++l) {
      const double root = 2.0 * std::cos(M_PI / static_cast<double>(l));
      if (std::abs(ipoly_eval(minpoly_for_order(l), root)) >= 1e-9) ok = false;
    }
    rep.line("cosine minimal polynomials", ok);
  }

  {  // field inverses multiply back to one
    bool ok = true;
    const auto spec = ParameterSpec::parse({"root:2", "root:4"});
    const Evaluator eval(spec);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int i = 0; i < 100 && ok; ++i) {
      std::vector<Rat> c(eval.field()->degree());
      bool zero = true;
      for (auto& q : c) {
        q = coeff(rng);
        if (q != 0) zero = false;
      }
      if (zero) continue;
      const Algebraic a(eval.field(), c);
      const Algebraic prod = a * a.inverse();
      ok = prod == Algebraic::from_rational(eval.field(), Rat(1));
    }
    rep.line("algebraic field inverses", ok);
  }

  {  // associativity of the diagram product with scalar bookkeeping
    bool ok = true;
    std::uniform_int_distribution<int> npick(1, 4), mpick(1, 2), cpick(0, 2);
    for (int i = 0; i < 200 && ok; ++i) {
      const int n = npick(rng), m = mpick(rng);
      std::vector<int> top(n);
      std::uniform_int_distribution<int> colour(0, m - 1);
      for (int& c : top) c = colour(rng);
      const ColouredDiagram a = random_diagram(rng, n, m, top);
      const ColouredDiagram b = random_diagram(rng, n, m, a.bottom_word());
      const ColouredDiagram c = random_diagram(rng, n, m, b.bottom_word());
      ok = multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
    }
    rep.line("diagram product associativity", ok);
  }

  {  // non-crossing matchings on 2n boundary nodes count Catalan(n)
    const long long catalan[] = {1, 1, 2, 5, 14, 42};
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      const auto basis = bubble_basis(n, 1);
      if (static_cast<long long>(basis.size()) != catalan[n]) ok = false;
    }
    rep.line("single-colour basis counts Catalan", ok);
  }

  {  // identity neutrality and bubble closure
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n) {
      for (int m = 1; m <= 2 && ok; ++m) {
        const DiagramSum id = identity_sum(n, m);
        for (const auto& d : bubble_basis(n, m)) {
          DiagramSum s;
          s.add(d, Laurent::one(m));
          if (!(id * s == s && s * id == s)) ok = false;
        }
      }
    }
    rep.line("identity sum is a two-sided unit", ok);
  }

  {  // closure of bubble diagrams under the product
    bool ok = true;
    std::uniform_int_distribution<int> npick(1, 4), mpick(1, 2);
    for (int i = 0; i < 200 && ok; ++i) {
      const int n = npick(rng), m = mpick(rng);
      std::vector<int> top(n);
      std::uniform_int_distribution<int> colour(0, m - 1);
      for (int& c : top) c = colour(rng);
      const ColouredDiagram a = random_bubble(rng, n, m, top);
      const ColouredDiagram b = random_bubble(rng, n, m, a.bottom_word());
      const ScaledDiagram p = multiply(a, b);
      if (!p.is_zero() && !is_bubble(*p.diagram)) ok = false;
    }
    rep.line("bubble diagrams closed under product", ok);
  }

  {  // cellular dimension identity
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n)
      for (int m = 1; m <= 2 && ok; ++m) {
        long long formula = 0;
        for (const auto& w : enumerate_lambda(n, m)) {
          const long long d = dim_delta(w);
          formula += d * d;
        }
        long long count = 0;
        for_each_bubble_diagram(n, m, [&](const ColouredDiagram&) { ++count; });
        ok = formula == count;
      }
    rep.line("sum of squared cell dimensions counts the basis", ok);
  }

  {  // factorized Gram agrees with the direct matrix, det with the formula
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n) {
      for (const auto& w : enumerate_lambda(n, 2)) {
        const auto report = gram_factorized(w);
        if (!(assemble_factorized(w, report) == gram_direct(w))) ok = false;
        if (!(determinant(gram_direct(w)) == report.det)) ok = false;
      }
    }
    rep.line("gram factorization matches direct computation", ok);
  }

  {  // specialized rank equals the head dimension formula
    bool ok = true;
    const auto spec = ParameterSpec::parse({"root:2", "root:4"});
    for (int n = 1; n <= 4 && ok; ++n)
      for (const auto& w : enumerate_lambda(n, 2))
        if (compute_rank(w, spec) != dim_head(w, spec)) ok = false;
    rep.line("gram rank matches head dimension at (root:2, root:4)", ok);
  }

  {  // generic point: full rank
    bool ok = true;
    const auto spec = ParameterSpec::parse({"3", "3"});
    for (int n = 1; n <= 4 && ok; ++n)
      for (const auto& w : enumerate_lambda(n, 2))
        if (compute_rank(w, spec) != dim_delta(w)) ok = false;
    rep.line("generic parameters give full rank", ok);
  }

  {  // TL radical dimensions against exact rank deficiency
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n)
      for (int p = 0; 2 * p <= n && ok; ++p)
        for (long l = 2; l <= 4; ++l) {
          const auto spec = ParameterSpec::parse({"root:" + std::to_string(l)});
          const Evaluator eval(spec);
          const Matrix<Laurent> g = gram_tl(n, p);
          Matrix<Algebraic> ge(g.rows(), g.cols(),
                               Algebraic::from_rational(eval.field(), Rat(0)));
          for (long i = 0; i < g.rows(); ++i)
            for (long j = 0; j < g.cols(); ++j) ge.at(i, j) = eval(g.at(i, j));
          if (rank(ge) != dim_head_tl(n, p, l)) ok = false;
        }
    rep.line("TL gram rank matches head dimensions", ok);
  }

  {  // radical layers partition the cell dimension
    bool ok = true;
    const auto spec = ParameterSpec::parse({"root:2", "root:4"});
    for (int n = 1; n <= 5 && ok; ++n)
      for (const auto& w : enumerate_lambda(n, 2)) {
        long long sum = 0;
        for (const auto& layer : radical_series(w, spec))
          for (const auto& lw : layer) sum += dim_head(lw, spec);
        if (sum != dim_delta(w)) ok = false;
      }
    rep.line("radical layer dimensions sum to the cell dimension", ok);
  }

  {  // even/odd splitting for two colours
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
      const auto basis = bubble_basis(n, 2);
      for (std::size_t i = 0; i < basis.size() && ok; i += 7)
        for (std::size_t j = 0; j < basis.size() && ok; j += 5) {
          const ScaledDiagram p = multiply(basis[i], basis[j]);
          if (p.is_zero()) continue;
          if (parity_split(basis[i]) != parity_split(basis[j])) ok = false;
        }
    }
    rep.line("even and odd halves do not mix", ok);
  }

  return rep.all_ok;
}

}  // namespace bubble
