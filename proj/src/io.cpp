#include "bubble/io.hpp"

#include <json.hpp>
#include <sstream>

namespace bubble {

using Json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "dot") return Format::Dot;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

namespace {

Json weight_json(const WeightLambda& w) {
  Json a = Json::array();
  for (long x : w.lambda) a.push_back(x);
  return a;
}

Json params_json(const ParameterSpec& p) {
  Json a = Json::array();
  for (int j = 0; j < p.m(); ++j) a.push_back(p.token(j));
  return a;
}

template <class EntryStr>
std::string matrix_text(long rows, long cols, EntryStr entry) {
  // column-aligned text table
  std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols));
  std::vector<std::size_t> width(cols, 0);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      cells[i][j] = entry(i, j);
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::ostringstream os;
  for (long i = 0; i < rows; ++i) {
    os << "[ ";
    for (long j = 0; j < cols; ++j) {
      os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
      os << (j + 1 < cols ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

template <class EntryStr>
std::string matrix_csv(long rows, long cols, EntryStr entry) {
  std::ostringstream os;
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      if (j) os << ",";
      os << entry(i, j);
    }
    os << "\n";
  }
  return os.str();
}

Json int_matrix_json(const std::vector<std::vector<int>>& a) {
  Json rows = Json::array();
  for (const auto& r : a) {
    Json row = Json::array();
    for (int x : r) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string render_basis(int n, int m,
                         const std::optional<WeightLambda>& lambda, Format f) {
  std::vector<std::string> items;
  std::string kind;
  if (lambda) {
    kind = "delta-basis";
    for (const auto& st : enumerate_delta_basis(*lambda)) items.push_back(st.str());
  } else {
    kind = "bubble-basis";
    for (const auto& d : bubble_basis(n, m)) items.push_back(d.str());
  }
  if (f == Format::Json) {
    Json out;
    out["n"] = n;
    out["m"] = m;
    if (lambda) out["lambda"] = weight_json(*lambda);
    out["kind"] = kind;
    out["count"] = items.size();
    out["elements"] = items;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << kind << " n=" << n << " m=" << m;
  if (lambda) os << " lambda=" << lambda->str();
  os << " count=" << items.size() << "\n";
  for (const auto& s : items) os << s << "\n";
  return os.str();
}

std::string render_multiply(const std::string& diagram_a,
                            const std::string& diagram_b, Format f) {
  const ColouredDiagram a = ColouredDiagram::parse(diagram_a);
  const ColouredDiagram b = ColouredDiagram::parse(diagram_b);
  const ScaledDiagram p = multiply(a, b);
  if (f == Format::Json) {
    Json out;
    out["zero"] = p.is_zero();
    if (!p.is_zero()) {
      out["coeff"] = p.coeff.str();
      out["diagram"] = p.diagram->str();
    }
    return out.dump(2) + "\n";
  }
  if (p.is_zero()) return "0\n";
  return "(" + p.coeff.str() + ") " + p.diagram->str() + "\n";
}

std::string render_gram(const WeightLambda& lw,
                        const std::optional<ParameterSpec>& params,
                        bool factorized, Format f) {
  if (params && params->m() != lw.m)
    throw std::invalid_argument("gram: parameter arity mismatch");
  const bool specialized = params && params->all_specialized();

  if (factorized) {
    const GramBlockReport report = gram_factorized(lw);
    if (f == Format::Json) {
      Json out;
      out["lambda"] = weight_json(lw);
      out["dimension"] = report.dimension();
      Json blocks = Json::array();
      for (const auto& b : report.blocks) {
        Json jb;
        Json u = Json::array();
        for (long x : b.u) u.push_back(x);
        jb["u"] = std::move(u);
        jb["multiplicity"] = b.multiplicity;
        Json factors = Json::array();
        for (std::size_t j = 0; j < b.factors.size(); ++j) {
          Json jf;
          jf["dim"] = b.factor_dims[j];
          Json rows = Json::array();
          for (long r = 0; r < b.factors[j].rows(); ++r) {
            Json row = Json::array();
            for (long c = 0; c < b.factors[j].cols(); ++c)
              row.push_back(b.factors[j].at(r, c).str());
            rows.push_back(std::move(row));
          }
          jf["entries"] = std::move(rows);
          factors.push_back(std::move(jf));
        }
        jb["factors"] = std::move(factors);
        blocks.push_back(std::move(jb));
      }
      out["blocks"] = std::move(blocks);
      out["det"] = report.det.str();
      return out.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "gram factorized lambda=" << lw.str() << " dim=" << report.dimension()
       << "\n";
    for (const auto& b : report.blocks) {
      os << "u=(";
      for (std::size_t j = 0; j < b.u.size(); ++j)
        os << (j ? "," : "") << b.u[j];
      os << ") multiplicity=" << b.multiplicity << " factor dims=(";
      for (std::size_t j = 0; j < b.factor_dims.size(); ++j)
        os << (j ? "," : "") << b.factor_dims[j];
      os << ")\n";
      for (std::size_t j = 0; j < b.factors.size(); ++j) {
        os << "factor " << j << ":\n";
        os << matrix_text(b.factors[j].rows(), b.factors[j].cols(),
                          [&](long r, long c) { return b.factors[j].at(r, c).str(); });
      }
    }
    os << "det = " << report.det.str() << "\n";
    return os.str();
  }

  const Matrix<Laurent> g = gram_direct(lw);
  const auto basis = enumerate_delta_basis(lw);
  std::vector<std::string> labels;
  labels.reserve(basis.size());
  for (const auto& st : basis) labels.push_back(st.str());

  if (specialized) {
    const Evaluator eval(*params);
    Matrix<Algebraic> ge(g.rows(), g.cols(),
                         Algebraic::from_rational(eval.field(), Rat(0)));
    for (long i = 0; i < g.rows(); ++i)
      for (long j = 0; j < g.cols(); ++j) ge.at(i, j) = eval(g.at(i, j));
    auto entry = [&](long i, long j) { return ge.at(i, j).str(); };
    if (f == Format::Json) {
      Json out;
      out["lambda"] = weight_json(lw);
      out["delta"] = params_json(*params);
      out["minpoly"] = eval.field()->minpoly_str();
      out["rows"] = labels;
      out["cols"] = labels;
      Json rows = Json::array();
      for (long i = 0; i < ge.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < ge.cols(); ++j) row.push_back(entry(i, j));
        rows.push_back(std::move(row));
      }
      out["entries"] = std::move(rows);
      return out.dump(2) + "\n";
    }
    if (f == Format::Csv) return matrix_csv(ge.rows(), ge.cols(), entry);
    return matrix_text(ge.rows(), ge.cols(), entry);
  }

  auto entry = [&](long i, long j) { return g.at(i, j).str(); };
  if (f == Format::Json) {
    Json out;
    out["lambda"] = weight_json(lw);
    out["rows"] = labels;
    out["cols"] = labels;
    Json rows = Json::array();
    for (long i = 0; i < g.rows(); ++i) {
      Json row = Json::array();
      for (long j = 0; j < g.cols(); ++j) row.push_back(entry(i, j));
      rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out.dump(2) + "\n";
  }
  if (f == Format::Csv) return matrix_csv(g.rows(), g.cols(), entry);
  return matrix_text(g.rows(), g.cols(), entry);
}

std::string render_det(const WeightLambda& lw,
                       const std::optional<ParameterSpec>& params, Format f) {
  const Laurent det = gram_det(lw);
  std::string value;
  std::string minpoly;
  if (params && params->all_specialized()) {
    const Evaluator eval(*params);
    value = eval(det).str();
    minpoly = eval.field()->minpoly_str();
  } else {
    value = det.str();
  }
  if (f == Format::Json) {
    Json out;
    out["lambda"] = weight_json(lw);
    if (params) out["delta"] = params_json(*params);
    if (!minpoly.empty()) out["minpoly"] = minpoly;
    out["det"] = value;
    return out.dump(2) + "\n";
  }
  return value + "\n";
}

long compute_rank(const WeightLambda& lw, const ParameterSpec& params) {
  if (!params.all_specialized())
    throw std::invalid_argument("rank: specialize parameters first");
  const Evaluator eval(params);
  const Matrix<Laurent> g = gram_direct(lw);
  Matrix<Algebraic> ge(g.rows(), g.cols(),
                       Algebraic::from_rational(eval.field(), Rat(0)));
  for (long i = 0; i < g.rows(); ++i)
    for (long j = 0; j < g.cols(); ++j) ge.at(i, j) = eval(g.at(i, j));
  return rank(ge);
}

std::string render_dims(int n, int m, const ParameterSpec& params, Format f) {
  if (params.m() != m)
    throw std::invalid_argument("dims: parameter arity mismatch");
  const auto weights = enumerate_lambda(n, m);
  if (f == Format::Json) {
    Json rows = Json::array();
    for (const auto& w : weights) {
      Json r;
      r["lambda"] = weight_json(w);
      r["dim"] = dim_delta(w);
      r["head"] = dim_head(w, params);
      r["radical"] = dim_radical(w, params);
      rows.push_back(std::move(r));
    }
    Json out;
    out["n"] = n;
    out["m"] = m;
    out["delta"] = params_json(params);
    out["cells"] = std::move(rows);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (f == Format::Csv) {
    os << "lambda,dim,head,radical\n";
    for (const auto& w : weights)
      os << "\"" << w.str() << "\"," << dim_delta(w) << ","
         << dim_head(w, params) << "," << dim_radical(w, params) << "\n";
    return os.str();
  }
  os << "lambda  dim  head  radical\n";
  for (const auto& w : weights)
    os << w.str() << "  " << dim_delta(w) << "  " << dim_head(w, params)
       << "  " << dim_radical(w, params) << "\n";
  return os.str();
}

std::string render_radical_series(const WeightLambda& lw,
                                  const ParameterSpec& params, Format f) {
  const auto layers = radical_series(lw, params);
  if (f == Format::Json) {
    Json out;
    out["lambda"] = weight_json(lw);
    out["delta"] = params_json(params);
    Json jl = Json::array();
    Json jd = Json::array();
    for (const auto& layer : layers) {
      Json one = Json::array();
      Json dims = Json::array();
      for (const auto& w : layer) {
        one.push_back(weight_json(w));
        dims.push_back(dim_head(w, params));
      }
      jl.push_back(std::move(one));
      jd.push_back(std::move(dims));
    }
    out["layers"] = std::move(jl);
    out["layer_head_dims"] = std::move(jd);
    out["loewy_length"] = layers.size();
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "radical series of Delta" << lw.n << lw.str() << "\n";
  for (std::size_t k = 0; k < layers.size(); ++k) {
    os << "layer " << k << ":";
    for (const auto& w : layers[k])
      os << " " << w.str() << "[head " << dim_head(w, params) << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string render_block_matrix(const char* what, int n, int m,
                                const ParameterSpec& params, WeightOrder order,
                                Format f, bool cartan) {
  const DecompositionMatrix d = decomposition_matrix(n, m, params, order);
  const auto entries = cartan ? cartan_matrix(d) : d.entries;
  const BlockPartition part = blocks(d);

  if (f == Format::Json) {
    Json out;
    out["n"] = n;
    out["m"] = m;
    out["delta"] = params_json(params);
    Json ord = Json::array();
    for (const auto& w : d.weights) ord.push_back(weight_json(w));
    out["order"] = std::move(ord);
    Json jb = Json::array();
    for (const auto& cls : part.classes) {
      Json b;
      Json ws = Json::array();
      for (int i : cls) ws.push_back(weight_json(d.weights[i]));
      b["weights"] = std::move(ws);
      b["matrix"] = int_matrix_json(submatrix(entries, cls));
      jb.push_back(std::move(b));
    }
    out["blocks"] = std::move(jb);
    return out.dump(2) + "\n";
  }
  if (f == Format::Csv) {
    return matrix_csv(static_cast<long>(entries.size()),
                      static_cast<long>(entries.size()), [&](long i, long j) {
                        return std::to_string(entries[i][j]);
                      });
  }
  std::ostringstream os;
  os << what << " of T_{" << n << "," << m << "}(";
  for (int j = 0; j < m; ++j) os << (j ? ", " : "") << params.token(j);
  os << ")\n";
  for (const auto& cls : part.classes) {
    os << "block {";
    for (std::size_t i = 0; i < cls.size(); ++i)
      os << (i ? ", " : "") << d.weights[cls[i]].str();
    os << "}\n";
    const auto sub = submatrix(entries, cls);
    os << matrix_text(static_cast<long>(sub.size()),
                      static_cast<long>(sub.size()), [&](long i, long j) {
                        return std::to_string(sub[i][j]);
                      });
  }
  return os.str();
}

}  // namespace

std::string render_decomp(int n, int m, const ParameterSpec& params,
                          WeightOrder order, Format f) {
  return render_block_matrix("decomposition matrix", n, m, params, order, f,
                             false);
}

std::string render_cartan(int n, int m, const ParameterSpec& params,
                          WeightOrder order, Format f) {
  return render_block_matrix("Cartan matrix", n, m, params, order, f, true);
}

std::string render_blocks(int n, int m, const ParameterSpec& params,
                          WeightOrder order, Format f) {
  const DecompositionMatrix d = decomposition_matrix(n, m, params, order);
  if (f == Format::Dot) return blocks_dot(d, params);
  const BlockPartition part = blocks(d);
  if (f == Format::Json) {
    Json out;
    out["n"] = n;
    out["m"] = m;
    out["delta"] = params_json(params);
    Json jc = Json::array();
    for (const auto& cls : part.classes) {
      Json one = Json::array();
      for (int i : cls) one.push_back(weight_json(d.weights[i]));
      jc.push_back(std::move(one));
    }
    out["classes"] = std::move(jc);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& cls : part.classes) {
    os << "{";
    for (std::size_t i = 0; i < cls.size(); ++i)
      os << (i ? ", " : "") << d.weights[cls[i]].str();
    os << "}\n";
  }
  return os.str();
}

}  // namespace bubble
