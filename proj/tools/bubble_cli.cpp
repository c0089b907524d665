// bubble: command-line front end over the C API.
//
// Exit codes: 0 success, 2 invalid input, 1 internal failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "bubble/bubble.h"

namespace {

struct AlgebraDeleter {
  void operator()(bubble_algebra* a) const { bubble_algebra_free(a); }
};
using AlgebraPtr = std::unique_ptr<bubble_algebra, AlgebraDeleter>;

struct StringDeleter {
  void operator()(char* s) const { bubble_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(bubble_status st) {
  std::cerr << "error: " << bubble_last_error() << "\n";
  return st == BUBBLE_ERROR_INVALID ? 2 : 1;
}

AlgebraPtr make_algebra(int n, int m, const std::vector<std::string>& deltas,
                        bubble_status& st) {
  std::vector<const char*> tokens;
  tokens.reserve(deltas.size());
  for (const auto& d : deltas) tokens.push_back(d.c_str());
  bubble_algebra* raw = nullptr;
  st = bubble_algebra_new(n, m, tokens.empty() ? nullptr : tokens.data(),
                          static_cast<int>(tokens.size()), &raw);
  return AlgebraPtr(raw);
}

int emit(bubble_status st, char* s) {
  if (st != BUBBLE_OK) return fail(st);
  StringPtr owned(s);
  std::cout << owned.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in bubble algebras and their cell modules"};
  app.set_version_flag("--version", std::string(bubble_version()));
  app.require_subcommand(1);

  int n = 1, m = 1;
  std::vector<std::string> deltas;
  std::string lambda, format = "text", order;

  auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    cmd->add_option("-n", n, "number of boundary nodes per row")->required();
    cmd->add_option("-m", m, "number of colours")->required();
    cmd->add_option("--delta", deltas,
                    "per-colour parameter: <integer>, <p>/<q>, root:<l> or "
                    "generic; repeat m times in colour order");
    auto* l = cmd->add_option("--lambda", lambda,
                              "weight as comma-separated defect counts");
    if (needs_lambda) l->required();
    cmd->add_option("--format", format, "output format: text, json or csv");
  };

  auto* basis = app.add_subcommand("basis",
                                   "bubble-diagram basis, or the cell-module "
                                   "basis when --lambda is given");
  add_common(basis, false);

  auto* mult = app.add_subcommand(
      "multiply", "product of two diagrams (arguments or two stdin lines)");
  add_common(mult, false);
  std::vector<std::string> diagrams;
  mult->add_option("diagrams", diagrams, "two diagrams in text form")
      ->expected(0, 2);

  auto* gram = app.add_subcommand("gram", "Gram matrix of a cell module");
  add_common(gram, true);
  bool factorized = false;
  gram->add_flag("--factorized", factorized,
                 "emit the block factorization instead of the direct matrix");

  auto* det = app.add_subcommand("det", "Gram determinant (product formula)");
  add_common(det, true);

  auto* rank_cmd =
      app.add_subcommand("rank", "exact rank of the specialized Gram matrix");
  add_common(rank_cmd, true);

  auto* dims = app.add_subcommand(
      "dims", "cell/head/radical dimensions over the weight lattice");
  add_common(dims, false);

  auto* series =
      app.add_subcommand("radical-series", "Loewy layers of a cell module");
  add_common(series, true);

  auto* decomp = app.add_subcommand("decomp", "decomposition matrix by block");
  add_common(decomp, false);
  decomp->add_option("--order", order, "weight ordering (default or paper-6-2)");

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix by block");
  add_common(cartan, false);
  cartan->add_option("--order", order, "weight ordering (default or paper-6-2)");

  auto* blocks_cmd = app.add_subcommand("blocks", "linkage classes");
  add_common(blocks_cmd, false);
  blocks_cmd->add_option("--order", order, "weight ordering");
  bool dot = false;
  blocks_cmd->add_flag("--dot", dot, "emit a DOT graph");

  auto* check = app.add_subcommand("check", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    char* report = nullptr;
    int ok = 0;
    const bubble_status st = bubble_check(&report, &ok);
    if (st != BUBBLE_OK) return fail(st);
    StringPtr owned(report);
    std::cout << owned.get();
    return ok ? 0 : 1;
  }

  bubble_status st = BUBBLE_OK;
  AlgebraPtr alg = make_algebra(n, m, deltas, st);
  if (!alg) return fail(st);

  char* out = nullptr;
  if (basis->parsed()) {
    st = bubble_basis(alg.get(), lambda.empty() ? nullptr : lambda.c_str(),
                      format.c_str(), &out);
    return emit(st, out);
  }
  if (mult->parsed()) {
    std::string a, b;
    if (diagrams.size() == 2) {
      a = diagrams[0];
      b = diagrams[1];
    } else if (diagrams.empty()) {
      if (!std::getline(std::cin, a) || !std::getline(std::cin, b)) {
        std::cerr << "error: multiply needs two diagrams (arguments or stdin)\n";
        return 2;
      }
    } else {
      std::cerr << "error: multiply needs exactly two diagrams\n";
      return 2;
    }
    st = bubble_multiply(alg.get(), a.c_str(), b.c_str(), format.c_str(), &out);
    return emit(st, out);
  }
  if (gram->parsed()) {
    st = bubble_gram(alg.get(), lambda.c_str(), factorized ? 1 : 0,
                     format.c_str(), &out);
    return emit(st, out);
  }
  if (det->parsed()) {
    st = bubble_det(alg.get(), lambda.c_str(), format.c_str(), &out);
    return emit(st, out);
  }
  if (rank_cmd->parsed()) {
    long r = 0;
    st = bubble_rank(alg.get(), lambda.c_str(), &r);
    if (st != BUBBLE_OK) return fail(st);
    std::cout << r << "\n";
    return 0;
  }
  if (dims->parsed()) {
    st = bubble_dims(alg.get(), format.c_str(), &out);
    return emit(st, out);
  }
  if (series->parsed()) {
    st = bubble_radical_series(alg.get(), lambda.c_str(), format.c_str(), &out);
    return emit(st, out);
  }
  if (decomp->parsed()) {
    st = bubble_decomp(alg.get(), order.empty() ? nullptr : order.c_str(),
                       format.c_str(), &out);
    return emit(st, out);
  }
  if (cartan->parsed()) {
    st = bubble_cartan(alg.get(), order.empty() ? nullptr : order.c_str(),
                       format.c_str(), &out);
    return emit(st, out);
  }
  if (blocks_cmd->parsed()) {
    st = bubble_blocks(alg.get(), order.empty() ? nullptr : order.c_str(),
                       dot ? "dot" : format.c_str(), &out);
    return emit(st, out);
  }
  return 2;
}
