// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pickcf/errors.hpp"
#include "pickcf/json_io.hpp"
#include "pickcf/julia.hpp"
#include "pickcf/solver.hpp"

using namespace pickcf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) fail(Errc::BadInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::BadInput, std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ProblemFlags {
  std::string path;
  bool relaxed = false;
  std::string laurent;
};

ProblemData load_problem(const ProblemFlags& fl) {
  ProblemData p = problem_from_json(parse_json(slurp(fl.path)));
  if (fl.relaxed) p.relaxed = true;
  if (!fl.laurent.empty()) p.a_minus1 = rat_from_string(fl.laurent);
  return p;
}

Verdict run_verdict(const ProblemData& p) {
  if (p.a_minus1) return solve_laurent(p).first;
  return p.relaxed ? solve_relaxed(p) : solve_cf(p);
}

int cmd_check(const ProblemFlags& fl) {
  const ProblemData p = load_problem(fl);
  const Verdict v = run_verdict(p);
  Json out;
  out["problem"] = problem_to_json(p);
  out["verdict"] = verdict_to_json(v);
  emit(out);
  return v.solvable() ? kExitOk : kExitNoSolution;
}

int cmd_solve(const ProblemFlags& fl) {
  const ProblemData p = load_problem(fl);
  Verdict v;
  std::optional<RationalFunction> f;
  if (p.a_minus1) {
    auto [verdict, fun] = solve_laurent(p);
    v = verdict;
    f = fun;
  } else {
    v = p.relaxed ? solve_relaxed(p) : solve_cf(p);
    if (v.solvable()) f = construct_solution(p);
  }
  Json out;
  out["problem"] = problem_to_json(p);
  out["verdict"] = verdict_to_json(v);
  if (!v.solvable() || !f) {
    emit(out);
    return kExitNoSolution;
  }
  out["solution"] = function_to_json(*f);
  out["degree"] = degree(*f);
  out["pick"] = pick_certificate_to_json(is_pick(*f));
  out["verification"] = verification_to_json(verify_solution(*f, p), p);
  emit(out);
  return kExitOk;
}

int cmd_reduce(const std::string& path, const std::string& node) {
  const RationalFunction f = function_from_json(parse_json(slurp(path)));
  emit(function_to_json(reduce_rational(f, rat_from_string(node))));
  return kExitOk;
}

int cmd_augment(const std::string& path, const std::string& node, const std::string& a0,
                const std::string& a1) {
  const RationalFunction g = function_from_json(parse_json(slurp(path)));
  emit(function_to_json(
      augment_rational(g, rat_from_string(node), rat_from_string(a0), rat_from_string(a1))));
  return kExitOk;
}

struct AnalyzeFlags {
  std::string target;
  int nu = 0;
  double node = 0.0;
  int order = 3;
  double aperture = 0.0;  // 0 = radial mode
  int divergence = -1;
  double tol = 1e-6;
  int grid_depth = 20;
  bool serial = false;
  std::string csv;
};

void write_csv(const std::string& path, const std::vector<double>& y,
               const std::vector<std::vector<Cplx>>& samples) {
  std::ofstream out(path);
  if (!out) fail(Errc::BadInput, "cannot open CSV output '" + path + "'");
  out << "k,y,re,im\n";
  out.precision(17);
  for (size_t k = 0; k < samples.size(); ++k)
    for (size_t j = 0; j < samples[k].size(); ++j)
      out << k << "," << y[j] << "," << samples[k][j].real() << "," << samples[k][j].imag()
          << "\n";
}

int cmd_analyze(const AnalyzeFlags& fl) {
  AnalyzerConfig cfg;
  cfg.conv_tol = fl.tol;
  cfg.grid_depth = fl.grid_depth;
  cfg.parallel = !fl.serial;
  FunctionHandle handle;
  if (fl.target.rfind("ex_2_", 0) == 0) {
    handle = example_bank(fl.target, fl.nu, cfg);
  } else {
    handle = make_rational_handle(function_from_json(parse_json(slurp(fl.target))));
    handle.label = fl.target;
  }
  Json out;
  out["label"] = handle.label;
  out["node"] = fl.node;
  if (fl.divergence >= 0) {
    out["mode"] = "divergence";
    out["k"] = fl.divergence;
    const DivergenceReport rep = detect_divergence(handle, fl.node, fl.divergence, cfg);
    out["report"] = divergence_to_json(rep);
    if (!fl.csv.empty())
      write_csv(fl.csv, rep.grid_y, std::vector<std::vector<Cplx>>{rep.samples});
    emit(out);
    return kExitOk;
  }
  out["order"] = fl.order;
  ExpansionEstimate est;
  if (fl.aperture > 0.0) {
    out["mode"] = "nontangential";
    out["aperture"] = fl.aperture;
    est = nontangential_coefficients(handle, fl.node, fl.order, fl.aperture, cfg);
  } else {
    out["mode"] = "radial";
    est = radial_coefficients(handle, fl.node, fl.order, cfg);
  }
  out["report"] = expansion_to_json(est);
  if (!fl.csv.empty()) write_csv(fl.csv, est.grid_y, est.samples);
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact solver and numerical analyzer for the boundary Caratheodory-Fejer\n"
      "interpolation problem in the Pick class"};
  app.require_subcommand(1);

  ProblemFlags check_fl, solve_fl;
  auto* check = app.add_subcommand("check", "Decide solvability of a problem file");
  check->add_option("problem", check_fl.path, "problem JSON file, or - for stdin")->required();
  check->add_flag("--relaxed", check_fl.relaxed, "relax the top condition to f_n <= a^n");
  check->add_option("--laurent", check_fl.laurent, "prescribe the (-1)th Laurent coefficient");

  auto* solve = app.add_subcommand("solve", "Construct and verify an explicit solution");
  solve->add_option("problem", solve_fl.path, "problem JSON file, or - for stdin")->required();
  solve->add_flag("--relaxed", solve_fl.relaxed, "relax the top condition to f_n <= a^n");
  solve->add_option("--laurent", solve_fl.laurent, "prescribe the (-1)th Laurent coefficient");

  std::string fn_path, node = "0", a0, a1;
  auto* reduce = app.add_subcommand("reduce", "Julia reduction of a rational function at a node");
  reduce->add_option("function", fn_path, "function JSON file, or - for stdin")->required();
  reduce->add_option("--node", node, "interpolation node x (rational)")->capture_default_str();

  auto* augment =
      app.add_subcommand("augment", "Julia augmentation of a rational function at a node");
  augment->add_option("function", fn_path, "function JSON file, or - for stdin")->required();
  augment->add_option("--node", node, "interpolation node x (rational)")->capture_default_str();
  augment->add_option("--a0", a0, "target value at the node (rational)")->required();
  augment->add_option("--a1", a1, "target derivative at the node (rational, > 0)")->required();

  AnalyzeFlags an;
  auto* analyze = app.add_subcommand(
      "analyze", "Estimate pseudo-Taylor coefficients of a bank or rational handle");
  analyze->add_option("target", an.target, "bank id (ex_2_1, ex_2_2, ex_2_3) or function JSON")
      ->required();
  analyze->add_option("--nu", an.nu, "parameter for ex_2_2 (>= 4)");
  analyze->add_option("--node", an.node, "expansion point on the real axis")
      ->capture_default_str();
  analyze->add_option("--order", an.order, "highest coefficient index")->capture_default_str();
  analyze->add_option("--aperture", an.aperture,
                      "Stolz aperture K >= 1; selects nontangential mode");
  analyze->add_option("--divergence", an.divergence,
                      "test order k for divergence instead of estimating");
  analyze->add_option("--tol", an.tol, "convergence tolerance")->capture_default_str();
  analyze->add_option("--grid-depth", an.grid_depth, "radial grid levels y0 2^-j")
      ->capture_default_str();
  analyze->add_flag("--serial", an.serial, "disable the OpenMP grid kernels");
  analyze->add_option("--csv", an.csv, "dump (k, y, f^(k)) samples to a CSV file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_fl);
    if (solve->parsed()) return cmd_solve(solve_fl);
    if (reduce->parsed()) return cmd_reduce(fn_path, node);
    if (augment->parsed()) return cmd_augment(fn_path, node, a0, a1);
    if (analyze->parsed()) return cmd_analyze(an);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::Unsolvable ? kExitNoSolution : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
