// Command-line front end: classify / solve / verify / growth.
//
// Exit codes: 0 success (verification true, branches found, output written)
//             1 verification ran and the function does not solve the equation
//             2 malformed input (expressions, flags, files, degenerate data)
//             3 the classification rules out every solution of the shape
//             4 solve succeeded but the given a1 differs from the required one
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpde/nevanlinna.hpp"
#include "fpde/parse.hpp"
#include "fpde/solver.hpp"
#include "fpde/verifier.hpp"

namespace {

using fpde::Cx;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitExcluded = 3;
constexpr int kExitMismatch = 4;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void input_error(std::string msg) {
  throw CliError{kExitInput, std::move(msg)};
}

Cx parse_cx_or_fail(const std::string& src, const std::string& what) {
  auto r = fpde::parse_complex(src);
  if (auto* diag = std::get_if<fpde::ParseDiagnostic>(&r))
    input_error(what + ": parse error at offset " +
                std::to_string(diag->position) + " (" +
                fpde::to_string(diag->kind) + "): " + diag->message);
  return std::get<Cx>(r);
}

fpde::ExpPoly parse_expr_or_fail(const std::string& src,
                                 const std::string& what) {
  auto r = fpde::parse_expr(src);
  if (auto* diag = std::get_if<fpde::ParseDiagnostic>(&r))
    input_error(what + ": parse error at offset " +
                std::to_string(diag->position) + " (" +
                fpde::to_string(diag->kind) + "): " + diag->message);
  return std::get<fpde::ExpPoly>(r);
}

fpde::Poly2 parse_poly_or_fail(const std::string& src,
                               const std::string& what) {
  fpde::ExpPoly e = parse_expr_or_fail(src, what);
  auto p = e.as_polynomial();
  if (!p) input_error(what + ": expected a polynomial expression in z1, z2");
  return *p;
}

// Inline problem flags; empty string means "not given".
struct ProblemFlags {
  std::string file;
  int n = 0;
  bool n_set = false;
  std::string a1, a2, p1, p2;
  std::string lambda1, gamma1, lambda2, gamma2;
  std::string r, s;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& f) {
  cmd->add_option("--problem", f.file,
                  "JSON problem file (alternative to the inline flags)");
  cmd->add_option("--n", f.n, "power n of the equation")
      ->each([&f](const std::string&) { f.n_set = true; });
  cmd->add_option("--a1", f.a1, "coefficient of (df/dz1)^n");
  cmd->add_option("--a2", f.a2, "coefficient of f^n");
  cmd->add_option("--p1", f.p1, "coefficient of e^{r}");
  cmd->add_option("--p2", f.p2, "coefficient of e^{s}");
  cmd->add_option("--lambda1", f.lambda1, "z1 frequency of the first RHS term");
  cmd->add_option("--gamma1", f.gamma1, "z2 frequency of the first RHS term");
  cmd->add_option("--lambda2", f.lambda2, "z1 frequency of the second RHS term");
  cmd->add_option("--gamma2", f.gamma2, "z2 frequency of the second RHS term");
  cmd->add_option("--r", f.r, "exponent polynomial of the first RHS term");
  cmd->add_option("--s", f.s, "exponent polynomial of the second RHS term");
}

Cx json_cx(const nlohmann::json& v, const std::string& what) {
  if (v.is_number()) return Cx(v.get<double>(), 0.0);
  if (v.is_string()) return parse_cx_or_fail(v.get<std::string>(), what);
  input_error(what + ": expected a number or a complex string like \"1+2i\"");
}

fpde::PdeProblem problem_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open problem file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    input_error("problem file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) input_error("problem file must hold a JSON object");
  for (const char* key : {"n", "a1", "a2", "p1", "p2"}) {
    if (!j.contains(key))
      input_error(std::string("problem file is missing \"") + key + "\"");
  }
  if (!j["n"].is_number_integer())
    input_error("problem file: \"n\" must be an integer");
  int n = j["n"].get<int>();
  Cx a1 = json_cx(j["a1"], "a1"), a2 = json_cx(j["a2"], "a2");
  Cx p1 = json_cx(j["p1"], "p1"), p2 = json_cx(j["p2"], "p2");

  bool has_linear = j.contains("lambda1") || j.contains("gamma1") ||
                    j.contains("lambda2") || j.contains("gamma2");
  bool has_general = j.contains("r") || j.contains("s");
  if (has_linear == has_general)
    input_error(
        "problem file needs exactly one exponent group: either lambda1, "
        "gamma1, lambda2, gamma2 or r, s");
  try {
    if (has_linear) {
      for (const char* key : {"lambda1", "gamma1", "lambda2", "gamma2"}) {
        if (!j.contains(key))
          input_error(std::string("problem file is missing \"") + key + "\"");
      }
      fpde::LinearRhs lin{json_cx(j["lambda1"], "lambda1"),
                          json_cx(j["gamma1"], "gamma1"),
                          json_cx(j["lambda2"], "lambda2"),
                          json_cx(j["gamma2"], "gamma2")};
      return fpde::PdeProblem::linear(n, a1, a2, p1, p2, lin);
    }
    for (const char* key : {"r", "s"}) {
      if (!j.contains(key))
        input_error(std::string("problem file is missing \"") + key + "\"");
    }
    if (!j["r"].is_string() || !j["s"].is_string())
      input_error("problem file: \"r\" and \"s\" must be expression strings");
    fpde::GeneralRhs gen{parse_poly_or_fail(j["r"].get<std::string>(), "r"),
                         parse_poly_or_fail(j["s"].get<std::string>(), "s")};
    return fpde::PdeProblem::general(n, a1, a2, p1, p2, gen);
  } catch (const std::invalid_argument& e) {
    input_error(std::string("invalid problem: ") + e.what());
  }
}

fpde::PdeProblem build_problem(const ProblemFlags& f) {
  bool inline_given = f.n_set || !f.a1.empty() || !f.a2.empty() ||
                      !f.p1.empty() || !f.p2.empty() || !f.lambda1.empty() ||
                      !f.r.empty() || !f.s.empty();
  if (!f.file.empty()) {
    if (inline_given)
      input_error("--problem and inline problem flags are mutually exclusive");
    return problem_from_json(f.file);
  }
  if (!f.n_set) input_error("missing --n (or use --problem <file>)");
  for (const auto& [v, name] :
       {std::pair<const std::string&, const char*>{f.a1, "--a1"},
        {f.a2, "--a2"},
        {f.p1, "--p1"},
        {f.p2, "--p2"}}) {
    if (v.empty()) input_error(std::string("missing ") + name);
  }
  bool linear = !f.lambda1.empty() || !f.gamma1.empty() ||
                !f.lambda2.empty() || !f.gamma2.empty();
  bool general = !f.r.empty() || !f.s.empty();
  if (linear == general)
    input_error(
        "give exactly one exponent group: either --lambda1 --gamma1 "
        "--lambda2 --gamma2 or --r --s");
  Cx a1 = parse_cx_or_fail(f.a1, "--a1"), a2 = parse_cx_or_fail(f.a2, "--a2");
  Cx p1 = parse_cx_or_fail(f.p1, "--p1"), p2 = parse_cx_or_fail(f.p2, "--p2");
  try {
    if (linear) {
      for (const auto& [v, name] :
           {std::pair<const std::string&, const char*>{f.lambda1, "--lambda1"},
            {f.gamma1, "--gamma1"},
            {f.lambda2, "--lambda2"},
            {f.gamma2, "--gamma2"}}) {
        if (v.empty()) input_error(std::string("missing ") + name);
      }
      fpde::LinearRhs lin{parse_cx_or_fail(f.lambda1, "--lambda1"),
                          parse_cx_or_fail(f.gamma1, "--gamma1"),
                          parse_cx_or_fail(f.lambda2, "--lambda2"),
                          parse_cx_or_fail(f.gamma2, "--gamma2")};
      return fpde::PdeProblem::linear(f.n, a1, a2, p1, p2, lin);
    }
    if (f.r.empty() || f.s.empty()) input_error("both --r and --s are needed");
    fpde::GeneralRhs gen{parse_poly_or_fail(f.r, "--r"),
                         parse_poly_or_fail(f.s, "--s")};
    return fpde::PdeProblem::general(f.n, a1, a2, p1, p2, gen);
  } catch (const std::invalid_argument& e) {
    input_error(std::string("invalid problem: ") + e.what());
  }
}

ordered_json branch_to_json(const fpde::SolutionBranch& b) {
  ordered_json j;
  j["f"] = fpde::format_expr(b.f);
  j["case"] = fpde::to_string(b.case_tag);
  j["branch_indices"] = b.branch_indices;
  j["required_a1"] = fpde::format_complex(b.required_a1);
  j["verified"] = b.verified;
  j["swapped"] = b.swapped;
  return j;
}

int cmd_classify(const std::string& lambda1, const std::string& lambda2,
                 double eps) {
  Cx l1 = parse_cx_or_fail(lambda1, "--lambda1");
  Cx l2 = parse_cx_or_fail(lambda2, "--lambda2");
  fpde::Classification cls;
  try {
    cls = fpde::classify(fpde::LinearRhs{l1, 0.0, l2, 0.0}, eps);
  } catch (const std::domain_error& e) {
    throw CliError{kExitInput, e.what()};
  }
  std::cout << fpde::to_string(cls.tag) << "\n";
  return cls.tag == fpde::CaseTag::NoCase ? kExitExcluded : kExitOk;
}

int cmd_solve(const ProblemFlags& flags) {
  fpde::PdeProblem problem = build_problem(flags);
  fpde::SolveResult res = fpde::solve(problem);
  switch (res.status) {
    case fpde::SolveStatus::ok:
    case fpde::SolveStatus::indeterminate_amplitude: {
      ordered_json arr = ordered_json::array();
      for (const auto& b : res.branches) arr.push_back(branch_to_json(b));
      std::cout << arr.dump(2) << "\n";
      if (!res.message.empty()) std::cerr << res.message << "\n";
      if (res.a1_mismatch) {
        std::cerr << "required a1 = "
                  << fpde::format_complex(res.branches.front().required_a1)
                  << "\n";
        return kExitMismatch;
      }
      return kExitOk;
    }
    case fpde::SolveStatus::theorem_excluded:
    case fpde::SolveStatus::inconsistent_coefficients:
      std::cerr << res.message << "\n";
      return kExitExcluded;
    case fpde::SolveStatus::not_covered:
      std::cerr << res.message << "\n";
      return kExitInput;
  }
  return kExitInput;
}

int cmd_verify(const std::string& function, const ProblemFlags& flags,
               int samples, std::uint64_t seed) {
  fpde::PdeProblem problem = build_problem(flags);
  fpde::ExpPoly f = parse_expr_or_fail(function, "--function");
  if (samples < 1) input_error("--samples must be >= 1");
  fpde::ResidualReport rep = fpde::verify(f, problem, samples, seed);
  ordered_json j;
  j["symbolic_zero"] = rep.symbolic_zero;
  j["residual"] = fpde::format_expr(rep.residual);
  j["max_relative_numeric_residual"] = rep.max_relative_numeric_residual;
  j["sample_count"] = rep.sample_count;
  j["seed"] = rep.seed;
  j["skipped_points"] = rep.skipped_points;
  j["unreliable"] = rep.unreliable;
  std::cout << j.dump(2) << "\n";
  return rep.symbolic_zero ? kExitOk : kExitVerifyFalse;
}

int cmd_growth(const std::string& function, double rmin, double rmax,
               int steps, int samples, std::uint64_t seed,
               const std::string& out_path) {
  fpde::ExpPoly f = parse_expr_or_fail(function, "--function");
  if (f.is_zero())
    input_error("the zero function has no growth curve (log+|0| everywhere)");
  if (!(rmin > 0.0)) input_error("--rmin must be positive");
  if (!(rmax > rmin)) input_error("--rmax must exceed --rmin");
  if (steps < 6) input_error("--steps must be >= 6");
  if (samples < 1) input_error("--samples must be >= 1");

  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = rmin * std::pow(rmax / rmin, static_cast<double>(i) / (steps - 1));

  fpde::GrowthCurve curve;
  try {
    curve = fpde::order_fit(f, grid, samples, seed);
  } catch (const std::invalid_argument& e) {
    input_error(e.what());
  }

  auto g17 = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  std::string csv = "r,m_estimate,stderr,log_r,log_m\n";
  for (const auto& p : curve.points) {
    csv += g17(p.r) + "," + g17(p.m_estimate) + "," + g17(p.std_error) + "," +
           g17(std::log(p.r)) + "," + g17(std::log(p.m_estimate)) + "\n";
  }
  csv += "# order_estimate = " + g17(curve.order_estimate) +
         ", ci_halfwidth = " + g17(curve.order_ci_halfwidth) + "\n";

  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) input_error("cannot open output file: " + out_path);
    out << csv;
    if (!out.flush()) input_error("failed writing output file: " + out_path);
  }
  return kExitOk;
}

// "--flag -3i" style values confuse flag parsing; fold them into
// "--flag=-3i" before CLI11 sees them.
std::vector<std::string> preprocess_args(int argc, char** argv) {
  const std::vector<std::string> value_flags = {
      "--lambda1", "--lambda2", "--gamma1", "--gamma2", "--a1",       "--a2",
      "--p1",      "--p2",      "--r",      "--s",      "--function", "-f"};
  std::vector<std::string> out;
  out.reserve(argc);
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    bool is_value_flag =
        std::find(value_flags.begin(), value_flags.end(), arg) !=
        value_flags.end();
    if (is_value_flag && i + 1 < argc && argv[i + 1][0] == '-' &&
        argv[i + 1][1] != '\0') {
      if (arg == "-f") arg = "--function";  // short flags cannot take '='
      out.push_back(arg + "=" + argv[i + 1]);
      ++i;
    } else {
      out.push_back(std::move(arg));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact and Monte Carlo laboratory for the equation "
      "a1*(df/dz1)^n + a2*f^n = p1*e^r + p2*e^s on C^2"};
  app.require_subcommand(1);

  auto* classify =
      app.add_subcommand("classify", "name the lambda relation of a linear RHS");
  std::string cl_l1, cl_l2;
  double cl_eps = fpde::kEpsCase;
  classify->add_option("--lambda1", cl_l1)->required();
  classify->add_option("--lambda2", cl_l2)->required();
  classify->add_option("--eps", cl_eps, "classification tolerance");

  auto* solve = app.add_subcommand(
      "solve", "construct and verify every solution branch of a problem");
  ProblemFlags solve_flags;
  add_problem_flags(solve, solve_flags);

  auto* verify = app.add_subcommand(
      "verify", "check whether a function solves a problem exactly");
  ProblemFlags verify_flags;
  std::string verify_fn;
  int verify_samples = 256;
  std::uint64_t verify_seed = 1;
  verify->add_option("-f,--function", verify_fn, "candidate solution")
      ->required();
  add_problem_flags(verify, verify_flags);
  verify->add_option("--samples", verify_samples, "numeric sample count");
  verify->add_option("--seed", verify_seed, "numeric sampling seed");

  auto* growth = app.add_subcommand(
      "growth", "Monte Carlo Nevanlinna growth curve over a geometric r grid");
  std::string growth_fn, growth_out;
  double growth_rmin = 1.0, growth_rmax = 100.0;
  int growth_steps = 12, growth_samples = 100000;
  std::uint64_t growth_seed = 1;
  growth->add_option("-f,--function", growth_fn, "entire function")->required();
  growth->add_option("--rmin", growth_rmin, "smallest radius")->required();
  growth->add_option("--rmax", growth_rmax, "largest radius")->required();
  growth->add_option("--steps", growth_steps, "grid size (default 12)");
  growth->add_option("--samples", growth_samples,
                     "sphere samples per radius (default 100000)");
  growth->add_option("--seed", growth_seed, "sampling seed");
  growth->add_option("--out", growth_out, "CSV output path (default stdout)");

  std::vector<std::string> args = preprocess_args(argc, argv);
  std::vector<char*> argv2;
  argv2.reserve(args.size());
  for (auto& a : args) argv2.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv2.size()), argv2.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(cl_l1, cl_l2, cl_eps);
    if (solve->parsed()) return cmd_solve(solve_flags);
    if (verify->parsed())
      return cmd_verify(verify_fn, verify_flags, verify_samples, verify_seed);
    if (growth->parsed())
      return cmd_growth(growth_fn, growth_rmin, growth_rmax, growth_steps,
                        growth_samples, growth_seed, growth_out);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
