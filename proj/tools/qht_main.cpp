// qht: command-line front end for the state-discrimination toolkit.
//
// Subcommands: chernoff, hoeffding, simulate, verify, map, stein, dump,
// random-state. State files are JSON with [re, im] entry pairs; curve and
// rate outputs are CSV or JSON with "inf" for infinite values.
//
// Exit codes: 0 ok, 1 property failure, 2 file, 3 parse, 4 dimension, 5 cap.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qht/asymptotics.hpp"
#include "qht/chernoff.hpp"
#include "qht/hoeffding.hpp"
#include "qht/io.hpp"
#include "qht/mapping.hpp"
#include "qht/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitFile = 2;
constexpr int kExitParse = 3;
constexpr int kExitDimension = 4;
constexpr int kExitCap = 5;

json json_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw qht::FileNotFound("cannot write output file: " + out_path);
  out << text;
}

struct CommonArgs {
  std::string rho_path;
  std::string sigma_path;
  std::string format = "table";
  std::string out_path;
};

void add_pair_options(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--rho", args->rho_path, "state file for the null hypothesis")
      ->required();
  cmd->add_option("--sigma", args->sigma_path,
                  "state file for the alternative hypothesis")
      ->required();
  cmd->add_option("--format", args->format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--out", args->out_path, "write output to PATH instead of stdout");
}

std::string render_chernoff(const qht::ChernoffResult& res, const std::string& format) {
  using qht::format_double;
  std::ostringstream out;
  if (format == "json") {
    json doc;
    doc["q_star"] = json_number(res.q_star);
    doc["xi_qcb"] = json_number(res.xi_qcb);
    doc["s_star"] = json_number(res.s_star);
    json curve = json::array();
    for (const auto& pt : res.curve) curve.push_back({pt.s, pt.value});
    doc["curve"] = curve;
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "# q_star=" << format_double(res.q_star)
        << " xi_qcb=" << format_double(res.xi_qcb)
        << " s_star=" << format_double(res.s_star) << "\n";
    out << "s,q_s\n";
    for (const auto& pt : res.curve) {
      out << format_double(pt.s) << "," << format_double(pt.value) << "\n";
    }
  } else {
    out << "q_star = " << format_double(res.q_star) << "\n"
        << "xi_qcb = " << format_double(res.xi_qcb) << "\n"
        << "s_star = " << format_double(res.s_star) << "\n"
        << "curve (s, Q_s):\n";
    for (const auto& pt : res.curve) {
      out << "  " << format_double(pt.s) << "  " << format_double(pt.value)
          << "\n";
    }
  }
  return out.str();
}

int cmd_chernoff(const CommonArgs& args) {
  const qht::DensityMatrix rho = qht::load_state(args.rho_path);
  const qht::DensityMatrix sigma = qht::load_state(args.sigma_path);
  emit(render_chernoff(qht::chernoff_distance(rho, sigma), args.format),
       args.out_path);
  return kExitOk;
}

int cmd_hoeffding(const CommonArgs& args, double r_min, double r_max, int steps) {
  using qht::format_double;
  const qht::DensityMatrix rho = qht::load_state(args.rho_path);
  const qht::DensityMatrix sigma = qht::load_state(args.sigma_path);
  const qht::CriticalPoints cps = qht::critical_points(rho, sigma);
  const auto curve = qht::hoeffding_curve(rho, sigma, r_min, r_max, steps);

  std::ostringstream out;
  if (args.format == "json") {
    json doc;
    doc["psi0"] = json_number(cps.psi0);
    doc["psi1"] = json_number(cps.psi1);
    doc["s_sigma_rho"] = json_number(cps.s_sigma_rho);
    doc["s_rho_sigma"] = json_number(cps.s_rho_sigma);
    json pts = json::array();
    for (const auto& pt : curve) {
      json entry;
      entry["r"] = pt.r;
      entry["e_q"] = json_number(pt.value);
      if (pt.has_achiever) entry["s_achieving"] = pt.s_achieving;
      pts.push_back(entry);
    }
    doc["curve"] = pts;
    out << doc.dump(2) << "\n";
  } else {
    out << "# psi0=" << format_double(cps.psi0)
        << " psi1=" << format_double(cps.psi1)
        << " s_sigma_rho=" << format_double(cps.s_sigma_rho)
        << " s_rho_sigma=" << format_double(cps.s_rho_sigma) << "\n";
    out << "r,e_q,s_achieving\n";
    for (const auto& pt : curve) {
      out << format_double(pt.r) << "," << format_double(pt.value) << ","
          << (pt.has_achiever ? format_double(pt.s_achieving) : std::string("none"))
          << "\n";
    }
  }
  emit(out.str(), args.out_path);
  return kExitOk;
}

int cmd_simulate(const CommonArgs& args, double pi0, int n_max) {
  using qht::format_double;
  const qht::DensityMatrix rho = qht::load_state(args.rho_path);
  const qht::DensityMatrix sigma = qht::load_state(args.sigma_path);
  const qht::RateExperiment exp =
      qht::chernoff_rate_experiment(rho, sigma, qht::make_priors(pi0), n_max);

  std::ostringstream out;
  if (args.format == "json") {
    json doc;
    doc["xi_qcb"] = json_number(exp.chernoff.xi_qcb);
    doc["s_star"] = json_number(exp.chernoff.s_star);
    json rows = json::array();
    for (const auto& e : exp.entries) {
      json row;
      row["n"] = e.n;
      row["p_e_n"] = e.value;
      row["rate"] = e.rate_defined ? json_number(e.rate) : json("undefined");
      row["upper_bound"] = e.upper_bound;
      row["lower_bound"] = e.lower_bound;
      row["sandwich_ok"] = e.sandwich_ok;
      rows.push_back(row);
    }
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  } else {
    out << "# xi_qcb=" << format_double(exp.chernoff.xi_qcb)
        << " s_star=" << format_double(exp.chernoff.s_star) << "\n";
    out << "n,p_e_n,rate,upper_bound,lower_bound,sandwich_ok\n";
    for (const auto& e : exp.entries) {
      out << e.n << "," << format_double(e.value) << ","
          << (e.rate_defined ? format_double(e.rate) : std::string("undefined"))
          << "," << format_double(e.upper_bound) << ","
          << format_double(e.lower_bound) << "," << (e.sandwich_ok ? 1 : 0)
          << "\n";
    }
  }
  emit(out.str(), args.out_path);
  bool all_ok = true;
  for (const auto& e : exp.entries) all_ok = all_ok && e.sandwich_ok;
  return all_ok ? kExitOk : kExitPropertyFailure;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
               const std::vector<long>& dims_in, const std::string& format,
               const std::string& out_path) {
  std::vector<qht::Index> dims;
  for (long d : dims_in) dims.push_back(static_cast<qht::Index>(d));
  if (dims.empty()) dims = {2, 3};

  std::vector<qht::VerificationReport> reports;
  const bool all = suite == "all";
  if (all || suite == "trace_inequality") {
    reports.push_back(qht::check_trace_inequality(trials, seed, dims));
  }
  if (all || suite == "chain") {
    reports.push_back(qht::check_chain(trials, seed, dims));
  }
  if (all || suite == "appendix") {
    reports.push_back(qht::check_appendix(trials, seed, dims));
  }
  if (all || suite == "tensor_counterexample") {
    reports.push_back(qht::check_tensor_counterexample());
  }
  if (all || suite == "convexity_concavity") {
    reports.push_back(qht::check_convexity_concavity(trials, seed));
  }

  std::ostringstream out;
  bool ok = true;
  if (format == "json") {
    json doc = json::array();
    for (const auto& r : reports) {
      json entry;
      entry["property_name"] = r.property_name;
      entry["trials"] = r.trials;
      entry["worst_margin"] = json_number(r.worst_margin);
      entry["failures"] = r.failures;
      entry["seed"] = r.seed;
      doc.push_back(entry);
      ok = ok && r.passed();
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "[pass] " : "[FAIL] ") << r.to_string() << "\n";
      ok = ok && r.passed();
    }
  }
  emit(out.str(), out_path);
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_map(const CommonArgs& args) {
  using qht::format_double;
  const qht::DensityMatrix rho = qht::load_state(args.rho_path);
  const qht::DensityMatrix sigma = qht::load_state(args.sigma_path);
  const qht::ClassicalPair cp = qht::ns_map(rho, sigma);

  std::ostringstream out;
  if (args.format == "json") {
    json doc;
    doc["dim"] = cp.dim;
    doc["p"] = std::vector<double>(cp.p.data(), cp.p.data() + cp.p.size());
    doc["q"] = std::vector<double>(cp.q.data(), cp.q.data() + cp.q.size());
    out << doc.dump(2) << "\n";
  } else {
    out << "i,j,p,q\n";
    for (qht::Index i = 0; i < cp.dim; ++i) {
      for (qht::Index j = 0; j < cp.dim; ++j) {
        out << i << "," << j << "," << format_double(cp.p[i * cp.dim + j]) << ","
            << format_double(cp.q[i * cp.dim + j]) << "\n";
      }
    }
  }
  emit(out.str(), args.out_path);
  return kExitOk;
}

int cmd_stein(const CommonArgs& args) {
  const qht::DensityMatrix rho = qht::load_state(args.rho_path);
  const qht::DensityMatrix sigma = qht::load_state(args.sigma_path);
  emit(qht::format_double(qht::stein_rate(rho, sigma)) + "\n", args.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qht: optimal errors and error exponents for binary quantum "
               "state discrimination"};
  app.require_subcommand(1);

  CommonArgs chernoff_args;
  CLI::App* chernoff = app.add_subcommand(
      "chernoff", "quantum Chernoff distance and the Q_s curve");
  add_pair_options(chernoff, &chernoff_args);

  CommonArgs hoeffding_args;
  hoeffding_args.format = "csv";
  double r_min = 0.0, r_max = 1.0;
  int steps = 101;
  CLI::App* hoeffding = app.add_subcommand(
      "hoeffding", "error-exponent curve e_Q(r) with critical points");
  add_pair_options(hoeffding, &hoeffding_args);
  hoeffding->add_option("--r-min", r_min, "left end of the r grid")
      ->check(CLI::NonNegativeNumber);
  hoeffding->add_option("--r-max", r_max, "right end of the r grid");
  hoeffding->add_option("--steps", steps, "grid size (>= 2)");

  CommonArgs simulate_args;
  simulate_args.format = "csv";
  double pi0 = 0.5;
  int n_max = 8;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "exact n-copy errors with finite-n sandwich bounds");
  add_pair_options(simulate, &simulate_args);
  simulate->add_option("--pi0", pi0, "prior of the null hypothesis")
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  simulate->add_option("--n-max", n_max, "largest copy count")
      ->check(CLI::PositiveNumber);

  std::string suite = "all";
  int trials = 1000;
  std::uint64_t seed = 42;
  std::vector<long> dims;
  std::string verify_format = "table";
  std::string verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "randomized verification suites for the proved inequalities");
  verify->add_option("--suite", suite,
                     "trace_inequality, chain, appendix, tensor_counterexample, "
                     "convexity_concavity or all");
  verify->add_option("--trials", trials, "trials per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--dims", dims, "state dimensions to sample from");
  verify->add_option("--format", verify_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", verify_out, "write output to PATH");

  CommonArgs map_args;
  CLI::App* map_cmd = app.add_subcommand(
      "map", "classical distribution pair (p, q) of a state pair");
  add_pair_options(map_cmd, &map_args);

  CommonArgs stein_args;
  CLI::App* stein = app.add_subcommand("stein", "Stein rate S(rho||sigma)");
  add_pair_options(stein, &stein_args);

  std::string dump_in, dump_out;
  CLI::App* dump = app.add_subcommand(
      "dump", "re-emit a state file in canonical form (17 digits)");
  dump->add_option("--rho", dump_in, "state file to read")->required();
  dump->add_option("--out", dump_out, "write to PATH instead of stdout");

  long rs_dim = 2, rs_rank = 2;
  std::uint64_t rs_seed = 0;
  std::string rs_out;
  CLI::App* random_state = app.add_subcommand(
      "random-state", "generate a seeded random density matrix");
  random_state->add_option("--dim", rs_dim)->check(CLI::PositiveNumber);
  random_state->add_option("--rank", rs_rank)->check(CLI::PositiveNumber);
  random_state->add_option("--seed", rs_seed);
  random_state->add_option("--out", rs_out, "write to PATH instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (chernoff->parsed()) return cmd_chernoff(chernoff_args);
    if (hoeffding->parsed())
      return cmd_hoeffding(hoeffding_args, r_min, r_max, steps);
    if (simulate->parsed()) return cmd_simulate(simulate_args, pi0, n_max);
    if (verify->parsed())
      return cmd_verify(suite, trials, seed, dims, verify_format, verify_out);
    if (map_cmd->parsed()) return cmd_map(map_args);
    if (stein->parsed()) return cmd_stein(stein_args);
    if (dump->parsed()) {
      const qht::DensityMatrix state = qht::load_state(dump_in);
      if (dump_out.empty()) {
        std::cout << qht::state_to_json(state.mat);
      } else {
        qht::save_state(dump_out, state.mat);
      }
      return kExitOk;
    }
    if (random_state->parsed()) {
      const qht::DensityMatrix state = qht::random_density(
          static_cast<qht::Index>(rs_dim), static_cast<qht::Index>(rs_rank), rs_seed);
      if (rs_out.empty()) {
        std::cout << qht::state_to_json(state.mat);
      } else {
        qht::save_state(rs_out, state.mat);
      }
      return kExitOk;
    }
  } catch (const qht::FileNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const qht::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qht::NotPSD& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qht::TraceNotOne& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qht::NonHermitianInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qht::DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const qht::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const qht::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitOk;
}
