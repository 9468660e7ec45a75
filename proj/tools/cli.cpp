#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rainbow/errors.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/hall.hpp"
#include "rainbow/io.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/shifting.hpp"
#include "rainbow/solvers.hpp"
#include "rainbow/verify.hpp"

namespace rainbow::cli {
namespace {

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::string algorithm = "oracle";
  std::string name;
  std::string conjecture;
  std::string mode = "exhaustive";
  std::string threshold;
  int n = 0;
  int r = 2;
  int k = 2;
  int q = 3;
  int d = 1;
  int n_min = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  bool shift_first = false;
  bool scan = false;
};

class Dispatcher {
 public:
  Dispatcher(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), in_(in), out_(out) {}

  const std::optional<Family>& instance() const { return family_; }

  int solve() {
    const Family& f = load();
    std::optional<RainbowMatching> m;
    const std::string& algo = opt_.algorithm;
    if (algo == "oracle") {
      m = rainbow_exact(f);
    } else if (algo == "hall") {
      const ShiftedFamily shifted = shifted_closure(f);
      const AlgoTrace trace = hall_size_algorithm(shifted.family);
      if (trace.success()) m = pullback_rainbow(shifted.log, f, *trace.matching);
    } else if (algo == "greedy") {
      m = greedy_bipartite(f);
    } else if (algo == "meshulam") {
      m = meshulam_r2(f);
    } else if (algo == "r3") {
      m = r3_solve(f);
    } else if (algo == "simple") {
      m = simple_algorithm(f);
    } else if (algo == "large-n") {
      m = large_n_procedure(f);
    } else {
      throw InputError("unknown algorithm '" + algo + "'");
    }
    if (m && !is_rainbow_matching(f, *m)) {
      throw TheoremViolation(algo + " returned an invalid rainbow matching");
    }
    if (json_output()) {
      out_ << result_json(algo, m).dump(2) << "\n";
    } else if (m) {
      out_ << matching_text(f.ground(), *m);
    } else {
      out_ << "no rainbow matching\n";
    }
    return m ? kExitOk : kExitNegative;
  }

  int shift() {
    const Family& f = load();
    const ShiftedFamily shifted = shifted_closure(f);
    if (json_output()) {
      nlohmann::json doc = {{"family", instance_json(shifted.family)},
                            {"log", shift_log_json(f.ground(), shifted.log)}};
      out_ << doc.dump(2) << "\n";
      return kExitOk;
    }
    out_ << format_instance(shifted.family);
    for (const ShiftStep& step : shifted.log.steps) {
      const int side = step.side == kGlobalSide ? 0 : step.side;
      out_ << "# s_{" << vertex_label(f.ground(), {side, step.x}) << ","
           << vertex_label(f.ground(), {side, step.y}) << "}: " << step.moved.size()
           << " edge(s) moved\n";
    }
    return kExitOk;
  }

  int nu() {
    const Family& f = load();
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t i = 0; i < f.k(); ++i) {
      const std::size_t value = nu_exact(f[i]);
      values.push_back(value);
      if (!json_output()) out_ << "F_" << i + 1 << ": nu = " << value << "\n";
    }
    if (json_output()) out_ << nlohmann::json{{"nu", values}}.dump() << "\n";
    return kExitOk;
  }

  int check() {
    const Family& f = load();
    const HallCheck result = check_hall_condition(f);
    if (json_output()) {
      nlohmann::json violating = nlohmann::json::array();
      for (std::size_t i : result.violating) violating.push_back(i + 1);
      out_ << nlohmann::json{{"holds", result.holds}, {"violating", violating}}.dump() << "\n";
    } else if (result.holds) {
      out_ << "condition holds\n";
    } else {
      out_ << "condition fails for I = {";
      for (std::size_t i = 0; i < result.violating.size(); ++i) {
        out_ << (i ? ", " : "") << result.violating[i] + 1;
      }
      out_ << "}\n";
    }
    return result.holds ? kExitOk : kExitNegative;
  }

  int extremal() {
    const Family f = construction();
    out_ << (json_output() ? instance_json(f).dump() + "\n" : format_instance(f));
    return kExitOk;
  }

  int verify() {
    if (opt_.scan) return scan();
    if (!opt_.threshold.empty()) {
      ThresholdMode mode;
      if (opt_.threshold == "f_general") {
        mode = ThresholdMode::f_general;
      } else if (opt_.threshold == "g_partite") {
        mode = ThresholdMode::g_partite;
      } else {
        throw InputError("unknown threshold '" + opt_.threshold + "'");
      }
      const std::uint64_t value = compute_threshold_exact(mode, opt_.n, opt_.r, opt_.k);
      const std::uint64_t formula = mode == ThresholdMode::g_partite
                                        ? g_formula(opt_.n, opt_.r, opt_.k)
                                        : (opt_.r == 2 ? f_r2(opt_.n, opt_.k)
                                                       : f_large_n(opt_.n, opt_.r, opt_.k));
      if (json_output()) {
        out_ << nlohmann::json{{"threshold", opt_.threshold}, {"n", opt_.n}, {"r", opt_.r},
                               {"k", opt_.k}, {"exact", value}, {"formula", formula}}
                    .dump()
             << "\n";
      } else {
        out_ << opt_.threshold << "(" << opt_.n << "," << opt_.r << "," << opt_.k
             << ") exact = " << value << ", formula = " << formula << "\n";
      }
      return kExitOk;
    }

    const auto id = conjecture_from_string(opt_.conjecture);
    if (!id) throw InputError("unknown conjecture '" + opt_.conjecture + "'");
    VerifyMode mode;
    if (opt_.mode == "random") {
      mode = VerifyMode::random;
    } else if (opt_.mode == "exhaustive") {
      mode = *id == ConjectureId::degree_condition ? VerifyMode::exhaustive_raw
                                                   : VerifyMode::exhaustive_shifted;
    } else {
      throw InputError("unknown mode '" + opt_.mode + "'");
    }
    const ConjectureParams params{opt_.n, opt_.r, opt_.k, opt_.d};
    const VerifyReport report =
        check_conjecture(*id, params, mode, opt_.trials, opt_.seed, opt_.workers);
    if (json_output()) {
      out_ << report_json(report).dump(2) << "\n";
    } else {
      out_ << "conjecture " << to_string(report.id) << " (n=" << params.n << ", r=" << params.r
           << ", k=" << params.k;
      if (*id == ConjectureId::degree_condition) out_ << ", d=" << params.d;
      out_ << "), mode " << to_string(report.mode) << "\n"
           << "instances checked: " << report.instances_checked << "\n"
           << "counterexamples: " << report.counterexamples.size() << "\n";
      for (const Family& f : report.counterexamples) out_ << format_instance(f);
    }
    return report.counterexamples.empty() ? kExitOk : kExitNegative;
  }

  int trace() {
    Family f = opt_.name.empty() ? load() : construction();
    if (opt_.shift_first) f = shifted_closure(f).family;
    family_ = f;
    const AlgoTrace t = hall_size_algorithm(f);
    out_ << (json_output() ? trace_json(t).dump(2) + "\n" : trace_text(t));
    return t.success() ? kExitOk : kExitNegative;
  }

 private:
  bool json_output() const { return opt_.format == "json"; }

  const Family& load() {
    std::string text;
    if (opt_.input == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(opt_.input);
      if (!file) throw InputError("cannot read instance file '" + opt_.input + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    family_ = parse_family(text);
    return *family_;
  }

  Family construction() {
    const std::string& name = opt_.name;
    if (name == "star") return star_family(opt_.n, opt_.r, opt_.k);
    if (name == "steal") return steal_family(opt_.q, opt_.n);
    if (name == "r3counter") return r3_counterexample(opt_.n);
    if (name == "ekr") {
      Hypergraph h = ekr_star(opt_.n, opt_.r);
      GroundSet g = h.ground();
      return Family(g, {std::move(h)});
    }
    throw InputError("unknown construction '" + name + "'");
  }

  int scan() {
    const int n_min = opt_.n_min > 0 ? opt_.n_min : std::max(1, opt_.k - 1);
    const auto rows = scan_large_n(opt_.r, opt_.k, n_min, opt_.n, opt_.trials, opt_.seed);
    const auto n0 = empirical_n0(rows);
    nlohmann::json doc = {{"r", opt_.r}, {"k", opt_.k}, {"rows", nlohmann::json::array()}};
    for (const auto& row : rows) {
      doc["rows"].push_back({{"n", row.n}, {"trials", row.trials}, {"successes", row.successes}});
      if (!json_output()) {
        out_ << "n=" << row.n << ": " << row.successes << "/" << row.trials << "\n";
      }
    }
    doc["empirical_n0"] = n0 ? nlohmann::json(*n0) : nlohmann::json(nullptr);
    if (json_output()) {
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << "empirical n0: " << (n0 ? std::to_string(*n0) : std::string("none")) << "\n";
    }
    return kExitOk;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<Family> family_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Rainbow matchings: solvers, shifting, extremal constructions and verifiers",
               "rainbow"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "Instance file, '-' for stdin");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "Side size or vertex count");
    cmd->add_option("--r", opt.r, "Uniformity");
    cmd->add_option("--k", opt.k, "Number of members");
  };

  auto* solve = app.add_subcommand("solve", "Find a rainbow matching");
  add_io(solve);
  solve->add_option("-a,--algorithm", opt.algorithm, "Solver")
      ->check(CLI::IsMember({"hall", "greedy", "meshulam", "r3", "simple", "large-n", "oracle"}));

  auto* shift = app.add_subcommand("shift", "Shifted closure with its log");
  add_io(shift);

  auto* nu = app.add_subcommand("nu", "Matching number of every member");
  add_io(nu);

  auto* check = app.add_subcommand("check", "Hall-type size condition");
  add_io(check);

  auto* extremal = app.add_subcommand("extremal", "Emit a named construction");
  extremal->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  extremal->add_option("--name", opt.name, "Construction")
      ->required()
      ->check(CLI::IsMember({"star", "steal", "r3counter", "ekr"}));
  add_params(extremal);
  extremal->add_option("--q", opt.q, "q for the steal family");

  auto* verify = app.add_subcommand("verify", "Conjecture checks and exact thresholds");
  verify->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  add_params(verify);
  verify->add_option("--conjecture", opt.conjecture,
                     "rainbow_general|size_condition|degree_condition|simple|matrix");
  verify->add_option("--threshold", opt.threshold, "f_general|g_partite");
  verify->add_option("--d", opt.d, "Degree bound for degree_condition");
  verify->add_option("--mode", opt.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--trials", opt.trials, "Random trials (random mode, scans)");
  verify->add_option("--seed", opt.seed);
  verify->add_option("--workers", opt.workers, "Parallel workers");
  verify->add_flag("--large-n-scan", opt.scan, "Scan the large-n procedure for n in [n-min, n]");
  verify->add_option("--n-min", opt.n_min);

  auto* trace = app.add_subcommand("trace", "Step log of the longest-edge algorithm");
  add_io(trace);
  trace->add_option("--name", opt.name, "Use a construction instead of --input")
      ->check(CLI::IsMember({"star", "steal", "r3counter", "ekr"}));
  trace->add_option("--n", opt.n);
  trace->add_option("--k", opt.k);
  trace->add_option("--q", opt.q);
  trace->add_flag("--shift", opt.shift_first, "Apply the shifted closure first");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Dispatcher dispatcher(opt, in, out);
  try {
    if (solve->parsed()) return dispatcher.solve();
    if (shift->parsed()) return dispatcher.shift();
    if (nu->parsed()) return dispatcher.nu();
    if (check->parsed()) return dispatcher.check();
    if (extremal->parsed()) return dispatcher.extremal();
    if (verify->parsed()) return dispatcher.verify();
    if (trace->parsed()) return dispatcher.trace();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    if (dispatcher.instance()) err << format_instance(*dispatcher.instance());
    return kExitTheoremViolation;
  }
  return kExitUsage;
}

}  // namespace rainbow::cli
