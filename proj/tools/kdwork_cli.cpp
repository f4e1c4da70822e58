// kdwork: KDQ work statistics for qubit circuits.
//
// Exit codes: 0 success, 2 parse or usage error, 3 validation error,
// 4 verification failure.

#include "kdwork/circuit_parser.hpp"
#include "kdwork/decomposition.hpp"
#include "kdwork/error.hpp"
#include "kdwork/figures.hpp"
#include "kdwork/json_io.hpp"
#include "kdwork/sweep.hpp"
#include "kdwork/thermo.hpp"
#include "kdwork/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerify = 4;

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw kdwork::InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

kdwork::CircuitFile load(const std::string &path) {
  auto file = kdwork::parse_circuit(read_file(path));
  for (const auto &w : file.warnings) std::cerr << "warning: " << w << "\n";
  return file;
}

void write_output(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw kdwork::InvalidArgument("cannot write " + out_path);
  out << text;
}

// "name=start:stop:count"
kdwork::SweepAxis parse_axis(const std::string &text) {
  const auto eq = text.find('=');
  const auto c1 = text.find(':', eq);
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos) {
    throw kdwork::InvalidArgument("axis '" + text + "' must look like name=start:stop:count");
  }
  const double start = kdwork::parse_real_expression(text.substr(eq + 1, c1 - eq - 1));
  const double stop = kdwork::parse_real_expression(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string count = text.substr(c2 + 1);
  if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
    throw kdwork::InvalidArgument("axis '" + text + "': count must be a positive integer");
  }
  return kdwork::SweepAxis::linspace(text.substr(0, eq), start, stop, std::stoul(count));
}

// "name=v1,v2,..."
kdwork::SweepAxis parse_values(const std::string &text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw kdwork::InvalidArgument("values '" + text + "' must look like name=v1,v2");
  kdwork::SweepAxis a{text.substr(0, eq), {}};
  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ',')) a.values.push_back(kdwork::parse_real_expression(item));
  if (a.values.empty()) throw kdwork::InvalidArgument("values '" + text + "' lists no values");
  return a;
}

std::vector<std::string> split_commas(const std::vector<std::string> &items) {
  std::vector<std::string> out;
  for (const auto &s : items) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Kirkwood-Dirac quasiprobability work statistics for qubit circuits"};
  app.require_subcommand(1);
  app.fallthrough();

  int json_indent = 2;
  std::uint64_t seed = 0;
  app.add_option("--json-indent", json_indent, "JSON indentation; 0 prints a single line");
  app.add_option("--seed", seed, "Seed for randomized checks");

  std::string file;
  bool split = false;
  auto *kdq = app.add_subcommand("kdq", "KDQ table of a circuit file");
  kdq->add_option("file", file, "Circuit file")->required();
  kdq->add_flag("--split", split, "Also print the population and coherent parts");

  std::optional<double> beta;
  bool beta_override = false;
  auto *work = app.add_subcommand("work", "Extractable work report");
  work->add_option("file", file, "Circuit file")->required();
  work->add_option("--beta", beta, "Add the Jarzynski report at this inverse temperature");
  work->add_flag("--non-gibbs", beta_override,
                 "Compute the Jarzynski sum even if the populations are not Gibbs at --beta");

  auto *decompose = app.add_subcommand("decompose", "Gate-by-gate KDQ decomposition");
  decompose->add_option("file", file, "Circuit file")->required();
  bool screen = false;
  decompose->add_flag("--screen", screen, "Add the commutation screen (2 or 3 gates)");

  std::vector<std::string> axes, value_axes, fixed, columns;
  std::string out_path;
  auto *sweep = app.add_subcommand("sweep", "Sweep $placeholders of a circuit file, CSV output");
  sweep->add_option("file", file, "Circuit file with $placeholders")->required();
  sweep->add_option("--axis", axes, "name=start:stop:count (repeatable; first is slowest)");
  sweep->add_option("--values", value_axes, "name=v1,v2,... explicit axis values (repeatable)");
  sweep->add_option("--set", fixed, "name=value for placeholders held fixed (repeatable)");
  sweep->add_option("--columns", columns, "Comma-separated output columns")->required();
  sweep->add_option("--out", out_path, "Output CSV path (default stdout)");

  std::string level = "quick";
  auto *verify = app.add_subcommand("verify", "Run the randomized invariant suite");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  std::string figure;
  auto *figures = app.add_subcommand("figures", "Data behind the standard plots (CSV)");
  figures->add_option("id", figure, "2a, 2b, 3, 4 or 5")->required()->check(CLI::IsMember(kdwork::figure_ids()));
  figures->add_option("--out", out_path, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (kdq->parsed()) {
      const auto f = load(file);
      const auto h = f.hamiltonian();
      const auto rho = f.initial_state();
      const auto u = kdwork::circuit_unitary(f.circuit);
      nlohmann::json j = kdwork::to_json(kdwork::kdq_table(u, rho, h));
      if (split) j["split"] = kdwork::to_json(kdwork::kdq_split(u, rho, h));
      std::cout << kdwork::dump_json(j, json_indent) << "\n";
    } else if (work->parsed()) {
      const auto f = load(file);
      const auto h = f.hamiltonian();
      const auto rho = f.initial_state();
      const auto u = kdwork::circuit_unitary(f.circuit);
      nlohmann::json j = kdwork::to_json(kdwork::work_report(u, rho, h));
      if (beta) j["jarzynski"] = kdwork::to_json(kdwork::jarzynski(u, rho, *beta, h, beta_override));
      std::cout << kdwork::dump_json(j, json_indent) << "\n";
    } else if (decompose->parsed()) {
      const auto f = load(file);
      const auto h = f.hamiltonian();
      nlohmann::json j = kdwork::to_json(kdwork::decomposition_identity(f.circuit, f.initial_state(), h));
      if (screen) j["commutation"] = kdwork::to_json(kdwork::commutation_screen(f.circuit, h));
      std::cout << kdwork::dump_json(j, json_indent) << "\n";
    } else if (sweep->parsed()) {
      kdwork::SweepSpec spec;
      for (const auto &a : axes) spec.axes.push_back(parse_axis(a));
      for (const auto &a : value_axes) spec.axes.push_back(parse_values(a));
      for (const auto &s : fixed) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw kdwork::InvalidArgument("--set '" + s + "' must look like name=value");
        spec.fixed[s.substr(0, eq)] = kdwork::parse_real_expression(s.substr(eq + 1));
      }
      spec.columns = split_commas(columns);
      kdwork::validate_columns(spec.columns);
      write_output(kdwork::to_csv(kdwork::run_sweep(read_file(file), spec)), out_path);
    } else if (verify->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = kdwork::run_verify(kdwork::draws_for_level(level), seed, &std::cout);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::size_t failed = 0;
      for (const auto &c : result.checks) failed += !c.passed;
      std::cout << (failed ? "FAILED " : "OK ") << result.checks.size() - failed << "/"
                << result.checks.size() << " checks passed in " << secs << " s\n";
      return failed ? kExitVerify : 0;
    } else if (figures->parsed()) {
      write_output(kdwork::to_csv(kdwork::run_figure(figure)), out_path);
    }
  } catch (const kdwork::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const kdwork::InvalidArgument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const kdwork::ValidationError &e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
