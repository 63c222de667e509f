#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cli/cli.hpp"
#include "symtrace/errors.hpp"
#include "symtrace/json_io.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SYMTRACE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring unparsable SYMTRACE_SEED=" << env << "\n";
    }
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw symtrace::InvalidInput("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of symmetric-power trace identities and fiberwise certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = default_seed();
  std::string scale = "small";
  unsigned parallel = 1;
  std::string in_path, out_path;
  bool no_timing = false;
  app.add_option("--seed", seed, "64-bit seed (default: $SYMTRACE_SEED or 1)");
  app.add_option("--scale", scale, "self-test size: small or standard");
  app.add_option("--parallel", parallel, "worker threads for per-graph evaluation")->check(CLI::PositiveNumber);
  app.add_option("--in", in_path, "input JSON file");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_flag("--no-timing", no_timing, "omit elapsed time so reports are byte-identical across runs");

  app.add_subcommand("selftest", "run the invariant suites");
  app.add_subcommand("verify-trace", "compare a word's trace with its graph expansion (--in word file)");
  app.add_subcommand("certify", "search for a nonzero-value graph certificate (--in fiber instance)");
  app.add_subcommand("check-zeros", "decide whether forms have only the trivial common zero (--in form list)");
  app.add_subcommand("nu", "evaluate the certificate length bound (--in {\"r\", \"d\"})");
  app.add_subcommand("phi-check", "check the permutation pairing identity (--in sigma, S, T, u)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  symtrace::cli::RunReport report;
  try {
    if (command == "selftest") {
      report = symtrace::cli::run_selftest(seed, symtrace::cli::parse_scale(scale), parallel);
    } else {
      if (in_path.empty()) throw symtrace::InvalidInput(command + " needs --in");
      report = symtrace::cli::run_instance(command, symtrace::json_io::parse(read_file(in_path)), parallel);
    }
  } catch (const symtrace::IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "rejected input: " << e.what() << "\n";
    return 2;
  }
  report.seed = seed;

  const std::string text = symtrace::cli::to_json(report, !no_timing).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  if (report.failures != 0) std::cerr << report.failures << " of " << report.cases_run << " cases failed\n";
  return symtrace::cli::exit_code(report);
}
