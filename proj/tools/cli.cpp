#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fubuki/census.hpp"
#include "fubuki/generator.hpp"
#include "fubuki/io.hpp"
#include "fubuki/solver.hpp"
#include "fubuki/theory.hpp"

namespace fubuki::cli {
namespace {

constexpr std::size_t kDefaultSolveLimit = 1000;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::size_t index_of(Regime r) { return static_cast<std::size_t>(r); }

int cmd_solve(const std::string& path, bool all, std::size_t limit, bool pretty, Streams io) {
  ClueSet clues = [&] {
    try {
      return puzzle_from_text(read_input(path, io.in));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }();
  const SolveResult result = solve(clues, SolveOptions{limit, true});
  const std::size_t shown = all ? result.solutions.size() : std::min<std::size_t>(1, result.solutions.size());
  for (std::size_t i = 0; i < shown; ++i) {
    if (pretty)
      io.out << render_pretty(result.solutions[i], clues) << '\n';
    else
      io.out << to_json(result.solutions[i]).dump() << '\n';
  }
  io.out << result.count << (result.count == 1 ? " solution" : " solutions");
  if (result.truncated) io.out << " (limit " << limit << " reached)";
  io.out << '\n';
  return result.count == 0 ? kNoSolution : kOk;
}

int cmd_classify(const std::vector<int>& values, Streams io) {
  if (values.size() != 3) {
    io.err << "classify: expected exactly 3 values\n";
    return kUsage;
  }
  const auto cls = [&] {
    try {
      return classify_diagonal(DiagonalSet(values[0], values[1], values[2]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("classify: ") + e.what());
    }
  }();
  std::string shifts = "none";
  if (!cls.shifts.empty()) {
    shifts.clear();
    for (int c : cls.shifts) shifts += (shifts.empty() ? "" : ",") + std::to_string(c);
  }
  io.out << "in Dr: " << (cls.in_dr ? "yes" : "no") << "; shifts: " << shifts
         << "; solutions if any: " << (cls.max_solutions == 1 ? "exactly 1" : "1 or 2") << '\n';
  return kOk;
}

int cmd_table(const std::string& format, Streams io) {
  const auto table = build_shift_table();
  if (format == "json")
    io.out << to_json(table).dump() << '\n';
  else
    io.out << shift_table_csv(table);
  return kOk;
}

int cmd_generate(const GeneratorConfig& cfg, Streams io) {
  for (const auto& clues : generate(cfg)) io.out << to_json(clues).dump() << '\n';
  return kOk;
}

}  // namespace

int verify(const std::vector<Regime>& regimes, const std::array<std::size_t, 4>& expected,
           bool json, unsigned threads, Streams io) {
  const SweepOptions sweep{threads, SweepOrder::Lexicographic};
  std::vector<std::string> mismatches;
  std::string name;
  auto check = [&](const std::string& label, std::size_t got, std::size_t want) {
    const bool ok = got == want;
    if (!json)
      io.out << "  " << label << ": " << got << " (expected " << want << ") "
             << (ok ? "PASS" : "FAIL") << '\n';
    if (!ok)
      mismatches.push_back(name + " " + label + ": " + std::to_string(got) +
                           " != " + std::to_string(want));
  };

  const auto reports = census(regimes, sweep);
  for (const auto& report : reports) {
    const std::size_t want = expected[index_of(report.regime)];
    name = regime_flag(report.regime);
    if (json)
      io.out << to_json(report).dump() << '\n';
    else
      io.out << "regime " << name << '\n';
    check("unique", report.unique_count, want);
    if (!json)
      io.out << "  single-solution grids: " << report.single_solution_grids << '\n'
             << "  max solutions: " << report.max_bucket << '\n';
    if (report.regime != Regime::FullDiagonal) continue;
    const auto closed = closed_form_unique_count();
    if (!json)
      io.out << "  closed form addends: " << closed.addends[0] << " + " << closed.addends[1] << " + "
             << closed.addends[2] << '\n';
    check("closed form", closed.total, want);
    const auto tally = companion_tally(sweep);
    check("companion scan", tally.first_solutions, want);
    check("single-solution grids via companions", tally.companionless,
          report.single_solution_grids);
    check("max solutions bound", report.max_bucket, 2);
    const auto oracle = compare_with_oracle(sweep);
    check("oracle discrepancies", oracle.discrepancies, 0);
  }

  if (mismatches.empty()) return kOk;
  for (const auto& m : mismatches) io.err << "mismatch: " << m << '\n';
  return kMismatch;
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Fubuki puzzle solver, classifier, census and generator", "fubuki"};
  app.require_subcommand(1);

  std::string solve_path;
  bool solve_all = false, solve_pretty = false;
  std::size_t solve_limit = kDefaultSolveLimit;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a puzzle JSON file ('-' for stdin)");
  solve_cmd->add_option("file", solve_path, "Puzzle file")->required();
  solve_cmd->add_flag("--all", solve_all, "Print every solution, not just the first");
  solve_cmd->add_option("--limit", solve_limit, "Stop after N solutions")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--pretty", solve_pretty, "Draw grids as boxes instead of JSON");

  std::vector<int> classify_values;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a diagonal by its possible shifts");
  classify_cmd->add_option("values", classify_values, "Three diagonal values")->required();

  std::string table_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "Print the shift table for all 84 diagonals");
  table_cmd->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string verify_regime;
  bool verify_all = false, verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute the unique-solution counts");
  auto* regime_opt = verify_cmd->add_option("--regime", verify_regime,
                                            "full-diagonal, first-two-diagonal, top-left or none");
  auto* all_opt = verify_cmd->add_flag("--all", verify_all, "Every regime in one sweep");
  regime_opt->excludes(all_opt);
  verify_cmd->add_flag("--json", verify_json, "Print census reports as JSON");

  std::string gen_regime = "full-diagonal";
  GeneratorConfig gen;
  auto* gen_cmd = app.add_subcommand("generate", "Generate puzzles as JSON lines");
  gen_cmd->add_option("--regime", gen_regime, "Which diagonal cells to reveal");
  gen_cmd->add_flag("--unique", gen.require_unique, "Only puzzles with exactly one solution");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--count", gen.count, "Number of puzzles")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());  // CLI11 consumes from the back
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_path, solve_all, solve_limit, solve_pretty, io);
    if (*classify_cmd) return cmd_classify(classify_values, io);
    if (*table_cmd) return cmd_table(table_format, io);
    if (*verify_cmd) {
      std::vector<Regime> regimes;
      if (verify_all) {
        regimes.assign(kAllRegimes.begin(), kAllRegimes.end());
      } else if (auto r = parse_regime(verify_regime)) {
        regimes.push_back(*r);
      } else {
        io.err << "verify: give --all or --regime with a known regime name\n";
        return kUsage;
      }
      return verify(regimes, kExpectedUnique, verify_json, default_thread_count(), io);
    }
    if (*gen_cmd) {
      const auto r = parse_regime(gen_regime);
      if (!r) {
        io.err << "generate: unknown regime '" << gen_regime << "'\n";
        return kUsage;
      }
      gen.regime = *r;
      return cmd_generate(gen, io);
    }
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fubuki::cli
