// causex: staged explanation engine.
//
//   causex [--stage gen|opt|verify|all] [options] FILE...
//   causex oracle FILE...      compare gen+opt against the brute-force oracle

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "causex/emit.hpp"
#include "causex/generator.hpp"
#include "causex/optimizer.hpp"
#include "causex/oracle.hpp"
#include "causex/pipeline.hpp"

namespace {

enum Exit { ok = 0, input_error = 1, overflow = 2, internal = 3 };

std::string slurp(const std::vector<std::string>& paths) {
  std::string text;
  for (const auto& p : paths) {
    if (p == "-") {
      text.append(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(p, std::ios::binary);
      if (!in) throw causex::InputError(0, "cannot read '" + p + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      text += ss.str();
    }
    text += "\n";
  }
  return text;
}

// Prints both sides of any disagreement; returns the number of mismatches.
int compare_with_oracle(const causex::Theory& t, std::size_t bound, std::ostream& out) {
  using namespace causex;
  const auto c = compute_closures(t);
  const auto ours = keys_of(optimize(generate(t, c), c));
  const auto ref = keys_of(oracle::optimal_subset(oracle::derive_all(t, bound), t));
  int bad = 0;
  auto line = [](const auto& k) {
    const auto& [f, to, s] = k;
    return f.text() + " -> " + to.text() + " " + s.text();
  };
  for (const auto& k : ours)
    if (!ref.contains(k)) out << "pipeline only: " << line(k) << "\n", ++bad;
  for (const auto& k : ref)
    if (!ours.contains(k)) out << "oracle only:   " << line(k) << "\n", ++bad;
  out << ours.size() << " pipeline atoms, " << ref.size() << " oracle atoms, " << bad << " mismatches\n";
  return bad;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal explanation engine: generate, optimize and verify explanation atoms"};
  app.set_version_flag("--version", "causex 0.1");

  causex::RunConfig cfg;
  std::string stage = "all", format = "text", out_path;
  bool no_disjunctive_worlds = false;

  app.add_option("inputs", cfg.inputs, "Fact files or earlier stage output ('-' for stdin)");
  app.add_option("--stage", stage, "Stage to run")->check(CLI::IsMember({"gen", "opt", "verify", "all"}));
  app.add_option("--max-worlds", cfg.worlds.max_worlds, "Upper bound on enumerated worlds")
      ->check(CLI::PositiveNumber);
  app.add_flag("--inclusive-disjunction", cfg.worlds.inclusive_disjunction,
               "Also build worlds where several disjuncts hold");
  app.add_flag("--no-disjunctive-worlds", no_disjunctive_worlds,
               "Treat disjunctive facts as constraints only");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--lift", cfg.lift, "Expand ont_object facts into ontology atoms");
  app.add_option("--out", out_path, "Write output here instead of stdout");

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare gen+opt with the brute-force oracle");
  std::vector<std::string> oracle_inputs;
  std::size_t oracle_bound = 10;
  oracle_cmd->add_option("inputs", oracle_inputs, "Theory files")->required();
  oracle_cmd->add_option("--bound", oracle_bound, "Refuse theories with more edge symbols")
      ->check(CLI::Range(1, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*oracle_cmd) {
      auto t = causex::parse_theory(slurp(oracle_inputs));
      return compare_with_oracle(t, oracle_bound, std::cout) == 0 ? ok : internal;
    }

    if (cfg.inputs.empty()) cfg.inputs.push_back("-");
    cfg.stage = *causex::stage_from_string(stage);
    cfg.format = *causex::format_from_string(format);
    cfg.worlds.disjunctions_generate = !no_disjunctive_worlds;

    const auto report = causex::run_pipeline(cfg);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    const auto text = causex::emit(report, cfg.format);

    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!(out << text)) throw causex::InputError(0, "cannot write '" + out_path + "'");
    }
    return ok;
  } catch (const causex::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const causex::NoSurvivingWorld& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const causex::WorldOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return overflow;
  } catch (const causex::oracle::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}
