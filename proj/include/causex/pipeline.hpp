#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "causex/parser.hpp"
#include "causex/theory.hpp"
#include "causex/worlds.hpp"

namespace causex {

enum class Stage : std::uint8_t { gen, opt, verify, all };
enum class Format : std::uint8_t { text, json };

std::optional<Stage> stage_from_string(std::string_view s) noexcept;
std::optional<Format> format_from_string(std::string_view s) noexcept;

struct RunConfig {
  /// Read and concatenated in order; "-" is standard input.
  std::vector<std::string> inputs;
  Stage stage = Stage::all;
  WorldOptions worlds;
  Format format = Format::text;
  bool lift = false;
};

/// Everything a run produced. Which explanation lists are filled depends on
/// the stage: gen fills `generated`, opt `optimal`, verify/all `optimal`,
/// `verified` and `verdicts`.
struct Report {
  Stage stage = Stage::all;
  Theory theory;
  std::vector<std::string> warnings;
  std::vector<World> worlds;
  /// True when some world changes the causal atoms, so explanations were
  /// derived per world and carry a world index.
  bool per_world = false;
  std::vector<ExplanationAtom> generated;
  std::vector<ExplanationAtom> optimal;
  std::vector<ExplanationAtom> verified;
  std::vector<Verdict> verdicts;
};

/// Runs `stage` on parsed input. Stage facts already present are reused;
/// missing earlier stages are computed from the theory, so opt on a bare
/// theory equals gen followed by opt.
///
/// Throws InputError for an invalid theory, WorldOverflow, and
/// NoSurvivingWorld.
Report run_stage(ParsedInput input, Stage stage, const WorldOptions& worlds = {}, bool lift = false);

Report run_text(std::string_view text, Stage stage, const WorldOptions& worlds = {}, bool lift = false);

/// Reads cfg.inputs and runs the configured stage.
Report run_pipeline(const RunConfig& cfg);

}  // namespace causex
