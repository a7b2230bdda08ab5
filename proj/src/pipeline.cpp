#include "causex/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "causex/closure.hpp"
#include "causex/generator.hpp"
#include "causex/lifter.hpp"
#include "causex/optimizer.hpp"
#include "causex/validate.hpp"

namespace causex {

std::optional<Stage> stage_from_string(std::string_view s) noexcept {
  if (s == "gen") return Stage::gen;
  if (s == "opt") return Stage::opt;
  if (s == "verify") return Stage::verify;
  if (s == "all") return Stage::all;
  return std::nullopt;
}

std::optional<Format> format_from_string(std::string_view s) noexcept {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  return std::nullopt;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

// Closure for the explanations tagged with `world` (nullopt = shared).
class ClosureCache {
 public:
  ClosureCache(const Theory& t, const std::vector<World>& w) : theory_(t), worlds_(w) {}

  const ClosureRelations& get(std::optional<int> world) {
    const int key = world.value_or(0);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    if (!world) return cache_.emplace(0, compute_closures(theory_)).first->second;
    if (*world < 1 || *world > static_cast<int>(worlds_.size()))
      throw InputError(0, "stage fact refers to world " + std::to_string(*world) + ", which does not exist");
    return cache_.emplace(key, compute_closures(theory_, worlds_[*world - 1].causal)).first->second;
  }

 private:
  const Theory& theory_;
  const std::vector<World>& worlds_;
  std::map<int, ClosureRelations> cache_;
};

std::map<std::optional<int>, std::vector<ExplanationAtom>> by_world(const std::vector<ExplanationAtom>& atoms) {
  std::map<std::optional<int>, std::vector<ExplanationAtom>> out;
  for (const auto& a : atoms) out[a.world_index].push_back(a);
  return out;
}

std::vector<ExplanationAtom> generate_all(Report& r) {
  r.per_world = std::any_of(r.worlds.begin(), r.worlds.end(),
                            [&](const World& w) { return w.causal != r.theory.causal; });
  if (!r.per_world) return generate(r.theory);
  std::vector<ExplanationAtom> out;
  for (const auto& w : r.worlds) {
    Theory in_world = r.theory;
    in_world.causal = w.causal;
    for (auto a : generate(in_world)) {
      a.world_index = w.index;
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<ExplanationAtom> optimize_all(const std::vector<ExplanationAtom>& generated, ClosureCache& cache) {
  std::vector<ExplanationAtom> out;
  for (const auto& [world, atoms] : by_world(generated))
    for (auto a : optimize(atoms, cache.get(world))) {
      a.world_index = world;
      out.push_back(std::move(a));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Report run_stage(ParsedInput input, Stage stage, const WorldOptions& wopts, bool lift) {
  Report r;
  r.stage = stage;

  Theory t = std::move(input.theory);
  if (lift) t = apply_lifting(std::move(t), &r.warnings);

  auto report = validate_theory(t, {.lifting = lift});
  if (!report.ok()) throw InputError(0, join(report.errors));
  r.warnings.insert(r.warnings.end(), report.warnings.begin(), report.warnings.end());
  r.theory = drop_tautologies(std::move(t));

  r.worlds = enumerate_worlds(r.theory, wopts);
  if (r.worlds.empty()) throw NoSurvivingWorld();

  const auto& st = input.stage;
  auto tagged = [](const std::vector<ExplanationAtom>& v) {
    return std::any_of(v.begin(), v.end(), [](const ExplanationAtom& a) { return a.world_index.has_value(); });
  };
  ClosureCache cache(r.theory, r.worlds);

  if (!st.optimal.empty() && stage != Stage::gen) {
    r.optimal = st.optimal;
    r.per_world = tagged(r.optimal);
  } else if (!st.generated.empty()) {
    r.generated = st.generated;
    r.per_world = tagged(r.generated);
  } else {
    r.generated = generate_all(r);
  }
  for (auto& a : r.generated) a.status = Status::generated;
  std::sort(r.generated.begin(), r.generated.end());
  if (stage == Stage::gen) return r;

  if (r.optimal.empty()) r.optimal = optimize_all(r.generated, cache);
  for (auto& a : r.optimal) a.status = Status::optimal;
  std::sort(r.optimal.begin(), r.optimal.end());
  r.generated.clear();
  if (stage == Stage::opt) return r;

  auto per_world = by_world(r.optimal);
  for (const auto& w : r.worlds) {
    std::vector<ExplanationAtom> candidates = per_world[std::nullopt];
    if (auto it = per_world.find(w.index); it != per_world.end())
      candidates.insert(candidates.end(), it->second.begin(), it->second.end());
    auto v = verify(candidates, w);
    r.verified.insert(r.verified.end(), v.begin(), v.end());
  }
  std::sort(r.verified.begin(), r.verified.end());

  std::vector<ExplanationAtom> universe;
  for (auto a : r.optimal) {
    a.world_index.reset();
    universe.push_back(std::move(a));
  }
  r.verdicts = brave_cautious(universe, r.verified, r.worlds);
  return r;
}

Report run_text(std::string_view text, Stage stage, const WorldOptions& worlds, bool lift) {
  return run_stage(parse_input(text), stage, worlds, lift);
}

Report run_pipeline(const RunConfig& cfg) {
  std::string text;
  for (const auto& path : cfg.inputs) {
    if (path == "-") {
      text.append(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw InputError(0, "cannot read '" + path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      text += ss.str();
    }
    text += "\n";
  }
  return run_text(text, cfg.stage, cfg.worlds, cfg.lift);
}

}  // namespace causex
