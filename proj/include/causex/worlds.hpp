#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "causex/closure.hpp"
#include "causex/theory.hpp"

namespace causex {

enum class Truth : std::uint8_t { unknown, yes, no };

/// One resolution of the disjunctive facts and completion atoms.
struct World {
  int index = 0;
  /// Disjunct choices and completion choices.
  std::set<Literal> chosen;
  /// Assigned symbols only; anything absent is unknown.
  std::map<Symbol, bool> truth;
  /// Causal atoms with a known status: true = present, false = absent.
  std::map<CausalAtom, bool> causal_truth;
  /// Causal atoms in force in this world.
  std::set<CausalAtom> causal;
  bool consistent = true;

  Truth truth_of(const Symbol& s) const;
  Truth causal_of(const CausalAtom& c) const;
  Truth value(const Literal& lit) const;
};

struct WorldOptions {
  std::size_t max_worlds = 1024;
  /// Also allow several disjuncts of one disjunctive fact at once.
  bool inclusive_disjunction = false;
  /// When false, disjunctive facts only act as constraints.
  bool disjunctions_generate = true;
};

class WorldOverflow : public std::runtime_error {
 public:
  explicit WorldOverflow(std::size_t bound);
  std::size_t bound;
};

class NoSurvivingWorld : public std::runtime_error {
 public:
  NoSurvivingWorld() : std::runtime_error("inconsistent premises: no world survives") {}
};

/// Consistent worlds, indexed 1..n in canonical choice order. Throws
/// WorldOverflow when the number of choice combinations exceeds the bound.
std::vector<World> enumerate_worlds(const Theory& t, const WorldOptions& opts = {});

/// Forward closure of true and backward closure of false along impco.
/// A symbol forced both ways marks the world inconsistent.
World propagate_truth(World w, const ClosureRelations& c);

/// Atoms none of whose conditions is false in `w`, marked verified there.
std::vector<ExplanationAtom> verify(const std::vector<ExplanationAtom>& atoms, const World& w);

struct Verdict {
  ExplanationAtom atom;
  std::set<int> verified_in;
  bool brave = false;
  bool cautious = false;
};

/// Aggregates per-world verification. `candidates` is the verdict universe
/// (status ignored); `verified` holds atoms with their world index set.
std::vector<Verdict> brave_cautious(const std::vector<ExplanationAtom>& candidates,
                                    const std::vector<ExplanationAtom>& verified,
                                    const std::vector<World>& worlds);

}  // namespace causex
