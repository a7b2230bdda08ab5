#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "causex/emit.hpp"
#include "causex/parser.hpp"
#include "causex/theory.hpp"

namespace fixtures {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(CAUSEX_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline causex::Theory load(const std::string& name) { return causex::parse_theory(read_data(name)); }

// 2..8 symbols s0.., up to 10 causal atoms (self-causes allowed) and up to
// 10 non-reflexive ontology atoms.
inline causex::Theory random_theory(std::mt19937& rng) {
  causex::Theory t;
  const int ns = 2 + static_cast<int>(rng() % 7);
  const int nc = static_cast<int>(rng() % 11), no = static_cast<int>(rng() % 11);
  auto sym = [&] { return causex::Symbol("s" + std::to_string(rng() % ns)); };
  for (int i = 0; i < nc; ++i) {
    auto a = sym();
    t.causal.insert({a, sym()});
  }
  for (int i = 0; i < no; ++i) {
    auto a = sym(), b = sym();
    if (a != b) t.ontology.insert({a, b});
  }
  return t;
}

// Two copies (A, B) of a chain of four diagram instances: 120 symbols.
// Inside a copy, instance k's delta causes instance k+1's alpha. The
// copies share one causal link, from gamma_A1 to beta_B1. Joining the two
// chains end to end instead makes generation explode.
inline std::string big_benchmark() {
  const auto diagram = load("diagram.lp");
  causex::Theory big;
  for (char copy : {'A', 'B'}) {
    for (int k = 1; k <= 4; ++k) {
      const std::string sfx = std::string("_") + copy + std::to_string(k);
      auto s = [&](const causex::Symbol& x) { return causex::Symbol(x.text() + sfx); };
      for (const auto& c : diagram.causal) big.causal.insert({s(c.cause), s(c.effect)});
      for (const auto& o : diagram.ontology) big.ontology.insert({s(o.sub), s(o.super)});
      if (k < 4)
        big.causal.insert({causex::Symbol("delta" + sfx),
                           causex::Symbol(std::string("alpha_") + copy + std::to_string(k + 1))});
    }
  }
  big.causal.insert({causex::Symbol("gamma_A1"), causex::Symbol("beta_B1")});
  std::string out;
  for (const auto& l : causex::theory_lines(big)) out += l + "\n";
  return out;
}

}  // namespace fixtures
