#pragma once

#include <string>
#include <vector>

#include "causex/theory.hpp"

namespace causex {

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return errors.empty(); }
};

struct ValidationOptions {
  /// When set, structured symbols must use a predicate with a kind declaration.
  bool lifting = false;
};

ValidationReport validate_theory(const Theory& t, ValidationOptions opts = {});

/// Copy of `t` without tautological clauses.
Theory drop_tautologies(Theory t);

}  // namespace causex
