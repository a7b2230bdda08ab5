#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace causex {

/// A propositional symbol. Either flat ("alpha") or structured, i.e. a
/// predicate applied to object names and rendered "[own,tom,book]".
///
/// Both forms share one namespace. Equality and ordering use the rendered
/// text, which is injective because identifiers cannot contain brackets or
/// commas.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string name);
  Symbol(std::string predicate, std::vector<std::string> args);

  /// Accepts both "alpha" and "[p,x,y]" (whitespace around items ignored).
  static Symbol parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  bool structured() const noexcept { return !parts_.empty(); }

  /// Predicate name for structured symbols, the name itself otherwise.
  std::string_view predicate() const noexcept;
  /// Argument objects (empty for flat symbols and for "[p]").
  std::vector<std::string> args() const;
  std::size_t arity() const noexcept { return parts_.empty() ? 0 : parts_.size() - 1; }

  friend bool operator==(const Symbol& a, const Symbol& b) noexcept { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::string text_;
  std::vector<std::string> parts_;
};

bool is_identifier(std::string_view s) noexcept;

class EmptyConditionSet : public std::logic_error {
 public:
  EmptyConditionSet() : std::logic_error("empty condition set") {}
};

/// Canonically ordered, duplicate-free set of symbols.
class ConditionSet {
 public:
  ConditionSet() = default;

  const std::vector<Symbol>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Symbol& s) const;
  bool subset_of(const ConditionSet& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// "{a,b,c}"
  std::string text() const;

  friend bool operator==(const ConditionSet&, const ConditionSet&) = default;
  friend auto operator<=>(const ConditionSet& a, const ConditionSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  friend ConditionSet canonicalize(std::vector<Symbol> symbols);
  std::vector<Symbol> members_;
};

ConditionSet canonicalize(std::vector<Symbol> symbols);
ConditionSet canonicalize(std::initializer_list<Symbol> symbols);

/// Shorthand used heavily in tests and fixtures: {"a","b"} -> ConditionSet.
ConditionSet conditions(std::initializer_list<std::string_view> names);

}  // namespace causex

template <>
struct std::hash<causex::Symbol> {
  std::size_t operator()(const causex::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.text());
  }
};
