#include "causex/symbol.hpp"

#include <algorithm>
#include <cctype>

namespace causex {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Symbol::Symbol(std::string name) : text_(std::move(name)) {
  if (!is_identifier(text_)) throw std::invalid_argument("invalid symbol name '" + text_ + "'");
}

Symbol::Symbol(std::string predicate, std::vector<std::string> args) {
  parts_.reserve(args.size() + 1);
  parts_.push_back(std::move(predicate));
  for (auto& a : args) parts_.push_back(std::move(a));
  text_ = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!is_identifier(parts_[i]))
      throw std::invalid_argument("invalid structured symbol component '" + parts_[i] + "'");
    if (i) text_ += ',';
    text_ += parts_[i];
  }
  text_ += ']';
}

Symbol Symbol::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    std::vector<std::string> items;
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
      auto comma = body.find(',');
      items.emplace_back(trim(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    std::string pred = std::move(items.front());
    items.erase(items.begin());
    return Symbol(std::move(pred), std::move(items));
  }
  return Symbol(std::string(text));
}

std::string_view Symbol::predicate() const noexcept {
  return parts_.empty() ? std::string_view(text_) : std::string_view(parts_.front());
}

std::vector<std::string> Symbol::args() const {
  if (parts_.size() <= 1) return {};
  return {parts_.begin() + 1, parts_.end()};
}

bool ConditionSet::contains(const Symbol& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool ConditionSet::subset_of(const ConditionSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::string ConditionSet::text() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += members_[i].text();
  }
  return out + "}";
}

ConditionSet canonicalize(std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  ConditionSet out;
  out.members_ = std::move(symbols);
  return out;
}

ConditionSet canonicalize(std::initializer_list<Symbol> symbols) {
  return canonicalize(std::vector<Symbol>(symbols));
}

ConditionSet conditions(std::initializer_list<std::string_view> names) {
  std::vector<Symbol> v;
  for (auto n : names) v.push_back(Symbol::parse(n));
  return canonicalize(std::move(v));
}

}  // namespace causex
