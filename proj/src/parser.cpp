#include "causex/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "json.hpp"

namespace causex {

InputError::InputError(int l, const std::string& what)
    : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + what : what), line(l) {}

namespace {

struct Token {
  enum Kind { ident, punct, end } kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : src_(s) {}

  Token next() {
    skip_blank();
    if (pos_ >= src_.size()) return {Token::end, "", line_};
    const char c = src_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Token::ident, std::string(src_.substr(start, pos_ - start)), line_};
    }
    if (std::string_view("()[]{},.-").find(c) != std::string_view::npos) {
      ++pos_;
      return {Token::punct, std::string(1, c), line_};
    }
    throw InputError(line_, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

// An argument: plain identifier, structured symbol, or {..} set of symbols.
struct Arg {
  Symbol symbol;
  std::string ident;  // set when the argument is a bare identifier
  std::optional<std::vector<Symbol>> set;
};

struct Term {
  std::string name;
  bool negated = false;
  std::vector<Arg> args;
  int line = 0;
};

class StatementReader {
 public:
  explicit StatementReader(std::string_view s) : lex_(s) { advance(); }

  // Next statement as a disjunction of terms; empty at end of input.
  std::vector<Term> statement() {
    while (is("{") || is("}")) advance();
    if (tok_.kind == Token::end) return {};
    std::vector<Term> terms{term()};
    while (tok_.kind == Token::ident && tok_.text == "v") {
      advance();
      terms.push_back(term());
    }
    expect(".");
    return terms;
  }

 private:
  bool is(std::string_view p) const { return tok_.kind == Token::punct && tok_.text == p; }
  void advance() { tok_ = lex_.next(); }
  [[noreturn]] void fail(const std::string& what) const { throw InputError(tok_.line, what); }

  void expect(std::string_view p) {
    if (!is(p)) {
      const std::string got = tok_.kind == Token::end ? "end of input" : "'" + tok_.text + "'";
      fail("expected '" + std::string(p) + "', got " + got);
    }
    advance();
  }

  std::string identifier() {
    if (tok_.kind != Token::ident) fail("expected identifier");
    auto s = tok_.text;
    advance();
    return s;
  }

  Symbol symbol() {
    if (!is("[")) return Symbol(identifier());
    advance();
    std::string pred = identifier();
    std::vector<std::string> args;
    while (is(",")) {
      advance();
      args.push_back(identifier());
    }
    expect("]");
    return Symbol(std::move(pred), std::move(args));
  }

  Arg argument() {
    Arg a;
    if (is("{")) {
      advance();
      a.set.emplace();
      if (!is("}")) {
        a.set->push_back(symbol());
        while (is(",")) {
          advance();
          a.set->push_back(symbol());
        }
      }
      expect("}");
    } else if (is("[")) {
      a.symbol = symbol();
    } else {
      a.ident = identifier();
      a.symbol = Symbol(a.ident);
    }
    return a;
  }

  Term term() {
    Term t;
    t.line = tok_.line;
    if (is("-")) {
      t.negated = true;
      advance();
    }
    t.name = identifier();
    if (is("(")) {
      advance();
      t.args.push_back(argument());
      while (is(",")) {
        advance();
        t.args.push_back(argument());
      }
      expect(")");
    }
    return t;
  }

  Lexer lex_;
  Token tok_{Token::end, "", 1};
};

class Builder {
 public:
  explicit Builder(bool stage_facts) : allow_stage_(stage_facts) {}

  void add(const std::vector<Term>& terms) {
    if (terms.size() == 1) {
      unit(terms.front());
      return;
    }
    std::vector<Literal> lits;
    for (const auto& t : terms) lits.push_back(literal(t));
    if (lits.size() == 2 && lits[0].atom == lits[1].atom && lits[0].positive != lits[1].positive) {
      out_.theory.completion_atoms.insert(lits[0].atom);
      return;
    }
    auto c = Clause::of(std::move(lits));
    if (c.literals.size() == 1) {
      fact(c.literals.front(), terms.front().line);
      return;
    }
    out_.theory.add_clause(std::move(c));
  }

  ParsedInput take() { return std::move(out_); }

 private:
  static void arity(const Term& t, std::size_t n) {
    if (t.args.size() != n)
      throw InputError(t.line, "arity: " + t.name + " expects " + std::to_string(n) +
                                   " argument(s), got " + std::to_string(t.args.size()));
  }

  static Symbol sym(const Term& t, std::size_t i) {
    if (t.args[i].set) throw InputError(t.line, t.name + ": unexpected set argument");
    return t.args[i].symbol;
  }

  static std::string object(const Term& t, std::size_t i) {
    if (t.args[i].ident.empty()) throw InputError(t.line, t.name + ": expected a plain name");
    return t.args[i].ident;
  }

  static Literal literal(const Term& t) {
    if (t.name == "true") {
      arity(t, 1);
      return truth(sym(t, 0), !t.negated);
    }
    if (t.name == "cause") {
      arity(t, 2);
      return causal(sym(t, 0), sym(t, 1), !t.negated);
    }
    throw InputError(t.line, "only true/1 and cause/2 literals may appear in a clause, got '" + t.name + "'");
  }

  void fact(const Literal& l, int line) {
    auto& th = out_.theory;
    const bool clash = th.facts.contains(l.negated()) ||
                       (!l.positive && !l.is_truth() && th.causal.contains(std::get<CausalAtom>(l.atom)));
    if (clash) throw InputError(line, "contradictory unit facts for " + render(l.atom));
    if (l.positive && !l.is_truth()) {
      th.causal.insert(std::get<CausalAtom>(l.atom));
      return;
    }
    th.facts.insert(l);
  }

  void stage(const Term& t, Status status) {
    if (!allow_stage_) throw InputError(t.line, "stage fact '" + t.name + "' in a theory file");
    const bool tagged = status == Status::verified || t.args.size() == 4;
    if (status == Status::verified) arity(t, 4);
    else if (t.args.size() != 4) arity(t, 3);
    const std::size_t o = tagged ? 1 : 0;
    if (!t.args[o + 2].set) throw InputError(t.line, t.name + ": last argument must be a {..} set");

    ExplanationAtom a;
    try {
      a = ExplanationAtom::make(sym(t, o), sym(t, o + 1), canonicalize(*t.args[o + 2].set), status);
    } catch (const std::logic_error& e) {
      throw InputError(t.line, e.what());
    }
    if (tagged) {
      const auto& w = t.args[0].ident;
      int idx = 0;
      auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), idx);
      if (w.empty() || ec != std::errc() || p != w.data() + w.size() || idx < 1)
        throw InputError(t.line, t.name + ": world index must be a positive integer");
      a.world_index = idx;
    }
    auto& dst = status == Status::generated ? out_.stage.generated
                : status == Status::optimal ? out_.stage.optimal
                                            : out_.stage.verified;
    dst.push_back(std::move(a));
  }

  void unit(const Term& t) {
    auto& th = out_.theory;
    auto& k = th.kinds;
    const auto& n = t.name;
    if (t.negated && n != "true" && n != "cause")
      throw InputError(t.line, "negation is only allowed on true/1 and cause/2");

    if (n == "true" || n == "cause") {
      fact(literal(t), t.line);
    } else if (n == "symbol") {
      arity(t, 1);
      th.declared_symbols.insert(sym(t, 0));
    } else if (n == "ont") {
      arity(t, 2);
      th.ontology.insert({sym(t, 0), sym(t, 1)});
    } else if (n == "ont_object") {
      arity(t, 2);
      ObjectOntAtom o{object(t, 0), object(t, 1)};
      if (std::find(k.objects.begin(), k.objects.end(), o) == k.objects.end()) k.objects.push_back(o);
    } else if (n == "onekind" || n == "allkind" || n == "all_onekind" || n == "propkind" || n == "restr") {
      arity(t, 1);
      auto& dst = n == "onekind" ? k.onekind
                  : n == "allkind" ? k.allkind
                  : n == "all_onekind" ? k.all_onekind
                  : n == "propkind" ? k.propkind
                                    : k.restricted;
      dst.insert(object(t, 0));
    } else if (n == "kindPar") {
      if (t.args.size() != 2) arity(t, 3);
      k.kind_par.insert({object(t, 0), object(t, 1), t.args.size() == 3 ? object(t, 2) : ""});
    } else if (n == "ecSet") {
      stage(t, Status::generated);
    } else if (n == "ecSetRes") {
      stage(t, Status::optimal);
    } else if (n == "explVer") {
      stage(t, Status::verified);
    } else if ((n == "brave" || n == "cautious") && allow_stage_) {
      // Derived summary; recomputed from explVer.
    } else {
      throw InputError(t.line, "unknown fact '" + n + "/" + std::to_string(t.args.size()) + "'");
    }
  }

  bool allow_stage_;
  ParsedInput out_;
};

ParsedInput parse_text(std::string_view text, bool stage_facts) {
  StatementReader reader(text);
  Builder b(stage_facts);
  for (auto terms = reader.statement(); !terms.empty(); terms = reader.statement()) b.add(terms);
  return b.take();
}

ParsedInput parse_json(std::string_view text) {
  std::string joined;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const char* key : {"theory", "stage"})
      if (j.contains(key))
        for (const auto& line : j.at(key)) joined += line.get<std::string>() + "\n";
  } catch (const nlohmann::json::exception& e) {
    throw InputError(0, std::string("malformed JSON report: ") + e.what());
  }
  return parse_text(joined, true);
}

}  // namespace

Theory parse_theory(std::string_view text) { return parse_text(text, false).theory; }

ParsedInput parse_input(std::string_view text) {
  // JSON reports open with '{' followed by a quoted key; fact files never do.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    const auto second = text.find_first_not_of(" \t\r\n", first + 1);
    if (second != std::string_view::npos && text[second] == '"') return parse_json(text);
  }
  return parse_text(text, true);
}

}  // namespace causex
