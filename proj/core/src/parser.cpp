#include "evident/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "evident/error.hpp"

namespace evident {

namespace {

enum class Tok { kIdent, kNumber, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (digit(c) || (c == '.' && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && digit(text[j])) ++j;
      if (j < text.size() && text[j] == '.' && j + 1 < text.size() && digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && digit(text[k])) {
          j = k;
          while (j < text.size() && digit(text[j])) ++j;
        }
      }
      out.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::kPunct, "->", tl, tc});
      advance(2);
      continue;
    }
    static constexpr std::string_view kSingle = ".,:/|()[]~&";
    if (kSingle.find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  // Programs extend `signature`; lone formulas and items only read it.
  explicit Parser(std::string_view text, Signature* signature)
      : tokens_(tokenize(text)), sig_(signature), mutable_sig_(signature), implicit_preds_(true) {}
  Parser(std::string_view text, const Signature& signature)
      : tokens_(tokenize(text)), sig_(&signature), mutable_sig_(nullptr), implicit_preds_(false) {}

  KnowledgeBase program() {
    KnowledgeBase kb;
    // Predicates are declared implicitly unless the program declares any.
    for (const auto& t : tokens_)
      if (t.kind == Tok::kIdent && t.text == "pred") implicit_preds_ = false;
    while (!at_end()) declaration(kb);
    kb.signature = *sig_;
    return kb;
  }

  Formula lone_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  EvidenceItem lone_item() {
    const Token& t = peek();
    if (!is_ident(t, "fact") && !is_ident(t, "rule") && !is_ident(t, "stat")) {
      fail(t, "expected 'fact', 'rule' or 'stat'");
    }
    KnowledgeBase scratch;
    declaration(scratch);
    expect_end();
    if (!scratch.stats.empty()) return scratch.stats.front();
    return std::visit([](auto&& v) -> EvidenceItem { return v; }, scratch.certain.front());
  }

 private:
  static bool is_ident(const Token& t, std::string_view s) { return t.kind == Tok::kIdent && t.text == s; }
  static bool is_punct(const Token& t, std::string_view s) { return t.kind == Tok::kPunct && t.text == s; }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::kEnd; }

  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(message, t.line, t.column);
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
  }

  void expect_punct(std::string_view p) {
    const Token& t = next();
    if (!is_punct(t, p)) fail(t, "expected '" + std::string(p) + "' but found " + describe(t));
  }
  void expect_keyword(std::string_view k) {
    const Token& t = next();
    if (!is_ident(t, k)) fail(t, "expected '" + std::string(k) + "' but found " + describe(t));
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected " + describe(peek()));
  }

  std::string identifier(std::string_view what) {
    const Token& t = next();
    if (t.kind != Tok::kIdent) fail(t, "expected " + std::string(what) + " but found " + describe(t));
    if (t.text == "v" || t.text == "true" || t.text == "false")
      fail(t, "'" + t.text + "' is reserved and cannot name a " + std::string(what));
    return t.text;
  }

  double number() {
    const Token& t = next();
    if (t.kind != Tok::kNumber) fail(t, "expected a number but found " + describe(t));
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail(t, "malformed number '" + t.text + "'");
    return value;
  }

  std::size_t natural() {
    const Token& t = next();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (t.kind != Tok::kNumber || ec != std::errc() || ptr != t.text.data() + t.text.size())
      fail(t, "expected an arity but found " + describe(t));
    return value;
  }

  void declaration(KnowledgeBase& kb) {
    const Token& head = next();
    if (is_ident(head, "const")) {
      do {
        const Token& at = peek();
        std::string name = identifier("constant");
        if (sig_->has_constant(name)) fail(at, "constant '" + name + "' declared twice");
        if (!mutable_sig_) fail(at, "declarations are not allowed here");
        mutable_sig_->declare_constant(name);
      } while (accept_punct(","));
      expect_punct(".");
    } else if (is_ident(head, "pred")) {
      const Token& at = peek();
      std::string name = identifier("predicate");
      expect_punct("/");
      std::size_t arity = natural();
      if (auto existing = sig_->arity(name); existing && *existing != arity)
        fail(at, "predicate '" + name + "' redeclared with a different arity");
      if (!mutable_sig_) fail(at, "declarations are not allowed here");
      mutable_sig_->declare_predicate(name, arity);
      expect_punct(".");
    } else if (is_ident(head, "fact")) {
      Formula f = formula();
      expect_punct(".");
      kb.certain.emplace_back(std::move(f));
    } else if (is_ident(head, "rule")) {
      expect_keyword("all");
      std::string var = bind_variable();
      expect_punct(":");
      const Token& ante_tok = peek();
      Formula antecedent = formula();
      expect_punct("->");
      const Token& cons_tok = peek();
      Formula consequent = formula();
      variable_.reset();
      expect_punct(".");
      if (!antecedent.mentions(var)) fail(ante_tok, "rule antecedent does not mention variable '" + var + "'");
      if (!consequent.mentions(var)) fail(cons_tok, "rule consequent does not mention variable '" + var + "'");
      kb.certain.emplace_back(UniversalRule{var, std::move(antecedent), std::move(consequent)});
    } else if (is_ident(head, "stat")) {
      std::string var = bind_variable();
      expect_punct(":");
      const Token& target_tok = peek();
      Formula target = formula();
      expect_punct("|");
      const Token& ref_tok = peek();
      Formula reference = formula();
      variable_.reset();
      expect_keyword("in");
      const Token& bracket = peek();
      expect_punct("[");
      double lower = number();
      expect_punct(",");
      double upper = number();
      expect_punct("]");
      expect_punct(".");
      if (!target.mentions(var)) fail(target_tok, "statistic target does not mention variable '" + var + "'");
      if (!reference.mentions(var)) fail(ref_tok, "statistic reference does not mention variable '" + var + "'");
      if (!(lower >= 0.0 && upper <= 1.0)) fail(bracket, "interval endpoints must lie in [0, 1]");
      if (lower > upper) fail(bracket, "interval lower bound exceeds upper bound");
      kb.stats.push_back({var, std::move(target), std::move(reference), ProbabilityInterval(lower, upper)});
    } else if (is_ident(head, "default")) {
      std::optional<Formula> prerequisite;
      if (!is_punct(peek(), ":")) prerequisite = formula();
      expect_punct(":");
      std::vector<Formula> justifications;
      do {
        expect_keyword("M");
        justifications.push_back(formula());
      } while (accept_punct(","));
      expect_punct("/");
      Formula consequent = formula();
      expect_punct(".");
      kb.defaults.push_back({std::move(prerequisite), std::move(justifications), std::move(consequent)});
    } else {
      fail(head, "expected a declaration (const, pred, fact, rule, stat, default) but found " + describe(head));
    }
  }

  std::string bind_variable() {
    const Token& at = peek();
    std::string var = identifier("variable");
    if (sig_->has_constant(var)) fail(at, "variable '" + var + "' shadows a declared constant");
    variable_ = var;
    return var;
  }

  bool accept_punct(std::string_view p) {
    if (is_punct(peek(), p)) {
      next();
      return true;
    }
    return false;
  }

  // formula := conj ("v" conj)*
  Formula formula() {
    std::vector<Formula> parts{conjunction()};
    while (is_ident(peek(), "v")) {
      next();
      parts.push_back(conjunction());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (is_punct(peek(), "&")) {
      next();
      parts.push_back(unary());
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula unary() {
    const Token& t = peek();
    if (is_punct(t, "~")) {
      next();
      return Formula::negation(unary());
    }
    if (is_punct(t, "(")) {
      next();
      Formula inner = formula();
      expect_punct(")");
      return inner;
    }
    if (is_ident(t, "true")) {
      next();
      return Formula::truth();
    }
    if (is_ident(t, "false")) {
      next();
      return Formula::falsity();
    }
    return atom();
  }

  Formula atom() {
    const Token& at = peek();
    std::string predicate = identifier("predicate");
    std::vector<std::string> args;
    std::vector<const Token*> arg_tokens;
    if (accept_punct("(")) {
      do {
        arg_tokens.push_back(&peek());
        args.push_back(identifier("argument"));
      } while (accept_punct(","));
      expect_punct(")");
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (variable_ && args[i] == *variable_) continue;
      if (!sig_->has_constant(args[i])) fail(*arg_tokens[i], "undeclared constant '" + args[i] + "'");
    }
    if (auto arity = sig_->arity(predicate)) {
      if (*arity != args.size())
        fail(at, "predicate '" + predicate + "' has arity " + std::to_string(*arity) + " but is used with " +
                     std::to_string(args.size()) + " argument(s)");
    } else if (implicit_preds_ && mutable_sig_) {
      mutable_sig_->declare_predicate(predicate, args.size());
    } else {
      fail(at, "undeclared predicate '" + predicate + "'");
    }
    return Formula::atom(std::move(predicate), std::move(args));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
  Signature* mutable_sig_;
  bool implicit_preds_;
  std::optional<std::string> variable_;
};

}  // namespace

KnowledgeBase parse_program(std::string_view text) {
  Signature signature;
  Parser parser(text, &signature);
  return parser.program();
}

Formula parse_formula(std::string_view text, const Signature& signature) {
  Parser parser(text, signature);
  return parser.lone_formula();
}

EvidenceItem parse_item(std::string_view text, const Signature& signature) {
  Parser parser(text, signature);
  return parser.lone_item();
}

}  // namespace evident
