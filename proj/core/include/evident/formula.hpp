#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evident {

/// A predicate applied to constants (or, inside rules and statistics, to the
/// single bound variable).
struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  std::size_t arity() const { return args.size(); }
  std::string to_string() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct AtomHash {
  std::size_t operator()(const Atom& atom) const;
};

/// Immutable propositional formula over ground (or single-variable) atoms.
///
/// Nodes are shared, so copies are cheap. Equality and ordering are
/// structural; `normalize` gives the canonical form used for syntactic
/// matching.
class Formula {
 public:
  enum class Kind : std::uint8_t { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies };

  Formula();  // the constant true

  static Formula truth();
  static Formula falsity();
  static Formula atom(Atom atom);
  static Formula atom(std::string predicate, std::vector<std::string> args);
  static Formula negation(Formula operand);
  /// Empty conjunction is true; a single conjunct is returned unchanged.
  static Formula conjunction(std::vector<Formula> operands);
  /// Empty disjunction is false; a single disjunct is returned unchanged.
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implication(Formula antecedent, Formula consequent);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  /// An atom or a negated atom.
  bool is_literal() const;
  const Atom& atom_data() const;
  std::span<const Formula> operands() const;

  std::size_t hash() const;

  /// Replace every argument equal to `variable` by `constant`.
  Formula substitute(std::string_view variable, std::string_view constant) const;

  /// Calls `visit` on each atom occurrence, left to right.
  void for_each_atom(const std::function<void(const Atom&)>& visit) const;
  /// Distinct atoms in order of first occurrence.
  std::vector<Atom> atoms() const;
  /// True if some atom has `name` as an argument.
  bool mentions(std::string_view name) const;

  /// Rewrite `a -> b` as `~a v b` everywhere.
  Formula without_implications() const;

  std::string to_string() const;

  friend bool operator==(const Formula& lhs, const Formula& rhs);
  friend std::strong_ordering operator<=>(const Formula& lhs, const Formula& rhs);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Canonical form for syntactic matching: double negations removed, nested
/// conjunctions/disjunctions flattened, operands sorted and deduplicated.
Formula normalize(const Formula& f);

/// Equality up to `normalize`.
bool same_sentence(const Formula& lhs, const Formula& rhs);

/// A formula with one free variable, e.g. the reference class `bird(x)`.
struct OpenFormula {
  std::string variable;
  Formula body;

  Formula instantiate(std::string_view constant) const {
    return body.substitute(variable, constant);
  }
  std::string to_string() const { return body.to_string(); }

  friend bool operator==(const OpenFormula&, const OpenFormula&) = default;
};

/// `all x: antecedent -> consequent`, grounded eagerly over declared constants.
struct UniversalRule {
  std::string variable;
  Formula antecedent;
  Formula consequent;

  Formula ground(std::string_view constant) const {
    return Formula::implication(antecedent.substitute(variable, constant),
                                consequent.substitute(variable, constant));
  }
  std::string to_string() const;

  friend bool operator==(const UniversalRule&, const UniversalRule&) = default;
};

/// A finite list of ground sentences.
using Theory = std::vector<Formula>;

}  // namespace evident
