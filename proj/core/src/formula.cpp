#include "evident/formula.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "evident/error.hpp"

namespace evident {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string Atom::to_string() const {
  if (args.empty()) return predicate;
  std::string out = predicate;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += args[i];
  }
  out += ')';
  return out;
}

std::size_t AtomHash::operator()(const Atom& atom) const {
  std::size_t h = std::hash<std::string>{}(atom.predicate);
  for (const auto& arg : atom.args) h = mix(h, std::hash<std::string>{}(arg));
  return h;
}

struct Formula::Node {
  Kind kind;
  Atom atom;
  std::vector<Formula> operands;
  std::size_t hash;

  Node(Kind k, Atom a, std::vector<Formula> ops)
      : kind(k), atom(std::move(a)), operands(std::move(ops)) {
    std::size_t h = static_cast<std::size_t>(kind) * 0x51ed27;
    if (kind == Kind::kAtom) h = mix(h, AtomHash{}(atom));
    for (const auto& op : operands) h = mix(h, op.hash());
    hash = h;
  }
};

Formula::Formula() : node_(std::make_shared<const Node>(Kind::kTrue, Atom{}, std::vector<Formula>{})) {}

Formula Formula::truth() { return Formula(); }

Formula Formula::falsity() {
  return Formula(std::make_shared<const Node>(Kind::kFalse, Atom{}, std::vector<Formula>{}));
}

Formula Formula::atom(Atom a) {
  if (a.predicate.empty()) throw InvalidArgument("atom with empty predicate name");
  return Formula(std::make_shared<const Node>(Kind::kAtom, std::move(a), std::vector<Formula>{}));
}

Formula Formula::atom(std::string predicate, std::vector<std::string> args) {
  return atom(Atom{std::move(predicate), std::move(args)});
}

Formula Formula::negation(Formula operand) {
  std::vector<Formula> ops;
  ops.push_back(std::move(operand));
  return Formula(std::make_shared<const Node>(Kind::kNot, Atom{}, std::move(ops)));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) return truth();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula(std::make_shared<const Node>(Kind::kAnd, Atom{}, std::move(operands)));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) return falsity();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula(std::make_shared<const Node>(Kind::kOr, Atom{}, std::move(operands)));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  std::vector<Formula> ops;
  ops.push_back(std::move(antecedent));
  ops.push_back(std::move(consequent));
  return Formula(std::make_shared<const Node>(Kind::kImplies, Atom{}, std::move(ops)));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_literal() const {
  return kind() == Kind::kAtom || (kind() == Kind::kNot && operands()[0].is_atom());
}

const Atom& Formula::atom_data() const {
  assert(kind() == Kind::kAtom);
  return node_->atom;
}

std::span<const Formula> Formula::operands() const { return node_->operands; }

std::size_t Formula::hash() const { return node_->hash; }

Formula Formula::substitute(std::string_view variable, std::string_view constant) const {
  switch (kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
      return *this;
    case Kind::kAtom: {
      const Atom& a = atom_data();
      if (std::find(a.args.begin(), a.args.end(), variable) == a.args.end()) return *this;
      Atom out = a;
      for (auto& arg : out.args)
        if (arg == variable) arg = std::string(constant);
      return atom(std::move(out));
    }
    default: {
      std::vector<Formula> ops;
      ops.reserve(operands().size());
      bool changed = false;
      for (const auto& op : operands()) {
        ops.push_back(op.substitute(variable, constant));
        changed = changed || ops.back().node_ != op.node_;
      }
      if (!changed) return *this;
      return Formula(std::make_shared<const Node>(kind(), Atom{}, std::move(ops)));
    }
  }
}

void Formula::for_each_atom(const std::function<void(const Atom&)>& visit) const {
  if (kind() == Kind::kAtom) {
    visit(atom_data());
    return;
  }
  for (const auto& op : operands()) op.for_each_atom(visit);
}

std::vector<Atom> Formula::atoms() const {
  std::vector<Atom> out;
  std::unordered_set<Atom, AtomHash> seen;
  for_each_atom([&](const Atom& a) {
    if (seen.insert(a).second) out.push_back(a);
  });
  return out;
}

bool Formula::mentions(std::string_view name) const {
  bool found = false;
  for_each_atom([&](const Atom& a) {
    if (!found && std::find(a.args.begin(), a.args.end(), name) != a.args.end()) found = true;
  });
  return found;
}

Formula Formula::without_implications() const {
  switch (kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
    case Kind::kAtom:
      return *this;
    case Kind::kImplies:
      return disjunction({negation(operands()[0].without_implications()),
                          operands()[1].without_implications()});
    default: {
      std::vector<Formula> ops;
      for (const auto& op : operands()) ops.push_back(op.without_implications());
      return Formula(std::make_shared<const Node>(kind(), Atom{}, std::move(ops)));
    }
  }
}

namespace {

// Binding strength used when printing: higher binds tighter.
int strength(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kImplies:
      return 0;
    case Formula::Kind::kOr:
      return 1;
    case Formula::Kind::kAnd:
      return 2;
    default:
      return 3;
  }
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& op, int parent_strength, std::string& out) {
  // Same-strength binary operands are parenthesized so that the printed text
  // re-parses to the same tree.
  if (strength(op.kind()) <= parent_strength) {
    out += '(';
    print(op, out);
    out += ')';
  } else {
    print(op, out);
  }
}

void print(const Formula& f, std::string& out) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
      out += "true";
      return;
    case Kind::kFalse:
      out += "false";
      return;
    case Kind::kAtom:
      out += f.atom_data().to_string();
      return;
    case Kind::kNot:
      out += '~';
      print_operand(f.operands()[0], 2, out);
      return;
    case Kind::kAnd:
    case Kind::kOr: {
      const char* sep = f.kind() == Kind::kAnd ? " & " : " v ";
      bool first = true;
      for (const auto& op : f.operands()) {
        if (!first) out += sep;
        first = false;
        print_operand(op, strength(f.kind()), out);
      }
      return;
    }
    case Kind::kImplies:
      print_operand(f.operands()[0], 0, out);
      out += " -> ";
      print_operand(f.operands()[1], 0, out);
      return;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.hash() != rhs.hash() || lhs.kind() != rhs.kind()) return false;
  if (lhs.kind() == Formula::Kind::kAtom) return lhs.atom_data() == rhs.atom_data();
  auto a = lhs.operands();
  auto b = rhs.operands();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::strong_ordering operator<=>(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return std::strong_ordering::equal;
  if (auto c = lhs.kind() <=> rhs.kind(); c != 0) return c;
  if (lhs.kind() == Formula::Kind::kAtom) return lhs.atom_data() <=> rhs.atom_data();
  auto a = lhs.operands();
  auto b = rhs.operands();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Formula normalize(const Formula& f) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
    case Kind::kAtom:
      return f;
    case Kind::kNot: {
      const Formula& inner = f.operands()[0];
      if (inner.kind() == Kind::kNot) return normalize(inner.operands()[0]);
      return Formula::negation(normalize(inner));
    }
    case Kind::kImplies:
      return Formula::implication(normalize(f.operands()[0]), normalize(f.operands()[1]));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> flat;
      for (const auto& op : f.operands()) {
        Formula n = normalize(op);
        if (n.kind() == f.kind()) {
          flat.insert(flat.end(), n.operands().begin(), n.operands().end());
        } else {
          flat.push_back(std::move(n));
        }
      }
      std::sort(flat.begin(), flat.end());
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      return f.kind() == Kind::kAnd ? Formula::conjunction(std::move(flat))
                                    : Formula::disjunction(std::move(flat));
    }
  }
  return f;
}

bool same_sentence(const Formula& lhs, const Formula& rhs) {
  return lhs == rhs || normalize(lhs) == normalize(rhs);
}

std::string UniversalRule::to_string() const {
  return "all " + variable + ": " + antecedent.to_string() + " -> " + consequent.to_string();
}

}  // namespace evident
