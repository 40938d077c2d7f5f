#pragma once

// Brute-force reference semantics used to check the solver. Nothing here
// shares code with the engine beyond the Formula data type.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "evident/formula.hpp"

namespace oracle {

using evident::Atom;
using evident::Formula;

class TruthTable {
 public:
  explicit TruthTable(std::span<const Formula> sentences) {
    for (const auto& f : sentences)
      for (const auto& a : f.atoms()) index_.emplace(a, index_.size());
    if (index_.size() > 20) throw std::invalid_argument("truth table limited to 20 atoms");
  }

  bool eval(const Formula& f, std::uint32_t row) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kTrue:
        return true;
      case K::kFalse:
        return false;
      case K::kAtom:
        return (row >> index_.at(f.atom_data())) & 1u;
      case K::kNot:
        return !eval(f.operands()[0], row);
      case K::kAnd:
        for (const auto& op : f.operands())
          if (!eval(op, row)) return false;
        return true;
      case K::kOr:
        for (const auto& op : f.operands())
          if (eval(op, row)) return true;
        return false;
      case K::kImplies:
        return !eval(f.operands()[0], row) || eval(f.operands()[1], row);
    }
    return false;
  }

  std::uint32_t rows() const { return 1u << index_.size(); }

 private:
  std::map<Atom, std::size_t> index_;
};

inline bool satisfiable(std::span<const Formula> theory) {
  TruthTable table(theory);
  for (std::uint32_t row = 0; row < table.rows(); ++row) {
    bool all = true;
    for (const auto& f : theory)
      if (!table.eval(f, row)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

inline bool entails(std::span<const Formula> theory, const Formula& goal) {
  std::vector<Formula> all(theory.begin(), theory.end());
  all.push_back(Formula::negation(goal));
  return !satisfiable(all);
}

// Random ground formulas over atoms p(c0) .. p(c{k-1}).
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Formula atom(int atoms) { return Formula::atom("p", {"c" + std::to_string(uniform(0, atoms - 1))}); }

  Formula formula(int atoms, int depth) {
    if (depth == 0 || uniform(0, 3) == 0) {
      const int r = uniform(0, 40);
      if (r == 0) return Formula::truth();
      if (r == 1) return Formula::falsity();
      return atom(atoms);
    }
    switch (uniform(0, 3)) {
      case 0:
        return Formula::negation(formula(atoms, depth - 1));
      case 1:
      case 2: {
        std::vector<Formula> ops;
        const int n = uniform(2, 3);
        for (int i = 0; i < n; ++i) ops.push_back(formula(atoms, depth - 1));
        return uniform(0, 1) ? Formula::conjunction(std::move(ops)) : Formula::disjunction(std::move(ops));
      }
      default:
        return Formula::implication(formula(atoms, depth - 1), formula(atoms, depth - 1));
    }
  }

  // Mostly short clauses, so that random theories sit near the
  // satisfiable/unsatisfiable boundary instead of being trivially one or the other.
  Formula clause(int atoms) {
    std::vector<Formula> lits;
    const int n = uniform(1, 3);
    for (int i = 0; i < n; ++i) {
      Formula a = atom(atoms);
      lits.push_back(uniform(0, 1) ? a : Formula::negation(a));
    }
    return Formula::disjunction(std::move(lits));
  }

  std::vector<Formula> theory(int atoms, int size) {
    std::vector<Formula> out;
    for (int i = 0; i < size; ++i) out.push_back(uniform(0, 2) ? clause(atoms) : formula(atoms, 3));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
