#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "evident/formula.hpp"

namespace evident {

struct LogicOptions {
  /// Largest number of distinct ground atoms a single problem may mention.
  std::size_t atom_budget = 4096;
};

/// Literal code: 2 * variable for the positive literal, 2 * variable + 1 for
/// the negative one.
using Lit = std::uint32_t;

/// Clause storage in compressed rows, with per-literal occurrence lists.
struct ClauseDb {
  std::vector<Lit> lits;
  std::vector<std::uint32_t> start{0};
  std::vector<std::vector<std::uint32_t>> occurrences;  // indexed by literal

  std::size_t size() const { return start.size() - 1; }
  std::span<const Lit> clause(std::size_t i) const {
    return {lits.data() + start[i], lits.data() + start[i + 1]};
  }
};

/// A ground theory translated once into clauses and simplified by unit
/// propagation, so that many satisfiability questions about the theory plus a
/// few extra sentences can be answered without re-encoding it.
///
/// Immutable after `compile`; every query allocates its own search state, so
/// concurrent queries are safe.
class CompiledTheory {
 public:
  /// Throws BudgetExceeded when the theory mentions more atoms than allowed.
  static std::shared_ptr<const CompiledTheory> compile(std::span<const Formula> sentences,
                                                       const LogicOptions& options = {});

  bool satisfiable() const { return satisfiable_; }
  /// Satisfiability of the theory conjoined with `extra`.
  bool satisfiable_with(std::span<const Formula> extra) const;
  bool consistent_with(const Formula& f) const;
  bool entails(const Formula& goal) const;
  /// theory + {premise} entails goal.
  bool entails_given(const Formula& premise, const Formula& goal) const;

  std::size_t atom_count() const { return atoms_.size(); }
  const LogicOptions& options() const { return options_; }

 private:
  CompiledTheory() = default;

  LogicOptions options_;
  std::unordered_map<Atom, std::uint32_t, AtomHash> atoms_;
  std::uint32_t num_vars_ = 0;
  ClauseDb db_;
  std::vector<std::int8_t> fixed_;  // level-0 values: 1 true, -1 false, 0 open
  std::vector<std::int8_t> model_;  // one satisfying assignment, when satisfiable
  bool root_conflict_ = false;
  bool satisfiable_ = true;
};

}  // namespace evident
