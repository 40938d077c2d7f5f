#include "evident/sat.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "evident/error.hpp"

namespace evident {

namespace {

constexpr Lit positive(std::uint32_t var) { return var << 1; }
constexpr Lit negate(Lit l) { return l ^ 1U; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr bool is_negative(Lit l) { return (l & 1U) != 0; }

using Clause = std::vector<Lit>;

// Clausal translation. Conjunctions nested under a disjunction are named by a
// fresh variable implied true only in the positive direction, which preserves
// satisfiability without exponential blow-up.
class Encoder {
 public:
  Encoder(std::function<std::uint32_t(const Atom&)> var_for, std::function<std::uint32_t()> fresh)
      : var_for_(std::move(var_for)), fresh_(std::move(fresh)) {}

  void add(const Formula& f, bool pos, std::vector<Clause>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kTrue:
        if (!pos) out.emplace_back();
        return;
      case K::kFalse:
        if (pos) out.emplace_back();
        return;
      case K::kNot:
        add(f.operands()[0], !pos, out);
        return;
      default:
        break;
    }
    if (conjunctive(f, pos)) {
      if (f.kind() == K::kImplies) {
        add(f.operands()[0], true, out);
        add(f.operands()[1], false, out);
      } else {
        for (const auto& op : f.operands()) add(op, pos, out);
      }
      return;
    }
    Clause clause;
    if (disjuncts(f, pos, clause, out) && tidy(clause)) out.push_back(std::move(clause));
  }

 private:
  static bool conjunctive(const Formula& f, bool pos) {
    using K = Formula::Kind;
    return (f.kind() == K::kAnd && pos) || (f.kind() == K::kOr && !pos) || (f.kind() == K::kImplies && !pos);
  }

  // Appends literals whose disjunction stands for f (with polarity). Returns
  // false if the disjunction is trivially true.
  bool disjuncts(const Formula& f, bool pos, Clause& clause, std::vector<Clause>& out) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kTrue:
        return !pos;
      case K::kFalse:
        return pos;
      case K::kAtom: {
        Lit l = positive(var_for_(f.atom_data()));
        clause.push_back(pos ? l : negate(l));
        return true;
      }
      case K::kNot:
        return disjuncts(f.operands()[0], !pos, clause, out);
      default:
        break;
    }
    if (!conjunctive(f, pos)) {
      if (f.kind() == K::kImplies) {
        return disjuncts(f.operands()[0], false, clause, out) && disjuncts(f.operands()[1], true, clause, out);
      }
      for (const auto& op : f.operands())
        if (!disjuncts(op, pos, clause, out)) return false;
      return true;
    }
    Lit name = positive(fresh_());
    std::vector<std::pair<const Formula*, bool>> parts;
    if (f.kind() == K::kImplies) {
      parts = {{&f.operands()[0], true}, {&f.operands()[1], false}};
    } else {
      for (const auto& op : f.operands()) parts.emplace_back(&op, pos);
    }
    for (const auto& [part, part_pos] : parts) {
      Clause sub{negate(name)};
      if (disjuncts(*part, part_pos, sub, out) && tidy(sub)) out.push_back(std::move(sub));
    }
    clause.push_back(name);
    return true;
  }

  // Sorts and deduplicates; false for tautologies.
  static bool tidy(Clause& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == negate(c[i - 1])) return false;
    return true;
  }

  std::function<std::uint32_t(const Atom&)> var_for_;
  std::function<std::uint32_t()> fresh_;
};

void append_clause(ClauseDb& db, const Clause& c) {
  db.lits.insert(db.lits.end(), c.begin(), c.end());
  db.start.push_back(static_cast<std::uint32_t>(db.lits.size()));
}

void index_occurrences(ClauseDb& db, std::uint32_t num_vars) {
  db.occurrences.assign(2 * static_cast<std::size_t>(num_vars), {});
  for (std::uint32_t c = 0; c < db.size(); ++c)
    for (Lit l : db.clause(c)) db.occurrences[l].push_back(c);
}

// Chronological DPLL with counter-based unit propagation over a shared base
// clause database plus clauses local to one query.
class Search {
 public:
  Search(const ClauseDb& base, std::span<const std::int8_t> fixed, std::uint32_t total_vars,
         std::vector<Clause> local, bool scan_base_units)
      : base_(base), local_(std::move(local)) {
    value_.assign(total_vars, 0);
    std::copy(fixed.begin(), fixed.end(), value_.begin());
    const std::size_t n = base_.size() + local_.size();
    true_count_.assign(n, 0);
    false_count_.assign(n, 0);
    unsatisfied_ = n;
    // Base clauses carry no literal fixed by `fixed`; only short ones matter,
    // and a simplified base has none.
    if (scan_base_units) {
      for (std::uint32_t id = 0; id < base_.size(); ++id) {
        const std::size_t size = base_.clause(id).size();
        if (size == 0) conflict_ = true;
        else if (size == 1) pending_.push_back(id);
      }
    }
    for (std::uint32_t i = 0; i < local_.size(); ++i) {
      const auto id = static_cast<std::uint32_t>(base_.size() + i);
      for (Lit l : local_[i]) {
        local_occ_[l].push_back(id);
        if (l >= has_local_.size()) has_local_.resize(l + 1, false);
        has_local_[l] = true;
        if (value_[var_of(l)] == 0) continue;
        if (holds(l)) {
          if (true_count_[id]++ == 0) --unsatisfied_;
        } else {
          ++false_count_[id];
        }
      }
      if (true_count_[id] == 0) {
        if (false_count_[id] == local_[i].size()) conflict_ = true;
        else if (false_count_[id] + 1 == local_[i].size()) pending_.push_back(id);
      }
    }
  }

  bool solve() {
    if (conflict_ || !propagate()) return false;
    std::size_t hint = 0;
    while (true) {
      if (unsatisfied_ == 0) return true;
      while (hint < clause_count() && true_count_[hint] > 0) ++hint;
      // Every clause is either satisfied or has an open literal here.
      Lit choice = 0;
      for (Lit l : clause(hint)) {
        if (value_[var_of(l)] == 0) {
          choice = l;
          break;
        }
      }
      decisions_.push_back({trail_.size(), choice, false, hint});
      assign(choice);
      while (!propagate()) {
        if (!backtrack()) return false;
      }
      hint = decisions_.empty() ? 0 : decisions_.back().hint;
    }
  }

 private:
  struct Decision {
    std::size_t trail_mark;
    Lit lit;
    bool flipped;
    std::size_t hint;
  };

  std::size_t clause_count() const { return true_count_.size(); }

  std::span<const Lit> clause(std::size_t id) const {
    if (id < base_.size()) return base_.clause(id);
    return local_[id - base_.size()];
  }

  bool holds(Lit l) const {
    std::int8_t v = value_[var_of(l)];
    return is_negative(l) ? v < 0 : v > 0;
  }

  template <typename Fn>
  void for_occurrences(Lit l, Fn&& fn) const {
    if (var_of(l) * 2 + 1 < base_.occurrences.size())
      for (std::uint32_t id : base_.occurrences[l]) fn(id);
    if (l < has_local_.size() && has_local_[l])
      for (std::uint32_t id : local_occ_.find(l)->second) fn(id);
  }

  void assign(Lit l) {
    value_[var_of(l)] = is_negative(l) ? -1 : 1;
    trail_.push_back(l);
    for_occurrences(l, [&](std::uint32_t id) {
      if (true_count_[id]++ == 0) --unsatisfied_;
    });
    for_occurrences(negate(l), [&](std::uint32_t id) {
      const std::uint32_t f = ++false_count_[id];
      if (true_count_[id] != 0) return;
      const std::size_t size = clause(id).size();
      if (f == size) conflict_ = true;
      else if (f + 1 == size) pending_.push_back(id);
    });
  }

  void unassign_to(std::size_t mark) {
    while (trail_.size() > mark) {
      Lit l = trail_.back();
      trail_.pop_back();
      for_occurrences(l, [&](std::uint32_t id) {
        if (--true_count_[id] == 0) ++unsatisfied_;
      });
      for_occurrences(negate(l), [&](std::uint32_t id) { --false_count_[id]; });
      value_[var_of(l)] = 0;
    }
  }

  bool propagate() {
    while (!conflict_ && !pending_.empty()) {
      std::uint32_t id = pending_.back();
      pending_.pop_back();
      if (true_count_[id] != 0) continue;
      std::optional<Lit> open;
      for (Lit l : clause(id)) {
        if (value_[var_of(l)] == 0) {
          open = l;
          break;
        }
      }
      if (!open) {
        conflict_ = true;
        break;
      }
      assign(*open);
    }
    pending_.clear();
    if (conflict_) return false;
    return true;
  }

  bool backtrack() {
    while (!decisions_.empty()) {
      Decision& top = decisions_.back();
      unassign_to(top.trail_mark);
      conflict_ = false;
      pending_.clear();
      if (!top.flipped) {
        top.flipped = true;
        assign(negate(top.lit));
        return true;
      }
      decisions_.pop_back();
    }
    return false;
  }

  const ClauseDb& base_;
  std::vector<Clause> local_;
  std::unordered_map<Lit, std::vector<std::uint32_t>> local_occ_;
  std::vector<bool> has_local_;
  std::vector<std::int8_t> value_;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::uint32_t> false_count_;
  std::size_t unsatisfied_ = 0;
  std::vector<Lit> trail_;
  std::vector<std::uint32_t> pending_;
  std::vector<Decision> decisions_;
  bool conflict_ = false;

 public:
  const std::vector<std::int8_t>& values() const { return value_; }

  // Values after a root-level propagation pass; used while compiling.
  std::optional<std::vector<std::int8_t>> root_values() {
    if (conflict_ || !propagate()) return std::nullopt;
    return value_;
  }
};

}  // namespace

std::shared_ptr<const CompiledTheory> CompiledTheory::compile(std::span<const Formula> sentences,
                                                              const LogicOptions& options) {
  auto theory = std::shared_ptr<CompiledTheory>(new CompiledTheory());
  theory->options_ = options;
  auto& atoms = theory->atoms_;
  std::uint32_t next_var = 0;
  std::vector<bool> is_aux;
  Encoder encoder(
      [&](const Atom& a) {
        auto [it, inserted] = atoms.try_emplace(a, next_var);
        if (inserted) {
          if (atoms.size() > options.atom_budget) {
            throw BudgetExceeded("problem mentions more than " + std::to_string(options.atom_budget) +
                                 " ground atoms");
          }
          ++next_var;
        }
        return it->second;
      },
      [&] { return next_var++; });
  std::vector<Clause> clauses;
  for (const auto& s : sentences) encoder.add(s, true, clauses);
  theory->num_vars_ = next_var;

  ClauseDb raw;
  for (const auto& c : clauses) append_clause(raw, c);
  index_occurrences(raw, next_var);

  std::vector<std::int8_t> none(next_var, 0);
  auto values = Search(raw, none, next_var, {}, true).root_values();
  if (!values) {
    theory->root_conflict_ = true;
    theory->satisfiable_ = false;
    theory->fixed_.assign(next_var, 0);
    index_occurrences(theory->db_, next_var);
    return theory;
  }

  // Keep only clauses not already satisfied, without their false literals.
  theory->fixed_ = *values;
  for (const auto& c : clauses) {
    Clause kept;
    bool satisfied = false;
    for (Lit l : c) {
      std::int8_t v = theory->fixed_[var_of(l)];
      if (v == 0) kept.push_back(l);
      else if ((v > 0) != is_negative(l)) satisfied = true;
    }
    if (satisfied) continue;
    append_clause(theory->db_, kept);
  }
  index_occurrences(theory->db_, next_var);
  Search search(theory->db_, theory->fixed_, next_var, {}, false);
  theory->satisfiable_ = search.solve();
  if (theory->satisfiable_) theory->model_ = search.values();
  return theory;
}

bool CompiledTheory::satisfiable_with(std::span<const Formula> extra) const {
  if (root_conflict_) return false;
  std::unordered_map<Atom, std::uint32_t, AtomHash> fresh_atoms;
  std::uint32_t next_var = num_vars_;
  Encoder encoder(
      [&](const Atom& a) -> std::uint32_t {
        if (auto it = atoms_.find(a); it != atoms_.end()) return it->second;
        auto [it, inserted] = fresh_atoms.try_emplace(a, next_var);
        if (inserted) {
          if (atoms_.size() + fresh_atoms.size() > options_.atom_budget) {
            throw BudgetExceeded("problem mentions more than " + std::to_string(options_.atom_budget) +
                                 " ground atoms");
          }
          ++next_var;
        }
        return it->second;
      },
      [&] { return next_var++; });
  std::vector<Clause> local;
  for (const auto& f : extra) encoder.add(f, true, local);
  if (!satisfiable_) return false;

  // Cheap answers before a full search: drop clauses already decided at the
  // root, accept if the stored model satisfies the rest, and solve alone any
  // remainder that shares no variable with the base clauses.
  std::vector<Clause> open;
  bool model_fits = true;
  bool detached = true;
  for (auto& c : local) {
    Clause kept;
    bool satisfied = false;
    bool model_satisfied = false;
    for (Lit l : c) {
      const std::uint32_t v = var_of(l);
      const std::int8_t f = v < num_vars_ ? fixed_[v] : 0;
      if (f != 0) {
        if ((f > 0) != is_negative(l)) satisfied = true;
        continue;
      }
      kept.push_back(l);
      if (v < num_vars_) {
        if (model_[v] != 0 && (model_[v] > 0) != is_negative(l)) model_satisfied = true;
        if (!db_.occurrences[l].empty() || !db_.occurrences[negate(l)].empty()) detached = false;
      }
    }
    if (satisfied) continue;
    if (kept.empty()) return false;
    if (!model_satisfied) model_fits = false;
    open.push_back(std::move(kept));
  }
  if (open.empty() || model_fits) return true;
  if (detached) {
    static const ClauseDb empty_db = [] {
      ClauseDb db;
      return db;
    }();
    const std::vector<std::int8_t> none(next_var, 0);
    return Search(empty_db, none, next_var, std::move(open), false).solve();
  }
  return Search(db_, fixed_, next_var, std::move(open), false).solve();
}

bool CompiledTheory::consistent_with(const Formula& f) const {
  return satisfiable_with(std::span<const Formula>(&f, 1));
}

bool CompiledTheory::entails(const Formula& goal) const {
  return !consistent_with(Formula::negation(goal));
}

bool CompiledTheory::entails_given(const Formula& premise, const Formula& goal) const {
  const Formula extra[] = {premise, Formula::negation(goal)};
  return !satisfiable_with(extra);
}

}  // namespace evident
