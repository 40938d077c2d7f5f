#include "evident/acceptance.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <unordered_set>

#include "evident/error.hpp"
#include "evident/logic.hpp"

namespace evident {

AcceptanceLevel::AcceptanceLevel(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw InvalidArgument("epsilon must lie strictly between 0 and 0.5");
  }
}

bool is_accepted(const EvidenceBase& base, const Formula& sentence, const AcceptanceLevel& level) {
  return level.admits(evidential_probability(base, sentence).interval);
}

std::vector<Judgement> judge_universe(const EvidenceBase& base, const AcceptanceLevel& level,
                                      const std::vector<Formula>& universe, std::size_t threads) {
  std::vector<std::optional<Judgement>> slots(universe.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto evaluation = evidential_probability(base, universe[i]);
      const bool accepted = level.admits(evaluation.interval);
      slots[i] = Judgement{universe[i], std::move(evaluation), accepted};
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, universe.size() / 16));
  if (threads <= 1) {
    work(0, universe.size());
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (universe.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(universe.size(), t * chunk);
      const std::size_t end = std::min(universe.size(), begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Judgement> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool Corpus::contains(const Formula& sentence) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const CorpusEntry& e) { return same_sentence(e.sentence, sentence); });
}

std::vector<Formula> Corpus::sentences() const {
  std::vector<Formula> out;
  for (const auto& e : entries) out.push_back(e.sentence);
  return out;
}

Corpus corpus_of(const std::vector<Judgement>& judgements, const AcceptanceLevel& level, std::string universe_id) {
  Corpus corpus{level, std::move(universe_id), {}};
  for (const auto& j : judgements) {
    if (j.accepted) corpus.entries.push_back({j.sentence, j.evaluation.interval, j.evaluation.trace});
  }
  return corpus;
}

Corpus accepted_set(const EvidenceBase& base, const AcceptanceLevel& level, const std::vector<Formula>& universe,
                    std::string universe_id, std::size_t threads) {
  return corpus_of(judge_universe(base, level, universe, threads), level, std::move(universe_id));
}

UpdateDiff diff_judgements(const std::vector<Judgement>& before, const std::vector<Judgement>& after) {
  if (before.size() != after.size()) throw InvalidArgument("judgements of different universes");
  UpdateDiff diff;
  for (std::size_t i = 0; i < before.size(); ++i) {
    const auto& b = before[i];
    const auto& a = after[i];
    if (!(b.sentence == a.sentence)) throw InvalidArgument("judgements of different universes");
    if (!b.accepted && a.accepted) diff.added.push_back(a.sentence);
    if (b.accepted && !a.accepted) diff.retracted.push_back(a.sentence);
    if (b.accepted && a.accepted) ++diff.unchanged;
    if (!(b.evaluation.interval == a.evaluation.interval)) diff.interval_changed.push_back(a.sentence);
  }
  return diff;
}

UpdateDiff update_diff(const EvidenceBase& base, const EvidenceItem& item, const AcceptanceLevel& level,
                       const std::vector<Formula>& universe) {
  const EvidenceBase updated = assert_evidence(base, item);
  return diff_judgements(judge_universe(base, level, universe), judge_universe(updated, level, universe));
}

bool serious_possibility(const EvidenceBase& base, const Corpus& corpus, const Formula& sentence) {
  if (corpus.entries.empty()) return true;
  Theory with = base.certain_theory();
  with.push_back(sentence);
  const auto compiled = CompiledTheory::compile(with, base.options());
  if (!compiled->satisfiable()) return false;
  return std::all_of(corpus.entries.begin(), corpus.entries.end(),
                     [&](const CorpusEntry& entry) { return compiled->consistent_with(entry.sentence); });
}

bool serious_possibility(const EvidenceBase& base, const AcceptanceLevel& level,
                         const std::vector<Formula>& universe, const Formula& sentence) {
  return serious_possibility(base, accepted_set(base, level, universe), sentence);
}

namespace {

bool shares_atom(const std::unordered_set<Atom, AtomHash>& atoms, const Formula& f) {
  bool found = false;
  f.for_each_atom([&](const Atom& a) {
    if (!found && atoms.count(a)) found = true;
  });
  return found;
}

}  // namespace

CorpusReport corpus_report(const EvidenceBase& base, const Corpus& corpus, const std::vector<Formula>& universe,
                           const ReportOptions& options) {
  CorpusReport report;
  const auto members = corpus.sentences();
  report.jointly_consistent = base.compiled().satisfiable_with(members);

  if (!report.jointly_consistent && options.core_limit > 0) {
    // Corpus members first, so that deletion from the back discards certain
    // sentences before accepted ones and cores show the corpus side.
    std::vector<Formula> pool = members;
    const auto& certain = base.certain_theory();
    pool.insert(pool.end(), certain.begin(), certain.end());
    for (const auto& core : minimal_inconsistent_subsets(pool, options.core_limit, base.options())) {
      std::vector<Formula> sentences;
      for (std::size_t i : core) sentences.push_back(pool[i]);
      report.cores.push_back(std::move(sentences));
    }
  }

  std::unordered_set<Formula, FormulaHash> accepted;
  for (const auto& f : members) accepted.insert(normalize(f));
  auto in_corpus = [&](const Formula& f) { return accepted.count(normalize(f)) > 0; };

  std::vector<Formula> rejected;
  for (const auto& f : universe)
    if (!in_corpus(f)) rejected.push_back(f);
  for (const auto& premise : members) {
    std::unordered_set<Atom, AtomHash> atoms;
    premise.for_each_atom([&](const Atom& a) { atoms.insert(a); });
    std::shared_ptr<const CompiledTheory> alone;
    for (const auto& consequence : rejected) {
      // A consequence sharing no atom with its premise would be valid, and
      // valid sentences are always accepted.
      if (!shares_atom(atoms, consequence)) continue;
      if (!alone) alone = CompiledTheory::compile(std::span<const Formula>(&premise, 1), base.options());
      if (alone->entails(consequence)) report.single_premise_violations.emplace_back(premise, consequence);
    }
  }

  for (const auto& f : universe) {
    const Formula n = normalize(f);
    if (n.kind() != Formula::Kind::kAnd) continue;
    const auto parts = n.operands();
    if (std::all_of(parts.begin(), parts.end(), in_corpus)) {
      report.conjunction_closure.push_back({f, in_corpus(f)});
    }
  }
  return report;
}

CorpusReport corpus_report(const EvidenceBase& base, const AcceptanceLevel& level,
                           const std::vector<Formula>& universe, const ReportOptions& options) {
  return corpus_report(base, accepted_set(base, level, universe, {}, options.threads), universe, options);
}

}  // namespace evident
