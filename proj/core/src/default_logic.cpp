#include "evident/default_logic.hpp"

#include <algorithm>
#include <cstdint>

#include "evident/error.hpp"

namespace evident {

namespace {

std::vector<Formula> distinct_normalized(const std::vector<Formula>& formulas) {
  std::vector<Formula> out;
  for (const auto& f : formulas) {
    Formula n = normalize(f);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

bool justified(const Default& d, const CompiledTheory& ext) {
  return std::all_of(d.justifications.begin(), d.justifications.end(),
                     [&](const Formula& j) { return ext.consistent_with(j); });
}

// Defaults applicable to the candidate extension `ext`.
std::vector<std::size_t> applicable(const DefaultTheory& theory, const CompiledTheory& ext) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < theory.defaults.size(); ++i) {
    const auto& d = theory.defaults[i];
    if (d.prerequisite && !ext.entails(*d.prerequisite)) continue;
    if (justified(d, ext)) out.push_back(i);
  }
  return out;
}

// Fires applicable defaults from W upwards, keeping the justification test
// against the full extension.
bool grounded(const DefaultTheory& theory, const std::vector<std::size_t>& generating, const LogicOptions& options) {
  Theory reached = theory.facts;
  std::vector<bool> fired(theory.defaults.size(), false);
  std::size_t remaining = generating.size();
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    auto current = CompiledTheory::compile(reached, options);
    for (std::size_t i : generating) {
      if (fired[i]) continue;
      const auto& d = theory.defaults[i];
      if (d.prerequisite && !current->entails(*d.prerequisite)) continue;
      fired[i] = true;
      --remaining;
      reached.push_back(d.consequent);
      progress = true;
    }
  }
  return remaining == 0;
}

}  // namespace

bool is_extension(const DefaultTheory& theory, const std::vector<Formula>& generators, const LogicOptions& options) {
  const auto s = distinct_normalized(generators);
  if (!CompiledTheory::compile(theory.facts, options)->satisfiable()) return s.empty();
  Theory all = theory.facts;
  all.insert(all.end(), s.begin(), s.end());
  auto ext = CompiledTheory::compile(all, options);
  if (!ext->satisfiable()) return false;

  const auto generating = applicable(theory, *ext);
  std::vector<Formula> produced;
  for (std::size_t i : generating) produced.push_back(theory.defaults[i].consequent);
  produced = distinct_normalized(produced);
  if (produced.size() != s.size()) return false;
  for (const auto& f : produced)
    if (std::find(s.begin(), s.end(), f) == s.end()) return false;
  return grounded(theory, generating, options);
}

std::vector<Extension> compute_extensions(const DefaultTheory& theory, const LogicOptions& options) {
  if (theory.defaults.size() > kMaxDefaults) {
    throw InvalidArgument("default theory has " + std::to_string(theory.defaults.size()) +
                          " defaults; at most " + std::to_string(kMaxDefaults) + " are enumerated");
  }
  std::vector<Formula> consequents;
  for (const auto& d : theory.defaults) consequents.push_back(d.consequent);
  consequents = distinct_normalized(consequents);

  std::vector<Extension> out;
  auto base = CompiledTheory::compile(theory.facts, options);
  if (!base->satisfiable()) {
    out.push_back({});
    return out;
  }
  std::vector<std::uint32_t> dead;  // subsets inconsistent with W
  const std::uint32_t limit = 1U << consequents.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::any_of(dead.begin(), dead.end(), [&](std::uint32_t m) { return (mask & m) == m; })) continue;
    std::vector<Formula> s;
    for (std::size_t i = 0; i < consequents.size(); ++i)
      if (mask & (1U << i)) s.push_back(consequents[i]);
    if (!base->satisfiable_with(s)) {
      dead.push_back(mask);
      continue;
    }
    if (!is_extension(theory, s, options)) continue;
    Theory all = theory.facts;
    all.insert(all.end(), s.begin(), s.end());
    out.push_back({applicable(theory, *CompiledTheory::compile(all, options)), s});
  }
  return out;
}

}  // namespace evident
