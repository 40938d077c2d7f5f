#include "evident/logic.hpp"

#include <algorithm>
#include <functional>

#include "evident/error.hpp"

namespace evident {

bool entails(std::span<const Formula> theory, const Formula& goal, const LogicOptions& options) {
  return CompiledTheory::compile(theory, options)->entails(goal);
}

bool consistent(std::span<const Formula> theory, const LogicOptions& options) {
  return CompiledTheory::compile(theory, options)->satisfiable();
}

namespace {

class CoreFinder {
 public:
  CoreFinder(std::span<const Formula> theory, const LogicOptions& options, std::span<const Formula> background)
      : theory_(theory), background_(CompiledTheory::compile(background, options)) {}

  bool inconsistent(const std::vector<bool>& keep) const {
    std::vector<Formula> chosen;
    for (std::size_t i = 0; i < theory_.size(); ++i)
      if (keep[i]) chosen.push_back(theory_[i]);
    return !background_->satisfiable_with(chosen);
  }

  // Deletion-based shrinking of an inconsistent selection.
  std::vector<std::size_t> shrink(std::vector<bool> keep) const {
    for (std::size_t i = theory_.size(); i-- > 0;) {
      if (!keep[i]) continue;
      keep[i] = false;
      if (!inconsistent(keep)) keep[i] = true;
    }
    std::vector<std::size_t> core;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[i]) core.push_back(i);
    return core;
  }

  std::size_t size() const { return theory_.size(); }

 private:
  std::span<const Formula> theory_;
  std::shared_ptr<const CompiledTheory> background_;
};

}  // namespace

std::vector<std::vector<std::size_t>> minimal_inconsistent_subsets(std::span<const Formula> theory,
                                                                   std::size_t limit,
                                                                   const LogicOptions& options,
                                                                   std::span<const Formula> background) {
  CoreFinder finder(theory, options, background);
  std::vector<bool> all(theory.size(), true);
  if (!finder.inconsistent(all)) {
    throw InvalidArgument("minimal inconsistent subsets requested for a consistent theory");
  }
  std::vector<std::vector<std::size_t>> cores;
  if (limit == 0) return cores;
  cores.push_back(finder.shrink(all));

  // Any further core must omit at least one member of each known core. Walk
  // the hitting sets depth-first; each removal list is tried once.
  std::vector<std::vector<std::size_t>> tried;
  std::function<bool(std::vector<bool>&, std::vector<std::size_t>&)> explore =
      [&](std::vector<bool>& keep, std::vector<std::size_t>& removed) -> bool {
    if (cores.size() >= limit) return true;
    // Find a known core still fully present.
    const std::vector<std::size_t>* intact = nullptr;
    for (const auto& core : cores) {
      if (std::all_of(core.begin(), core.end(), [&](std::size_t i) { return keep[i]; })) {
        intact = &core;
        break;
      }
    }
    if (!intact) {
      std::vector<std::size_t> key = removed;
      std::sort(key.begin(), key.end());
      if (std::find(tried.begin(), tried.end(), key) != tried.end()) return false;
      tried.push_back(key);
      if (!finder.inconsistent(keep)) return false;
      cores.push_back(finder.shrink(keep));
      return cores.size() >= limit;
    }
    const std::vector<std::size_t> branch = *intact;
    for (std::size_t i : branch) {
      keep[i] = false;
      removed.push_back(i);
      bool done = explore(keep, removed);
      removed.pop_back();
      keep[i] = true;
      if (done) return true;
    }
    return false;
  };
  std::vector<std::size_t> removed;
  explore(all, removed);
  return cores;
}

}  // namespace evident
