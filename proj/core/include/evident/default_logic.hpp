#pragma once

#include <cstddef>
#include <vector>

#include "evident/knowledge.hpp"
#include "evident/sat.hpp"

namespace evident {

/// Largest default set compute_extensions will enumerate.
inline constexpr std::size_t kMaxDefaults = 20;

struct DefaultTheory {
  Theory facts;  // W
  std::vector<Default> defaults;
};

/// An extension, represented by W plus the consequents of its generating
/// defaults; membership of other sentences is decided by entailment.
struct Extension {
  std::vector<std::size_t> generating_defaults;
  std::vector<Formula> consequents;

  friend bool operator==(const Extension&, const Extension&) = default;
};

/// Whether W ∪ S generates an extension: it is consistent, the consequents of
/// the defaults applicable to it (prerequisite entailed, every justification
/// consistent) are exactly S up to normalization, and each of those defaults
/// can be fired in some order starting from W alone. When W itself is
/// inconsistent, only S = {} qualifies.
bool is_extension(const DefaultTheory& theory, const std::vector<Formula>& generators,
                  const LogicOptions& options = {});

/// Every extension, by guess-and-verify over subsets of the distinct default
/// consequents in ascending bitmask order. Supersets of a subset already
/// inconsistent with W are skipped. Throws InvalidArgument beyond
/// kMaxDefaults defaults.
std::vector<Extension> compute_extensions(const DefaultTheory& theory, const LogicOptions& options = {});

}  // namespace evident
