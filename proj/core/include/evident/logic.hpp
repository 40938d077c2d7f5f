#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evident/formula.hpp"
#include "evident/sat.hpp"

namespace evident {

/// Every model of `theory` satisfies `goal`.
bool entails(std::span<const Formula> theory, const Formula& goal, const LogicOptions& options = {});

/// Some assignment satisfies every sentence of `theory`.
bool consistent(std::span<const Formula> theory, const LogicOptions& options = {});

/// Up to `limit` minimal inconsistent subsets of `theory`, as sorted index
/// lists into it. The first core is found by deletion from the last sentence
/// backwards; further cores are found by removing one member of each known
/// core (hitting sets in lexicographic order) and shrinking again.
///
/// `background` sentences hold throughout and never appear in a core.
/// Throws InvalidArgument if theory plus background is consistent.
std::vector<std::vector<std::size_t>> minimal_inconsistent_subsets(std::span<const Formula> theory,
                                                                   std::size_t limit,
                                                                   const LogicOptions& options = {},
                                                                   std::span<const Formula> background = {});

}  // namespace evident
