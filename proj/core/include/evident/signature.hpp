#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "evident/formula.hpp"

namespace evident {

/// Declared constants and predicates, in declaration order.
class Signature {
 public:
  struct Predicate {
    std::string name;
    std::size_t arity;
    friend bool operator==(const Predicate&, const Predicate&) = default;
  };

  /// Throws InvalidArgument on a duplicate or empty name.
  void declare_constant(std::string name);
  /// Re-declaring with the same arity is a no-op; a different arity throws.
  void declare_predicate(std::string name, std::size_t arity);

  bool has_constant(std::string_view name) const;
  /// Position in declaration order.
  std::optional<std::size_t> constant_rank(std::string_view name) const;
  std::optional<std::size_t> arity(std::string_view predicate) const;

  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<Predicate>& predicates() const { return predicates_; }

  /// Every atom uses a declared predicate at its arity and declared constants
  /// (or `variable`, when given). Returns a diagnostic, or nullopt when fine.
  std::optional<std::string> check(const Formula& f,
                                   std::optional<std::string_view> variable = std::nullopt) const;

  /// The constant mentioned in `f` that was declared first, if any.
  std::optional<std::string> first_declared_constant(const Formula& f) const;

  friend bool operator==(const Signature& lhs, const Signature& rhs) {
    return lhs.constants_ == rhs.constants_ && lhs.predicates_ == rhs.predicates_;
  }

 private:
  std::vector<std::string> constants_;
  std::unordered_map<std::string, std::size_t> constant_index_;
  std::vector<Predicate> predicates_;
  std::unordered_map<std::string, std::size_t> predicate_index_;
};

}  // namespace evident
