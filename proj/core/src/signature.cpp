#include "evident/signature.hpp"

#include "evident/error.hpp"

namespace evident {

void Signature::declare_constant(std::string name) {
  if (name.empty()) throw InvalidArgument("empty constant name");
  if (constant_index_.contains(name)) throw InvalidArgument("constant '" + name + "' declared twice");
  constant_index_.emplace(name, constants_.size());
  constants_.push_back(std::move(name));
}

void Signature::declare_predicate(std::string name, std::size_t arity) {
  if (name.empty()) throw InvalidArgument("empty predicate name");
  if (auto it = predicate_index_.find(name); it != predicate_index_.end()) {
    if (predicates_[it->second].arity != arity) {
      throw InvalidArgument("predicate '" + name + "' redeclared with arity " +
                            std::to_string(arity) + " (was " +
                            std::to_string(predicates_[it->second].arity) + ")");
    }
    return;
  }
  predicate_index_.emplace(name, predicates_.size());
  predicates_.push_back({std::move(name), arity});
}

bool Signature::has_constant(std::string_view name) const {
  return constant_index_.contains(std::string(name));
}

std::optional<std::size_t> Signature::constant_rank(std::string_view name) const {
  auto it = constant_index_.find(std::string(name));
  if (it == constant_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::arity(std::string_view predicate) const {
  auto it = predicate_index_.find(std::string(predicate));
  if (it == predicate_index_.end()) return std::nullopt;
  return predicates_[it->second].arity;
}

std::optional<std::string> Signature::check(const Formula& f,
                                            std::optional<std::string_view> variable) const {
  std::optional<std::string> problem;
  f.for_each_atom([&](const Atom& a) {
    if (problem) return;
    auto ar = arity(a.predicate);
    if (!ar) {
      problem = "undeclared predicate '" + a.predicate + "'";
      return;
    }
    if (*ar != a.arity()) {
      problem = "predicate '" + a.predicate + "' has arity " + std::to_string(*ar) +
                " but is used with " + std::to_string(a.arity()) + " argument(s)";
      return;
    }
    for (const auto& arg : a.args) {
      if (variable && arg == *variable) continue;
      if (!has_constant(arg)) {
        problem = "undeclared constant '" + arg + "'";
        return;
      }
    }
  });
  return problem;
}

std::optional<std::string> Signature::first_declared_constant(const Formula& f) const {
  std::optional<std::size_t> best;
  f.for_each_atom([&](const Atom& a) {
    for (const auto& arg : a.args) {
      auto rank = constant_rank(arg);
      if (rank && (!best || *rank < *best)) best = rank;
    }
  });
  if (!best) return std::nullopt;
  return constants_[*best];
}

}  // namespace evident
