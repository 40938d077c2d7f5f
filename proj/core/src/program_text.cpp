#include <algorithm>
#include <charconv>
#include <sstream>

#include "evident/error.hpp"
#include "evident/knowledge.hpp"
#include "evident/program_text.hpp"

namespace evident {

std::string exact_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc()) throw InvalidArgument("number not representable");
  return std::string(buf, ptr);
}

ProbabilityInterval::ProbabilityInterval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!(0.0 <= lower && lower <= upper && upper <= 1.0)) {
    throw InvalidArgument("invalid probability interval [" + exact_number(lower) + ", " +
                          exact_number(upper) + "]");
  }
}

std::string ProbabilityInterval::to_string() const {
  return "[" + exact_number(lower_) + ", " + exact_number(upper_) + "]";
}

ProbabilityInterval interval_hull(std::span<const ProbabilityInterval> intervals) {
  if (intervals.empty()) throw InvalidArgument("interval hull of an empty list");
  double lo = intervals.front().lower();
  double hi = intervals.front().upper();
  for (const auto& i : intervals) {
    lo = std::min(lo, i.lower());
    hi = std::max(hi, i.upper());
  }
  return {lo, hi};
}

std::string StatisticalStatement::to_string() const {
  return "stat " + variable + ": " + target.without_implications().to_string() + " | " +
         reference.without_implications().to_string() + " in [" + exact_number(interval.lower()) + ", " +
         exact_number(interval.upper()) + "].";
}

std::string Default::to_string() const {
  std::string out = "default ";
  if (prerequisite) out += prerequisite->without_implications().to_string() + " ";
  out += ":";
  for (std::size_t i = 0; i < justifications.size(); ++i) {
    out += i ? ", M " : " M ";
    out += justifications[i].without_implications().to_string();
  }
  out += " / " + consequent.without_implications().to_string() + ".";
  return out;
}

std::string item_to_string(const EvidenceItem& item) {
  struct Visitor {
    std::string operator()(const Formula& f) const { return "fact " + f.without_implications().to_string() + "."; }
    std::string operator()(const UniversalRule& r) const {
      return "rule all " + r.variable + ": " + r.antecedent.without_implications().to_string() + " -> " +
             r.consequent.without_implications().to_string() + ".";
    }
    std::string operator()(const StatisticalStatement& s) const { return s.to_string(); }
  };
  return std::visit(Visitor{}, item);
}

Theory ground_items(const std::vector<CertainItem>& items, const std::vector<std::string>& constants) {
  Theory out;
  for (const auto& item : items) {
    if (const auto* f = std::get_if<Formula>(&item)) {
      out.push_back(*f);
    } else {
      const auto& rule = std::get<UniversalRule>(item);
      for (const auto& c : constants) out.push_back(rule.ground(c));
    }
  }
  return out;
}

Theory KnowledgeBase::ground_theory() const { return ground_items(certain, signature.constants()); }

std::string program_text(const Signature& signature, const std::vector<CertainItem>& certain,
                         const std::vector<StatisticalStatement>& stats, const std::vector<Default>& defaults) {
  std::ostringstream out;
  const auto& constants = signature.constants();
  // Long constant lists are wrapped to keep lines readable.
  for (std::size_t i = 0; i < constants.size(); i += 16) {
    out << "const ";
    for (std::size_t j = i; j < std::min(constants.size(), i + 16); ++j) {
      if (j > i) out << ", ";
      out << constants[j];
    }
    out << ".\n";
  }
  for (const auto& p : signature.predicates()) out << "pred " << p.name << "/" << p.arity << ".\n";
  for (const auto& item : certain) {
    out << std::visit([](const auto& v) { return item_to_string(EvidenceItem(v)); }, item) << "\n";
  }
  for (const auto& s : stats) out << s.to_string() << "\n";
  for (const auto& d : defaults) out << d.to_string() << "\n";
  return out.str();
}

}  // namespace evident
