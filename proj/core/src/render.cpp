#include "evident/render.hpp"

#include <charconv>

#include "evident/error.hpp"

namespace evident {

std::string format_probability(double p) {
  char buf[64];
  // to_chars with a precision rounds the exact value, ties to even.
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p == 0.0 ? 0.0 : p, std::chars_format::fixed, 6);
  if (ec != std::errc()) throw InvalidArgument("probability not representable");
  return std::string(buf, ptr);
}

std::string format_interval(const ProbabilityInterval& interval) {
  return "[" + format_probability(interval.lower()) + ", " + format_probability(interval.upper()) + "]";
}

std::vector<std::string> trace_lines(const EvaluationTrace& trace) {
  std::vector<std::string> out;
  out.push_back("query " + trace.query.to_string() + (trace.subject ? " about " + *trace.subject : ""));
  for (const auto& step : trace.steps) {
    std::string line(step_kind_name(step.kind));
    switch (step.kind) {
      case TraceStep::Kind::kEntails:
        line += " " + step.statement + (step.holds ? " yes" : " no");
        break;
      case TraceStep::Kind::kClassApplies:
        line += " " + step.note + (step.holds ? " yes" : " no");
        break;
      case TraceStep::Kind::kCandidate:
        line += " " + step.note + " " + format_interval(*step.interval) + " from " + step.statement;
        break;
      case TraceStep::Kind::kSkipped:
        line += " " + step.statement + ": " + step.note;
        break;
      case TraceStep::Kind::kPruned:
        line += " " + format_interval(*step.interval) + " from " + step.statement + " by " + step.note;
        break;
      case TraceStep::Kind::kResult:
        line += " " + format_interval(*step.interval);
        break;
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> trace_lines(const DerivationTrace& trace) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    std::string line = std::to_string(i) + ". " + step.conclusion.to_string();
    if (step.rule == 0) {
      line += "  [given]";
    } else {
      line += "  [rule " + std::to_string(step.rule);
      for (std::size_t k = 0; k < step.premises.size(); ++k)
        line += (k ? ", " : " from ") + std::to_string(step.premises[k]);
      line += "]";
    }
    if (trace.inconsistent_at == i) line += "  <- plain sentences inconsistent";
    out.push_back(std::move(line));
  }
  out.push_back(std::string("outcome ") + std::string(outcome_name(trace.outcome)));
  for (const auto& g : trace.unreached) out.push_back("unreached " + g.to_string());
  return out;
}

}  // namespace evident
