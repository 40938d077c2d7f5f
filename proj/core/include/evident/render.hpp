#pragma once

#include <string>
#include <vector>

#include "evident/ep.hpp"
#include "evident/interval.hpp"
#include "evident/mh_rules.hpp"

namespace evident {

/// Six decimal places, ties to even on the exact binary value.
std::string format_probability(double p);

/// "[lower, upper]" with format_probability endpoints.
std::string format_interval(const ProbabilityInterval& interval);

/// One line per step.
std::vector<std::string> trace_lines(const EvaluationTrace& trace);
std::vector<std::string> trace_lines(const DerivationTrace& trace);

}  // namespace evident
