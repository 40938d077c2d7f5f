#pragma once

#include <string>
#include <vector>

#include "evident/knowledge.hpp"

namespace evident {

/// Shortest decimal text that reads back as exactly `value`.
std::string exact_number(double value);

/// Render declarations in the knowledge language; `parse_program` reads the
/// result back to an equal knowledge base.
std::string program_text(const Signature& signature, const std::vector<CertainItem>& certain,
                         const std::vector<StatisticalStatement>& stats,
                         const std::vector<Default>& defaults = {});

}  // namespace evident
