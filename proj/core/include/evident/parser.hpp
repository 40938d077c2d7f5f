#pragma once

#include <string_view>

#include "evident/knowledge.hpp"

namespace evident {

/// Parse a knowledge-language program:
///
///   const a, b.            pred p/1.
///   fact p(a) v ~q(b).     rule all x: p(x) -> q(x).
///   stat x: q(x) | p(x) in [0.9, 1].
///   default p(a) : M q(a), M r(a) / q(a).
///
/// `#` starts a comment. `~` binds tighter than `&`, which binds tighter
/// than `v`. Throws ParseError with line and column.
KnowledgeBase parse_program(std::string_view text);

/// Parse a ground formula over an existing signature.
Formula parse_formula(std::string_view text, const Signature& signature);

/// Parse one `fact`, `rule` or `stat` declaration over an existing signature.
EvidenceItem parse_item(std::string_view text, const Signature& signature);

}  // namespace evident
