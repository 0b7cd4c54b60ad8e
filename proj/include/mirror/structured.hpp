#ifndef MIRROR_STRUCTURED_HPP
#define MIRROR_STRUCTURED_HPP

#include <json.hpp>

#include "mirror/semantics.hpp"
#include "mirror/term.hpp"

namespace mirror {

/// Lossless tree encoding: {"kind": ..., "label": ..., "child": ...} with
/// "label" on named terms only and "child" on unary constructors only.
nlohmann::json to_structured(const Term& t);

/// {"entries": [{"index": n, "rule": name-or-null, "term": ...}, ...],
///  "stop_reason": "value" | "fuel"}
nlohmann::json to_structured(const Trace& tr);

}  // namespace mirror

#endif  // MIRROR_STRUCTURED_HPP
