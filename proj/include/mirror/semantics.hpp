#ifndef MIRROR_SEMANTICS_HPP
#define MIRROR_SEMANTICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mirror/term.hpp"

namespace mirror {

/// One identifier per reduction rule of the calculus.
enum class RuleId {
  Paradox,    // t -> cap(t)                 when is_paradox(t)
  Integrate,  // cap(t) -> enter(t)
  Reentry,    // enter(t) -> node(t)
  Node,       // node(t) -> node(node(t))
  Named,      // named(s, t) -> named(s, t')  when t -> t'
};

/// Bracketed rule name, e.g. "Reduction-Paradox".
const char* rule_name(RuleId rule) noexcept;

struct Stepped {
  RuleId rule;
  Term result;
};

/// Outcome of one reduction attempt: nullopt means the input is a value.
using StepOutcome = std::optional<Stepped>;

/// Deterministic single-step reduction. Total: returns nullopt exactly on
/// values. Dispatch is paradox-first, then cap/enter/node, then the named
/// congruence; the patterns never overlap (see applicable_rules).
StepOutcome step(const Term& t);

/// Every (rule, successor) pair derivable for t when the five rules are read
/// as an unordered relation, without step's dispatch priority. Oracle for
/// determinism: the result never holds more than one pair.
std::vector<Stepped> applicable_rules(const Term& t);

enum class StopReason {
  ReachedValue,
  FuelExhausted,
};

struct TraceEntry {
  std::size_t index;
  Term term;
  std::optional<RuleId> rule;  // rule applied to reach this entry; nullopt at index 0
};

struct Trace {
  std::vector<TraceEntry> entries;
  StopReason stop_reason;
};

/// Iterates step from start, recording every successor, until a value is
/// reached or fuel steps have been taken. Fuel exhaustion is a normal
/// outcome; the calculus diverges by design on node growth.
Trace trace(const Term& start, std::size_t fuel);

}  // namespace mirror

#endif  // MIRROR_SEMANTICS_HPP
