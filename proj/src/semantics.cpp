#include "mirror/semantics.hpp"

#include <utility>

namespace mirror {

const char* rule_name(RuleId rule) noexcept {
  switch (rule) {
    case RuleId::Paradox: return "Reduction-Paradox";
    case RuleId::Integrate: return "Reduction-Integrate";
    case RuleId::Reentry: return "Reduction-Reentry";
    case RuleId::Node: return "Reduction-Node";
    case RuleId::Named: return "Reduction-Named";
  }
  return "Reduction-Node";
}

namespace {

// Reduces a term whose root is not a non-paradox named wrapper.
StepOutcome step_at_core(const Term& t) {
  if (is_paradox(t)) {
    return Stepped{RuleId::Paradox, Term::cap(t)};
  }
  switch (t.kind()) {
    case TermKind::Cap:
      return Stepped{RuleId::Integrate, Term::enter(t.child())};
    case TermKind::Enter:
      // Side condition: the whole term enter(u) is never a paradox.
      return Stepped{RuleId::Reentry, Term::node(t.child())};
    case TermKind::Node:
      return Stepped{RuleId::Node, Term::node(t)};
    default:
      return std::nullopt;  // base, self_ref, named value chains
  }
}

}  // namespace

StepOutcome step(const Term& t) {
  // Peel the spine of non-paradox named wrappers; the congruence rule is
  // the only way reduction descends into a term.
  std::vector<const Term*> spine;
  const Term* cur = &t;
  while (cur->kind() == TermKind::Named && !is_paradox(*cur)) {
    spine.push_back(cur);
    cur = &cur->child();
  }
  StepOutcome inner = step_at_core(*cur);
  if (!inner) return std::nullopt;
  Term result = std::move(inner->result);
  for (auto it = spine.rbegin(); it != spine.rend(); ++it) {
    result = Term::named((*it)->label(), std::move(result));
  }
  RuleId rule = spine.empty() ? inner->rule : RuleId::Named;
  return Stepped{rule, std::move(result)};
}

std::vector<Stepped> applicable_rules(const Term& t) {
  std::vector<Stepped> out;
  if (is_paradox(t)) {
    out.push_back({RuleId::Paradox, Term::cap(t)});
  }
  switch (t.kind()) {
    case TermKind::Cap:
      out.push_back({RuleId::Integrate, Term::enter(t.child())});
      break;
    case TermKind::Enter:
      if (!is_paradox(t)) {
        out.push_back({RuleId::Reentry, Term::node(t.child())});
      }
      break;
    case TermKind::Node:
      out.push_back({RuleId::Node, Term::node(t)});
      break;
    case TermKind::Named:
      for (const Stepped& s : applicable_rules(t.child())) {
        out.push_back({RuleId::Named, Term::named(t.label(), s.result)});
      }
      break;
    default:
      break;
  }
  return out;
}

Trace trace(const Term& start, std::size_t fuel) {
  Trace tr;
  tr.entries.push_back({0, start, std::nullopt});
  Term cur = start;
  for (std::size_t i = 0; i < fuel; ++i) {
    StepOutcome out = step(cur);
    if (!out) {
      tr.stop_reason = StopReason::ReachedValue;
      return tr;
    }
    cur = out->result;
    tr.entries.push_back({i + 1, cur, out->rule});
  }
  tr.stop_reason = is_value(cur) ? StopReason::ReachedValue : StopReason::FuelExhausted;
  return tr;
}

}  // namespace mirror
