#include "mirror/structured.hpp"

#include <utility>
#include <vector>

namespace mirror {

namespace {

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Base: return "base";
    case TermKind::SelfRef: return "self_ref";
    case TermKind::Node: return "node";
    case TermKind::Cap: return "cap";
    case TermKind::Enter: return "enter";
    case TermKind::Named: return "named";
  }
  return "base";
}

}  // namespace

nlohmann::json to_structured(const Term& t) {
  // Built leaf-first to keep nesting work iterative.
  std::vector<const Term*> chain;
  const Term* cur = &t;
  for (;;) {
    chain.push_back(cur);
    if (cur->kind() == TermKind::Base || cur->kind() == TermKind::SelfRef) break;
    cur = &cur->child();
  }
  nlohmann::json doc;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    nlohmann::json obj;
    obj["kind"] = kind_name((*it)->kind());
    if ((*it)->kind() == TermKind::Named) obj["label"] = (*it)->label();
    if (it != chain.rbegin()) obj["child"] = std::move(doc);
    doc = std::move(obj);
  }
  return doc;
}

nlohmann::json to_structured(const Trace& tr) {
  nlohmann::json entries = nlohmann::json::array();
  for (const TraceEntry& e : tr.entries) {
    nlohmann::json entry;
    entry["index"] = e.index;
    entry["rule"] = e.rule ? nlohmann::json(rule_name(*e.rule)) : nlohmann::json(nullptr);
    entry["term"] = to_structured(e.term);
    entries.push_back(std::move(entry));
  }
  nlohmann::json doc;
  doc["entries"] = std::move(entries);
  doc["stop_reason"] = tr.stop_reason == StopReason::ReachedValue ? "value" : "fuel";
  return doc;
}

}  // namespace mirror
