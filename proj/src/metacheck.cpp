#include "mirror/metacheck.hpp"

#include <sstream>
#include <utility>

#include "mirror/completion.hpp"
#include "mirror/semantics.hpp"
#include "mirror/structured.hpp"
#include "mirror/syntax.hpp"

namespace mirror {

namespace {

std::vector<std::string> dedupe(std::vector<std::string> labels) {
  std::vector<std::string> out;
  for (std::string& l : labels) {
    bool seen = false;
    for (const std::string& s : out) {
      if (s == l) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

TermEnumerator::TermEnumerator(EnumSpec spec) : spec_(std::move(spec)) {
  spec_.labels = dedupe(std::move(spec_.labels));
  done_ = spec_.max_size < 1;
}

Term TermEnumerator::build() const {
  Term t = leaf_ == 0 ? Term::base() : Term::self_ref();
  // wrappers_ stores the outermost constructor first
  for (std::size_t i = wrappers_.size(); i-- > 0;) {
    std::size_t d = wrappers_[i];
    switch (d) {
      case 0: t = Term::node(std::move(t)); break;
      case 1: t = Term::cap(std::move(t)); break;
      case 2: t = Term::enter(std::move(t)); break;
      default: t = Term::named(spec_.labels[d - 3], std::move(t)); break;
    }
  }
  return t;
}

bool TermEnumerator::advance() {
  if (++leaf_ < 2) return true;
  leaf_ = 0;
  const std::size_t radix = 3 + spec_.labels.size();
  for (std::size_t i = wrappers_.size(); i-- > 0;) {
    if (++wrappers_[i] < radix) return true;
    wrappers_[i] = 0;
  }
  ++size_;
  wrappers_.assign(size_ - 1, 0);
  return size_ <= spec_.max_size;
}

std::optional<Term> TermEnumerator::next() {
  if (done_) return std::nullopt;
  Term t = build();
  done_ = !advance();
  return t;
}

std::vector<Term> enumerate_terms(const EnumSpec& spec) {
  std::vector<Term> out;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    out.push_back(std::move(*t));
  }
  return out;
}

namespace {

// Shared bookkeeping: first counterexample in enumeration order (D14),
// total failure count for the detail note.
struct Scan {
  std::size_t terms = 0;
  std::size_t failures = 0;
  std::optional<Term> first_failure;

  void miss(const Term& t) {
    ++failures;
    if (!first_failure) first_failure = t;
  }
};

CheckReport finish(const char* property, const EnumSpec& spec, Scan& scan,
                   std::string pass_detail) {
  CheckReport report;
  report.property = property;
  report.spec = spec;
  report.terms_checked = scan.terms;
  report.passed = scan.failures == 0;
  if (report.passed) {
    report.detail = std::move(pass_detail);
  } else {
    report.counterexample = scan.first_failure;
    std::ostringstream os;
    os << scan.failures << " of " << scan.terms << " terms failed; first counterexample "
       << print(*scan.first_failure);
    report.detail = os.str();
  }
  return report;
}

// Paradox occurrence anywhere in t, not just at the root. Deliberately
// separate from the traversal inside complete().
bool contains_paradox(const Term& t) {
  const Term* cur = &t;
  for (;;) {
    if (is_paradox(*cur)) return true;
    if (cur->kind() == TermKind::Base || cur->kind() == TermKind::SelfRef) return false;
    cur = &cur->child();
  }
}

Term step_n(Term t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    StepOutcome out = step(t);
    if (!out) return t;
    t = std::move(out->result);
  }
  return t;
}

}  // namespace

CheckReport check_progress(const EnumSpec& spec) {
  Scan scan;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    ++scan.terms;
    bool value = is_value(*t);
    bool steps = step(*t).has_value();
    if (value == steps) scan.miss(*t);
  }
  std::ostringstream os;
  os << "all " << scan.terms << " terms satisfy the value/step dichotomy";
  return finish("progress", spec, scan, os.str());
}

CheckReport check_determinism(const EnumSpec& spec) {
  Scan scan;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    ++scan.terms;
    std::vector<Stepped> rules = applicable_rules(*t);
    StepOutcome out = step(*t);
    bool ok;
    if (rules.empty()) {
      ok = !out.has_value();
    } else {
      ok = rules.size() == 1 && out.has_value() && out->rule == rules[0].rule &&
           out->result == rules[0].result;
    }
    if (!ok) scan.miss(*t);
  }
  std::ostringstream os;
  os << "at most one rule applies to each of " << scan.terms
     << " terms, always agreeing with step";
  return finish("determinism", spec, scan, os.str());
}

CheckReport check_label_preservation(const EnumSpec& spec) {
  Scan scan;
  std::size_t named_terms = 0;
  std::size_t paradoxes = 0;
  std::optional<Term> refutation;  // first unrestricted-statement failure
  bool refutation_is_paradox = false;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    ++scan.terms;
    if (is_paradox(*t)) ++paradoxes;
    if (t->kind() != TermKind::Named) continue;
    ++named_terms;
    StepOutcome out = step(*t);
    if (!out) continue;
    bool preserved = out->result.kind() == TermKind::Named &&
                     out->result.label() == t->label();
    if (preserved) {
      // the stripped result must be one step of the child
      StepOutcome child_out = step(t->child());
      preserved = child_out.has_value() && child_out->result == out->result.child();
    }
    if (!preserved && !refutation) {
      refutation = *t;
      refutation_is_paradox = is_paradox(*t);
    }
    // Restricted statement: preservation on every non-paradox named term.
    if (!is_paradox(*t) && !preserved) scan.miss(*t);
  }
  std::ostringstream os;
  if (refutation && !refutation_is_paradox) {
    scan.miss(*refutation);
    os << "unrestricted statement refuted by a non-paradox term " << print(*refutation);
  } else if (!refutation && paradoxes > 0) {
    // A paradox steps away from the named shape, so a refutation must
    // surface whenever the bound contains one.
    scan.miss(Term::base());
    os << "unrestricted statement was not refuted although " << paradoxes
       << " paradox terms are in bounds";
  } else if (!refutation) {
    os << "restricted preservation holds on " << named_terms
       << " named terms; no paradox in bounds, nothing refutes the unrestricted statement";
  } else {
    os << "restricted preservation holds on " << named_terms
       << " named terms; unrestricted statement refuted by " << print(*refutation);
  }
  return finish("label-preservation", spec, scan, os.str());
}

CheckReport check_paradox_cycle(const EnumSpec& spec) {
  Scan scan;
  std::size_t paradoxes = 0;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    ++scan.terms;
    if (!is_paradox(*t)) continue;
    ++paradoxes;
    Trace tr = trace(*t, 3);
    bool ok = tr.entries.size() == 4 && tr.stop_reason == StopReason::FuelExhausted &&
              tr.entries[0].term == *t && !tr.entries[0].rule &&
              tr.entries[1].term == Term::cap(*t) && tr.entries[1].rule == RuleId::Paradox &&
              tr.entries[2].term == Term::enter(*t) && tr.entries[2].rule == RuleId::Integrate &&
              tr.entries[3].term == Term::node(*t) && tr.entries[3].rule == RuleId::Reentry;
    for (std::size_t i = 0; ok && i < tr.entries.size(); ++i) {
      ok = tr.entries[i].index == i;
    }
    if (!ok) scan.miss(*t);
  }
  std::ostringstream os;
  os << "all " << paradoxes << " paradox terms run the cap/enter/node cycle in exactly three steps";
  return finish("paradox-cycle", spec, scan, os.str());
}

CheckReport check_completion(const EnumSpec& spec) {
  Scan scan;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    ++scan.terms;
    CompletionResult r = complete(*t);
    bool ok = r.rewrites_applied <= term_size(*t);
    ok = ok && (r.rewrites_applied == 0) == (r.canonical == *t);
    ok = ok && complete(r.canonical).rewrites_applied == 0;
    ok = ok && is_mirror_canonical(r.canonical);
    ok = ok && is_mirror_canonical(*t) == (r.rewrites_applied == 0);
    if (!contains_paradox(*t)) {
      ok = ok && r.canonical == *t;
    }
    if (is_paradox(*t)) {
      ok = ok && r.canonical == step_n(*t, 3);
    }
    if (!ok) scan.miss(*t);
  }
  std::ostringstream os;
  os << "idempotence, paradox-free fixed points, canonicality and the three-step bridge hold on "
     << scan.terms << " terms";
  return finish("completion", spec, scan, os.str());
}

CheckReport check_roundtrip(const EnumSpec& spec) {
  Scan scan;
  TermEnumerator en(spec);
  while (std::optional<Term> t = en.next()) {
    ++scan.terms;
    ParseResult back = parse(print(*t));
    const Term* parsed = std::get_if<Term>(&back);
    if (!parsed || *parsed != *t) scan.miss(*t);
  }
  std::ostringstream os;
  os << "parse(print(t)) == t for all " << scan.terms << " terms";
  return finish("roundtrip", spec, scan, os.str());
}

std::vector<CheckReport> run_all_checks(const EnumSpec& spec) {
  return {
      check_progress(spec),
      check_determinism(spec),
      check_label_preservation(spec),
      check_paradox_cycle(spec),
      check_completion(spec),
      check_roundtrip(spec),
  };
}

nlohmann::json to_structured(const CheckReport& report) {
  nlohmann::json doc;
  doc["property"] = report.property;
  doc["passed"] = report.passed;
  doc["terms_checked"] = report.terms_checked;
  doc["spec"] = {{"max_size", report.spec.max_size}, {"labels", report.spec.labels}};
  doc["counterexample"] =
      report.counterexample ? to_structured(*report.counterexample) : nlohmann::json(nullptr);
  doc["detail"] = report.detail;
  return doc;
}

}  // namespace mirror
