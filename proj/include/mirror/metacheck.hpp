#ifndef MIRROR_METACHECK_HPP
#define MIRROR_METACHECK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mirror/term.hpp"

namespace mirror {

/// Bounds for bounded-exhaustive checking: every term whose constructor
/// count is at most max_size, with named labels drawn from `labels`.
struct EnumSpec {
  std::size_t max_size = 7;
  std::vector<std::string> labels = {"a", "b"};
};

/// Streams every term within the bounds exactly once, in a fixed order: by size,
/// then root constructor (base < self_ref < node < cap < enter < named),
/// then label order, then recursively by the same order on the child.
class TermEnumerator {
 public:
  explicit TermEnumerator(EnumSpec spec);

  std::optional<Term> next();

 private:
  Term build() const;
  bool advance();

  EnumSpec spec_;
  std::size_t size_ = 1;
  std::vector<std::size_t> wrappers_;  // outermost first; values index the wrapper order
  std::size_t leaf_ = 0;               // 0 = base, 1 = self_ref
  bool done_ = false;
};

/// Materialized enumeration, in enumerator order.
std::vector<Term> enumerate_terms(const EnumSpec& spec);

struct CheckReport {
  std::string property;
  EnumSpec spec;
  std::size_t terms_checked = 0;
  bool passed = false;
  std::optional<Term> counterexample;  // first failure in enumeration order
  std::string detail;
};

/// is_value(t) XOR step(t) is Stepped, for every enumerated t.
CheckReport check_progress(const EnumSpec& spec);

/// applicable_rules(t) never holds more than one pair and agrees with step.
CheckReport check_determinism(const EnumSpec& spec);

/// Restricted label preservation holds on every non-paradox named term, and
/// the unrestricted statement is refuted by a paradox witness.
CheckReport check_label_preservation(const EnumSpec& spec);

/// Every enumerated paradox p runs [p, cap(p), enter(p), node(p)] in
/// exactly three steps.
CheckReport check_paradox_cycle(const EnumSpec& spec);

/// Completion is idempotent, fixes paradox-free terms, yields canonical
/// outputs, and agrees with three steps of reduction on paradoxes.
CheckReport check_completion(const EnumSpec& spec);

/// parse(print(t)) == t for every enumerated t.
CheckReport check_roundtrip(const EnumSpec& spec);

/// All suites above, in a fixed order.
std::vector<CheckReport> run_all_checks(const EnumSpec& spec);

/// Report envelope over the structured term encoding.
nlohmann::json to_structured(const CheckReport& report);

}  // namespace mirror

#endif  // MIRROR_METACHECK_HPP
