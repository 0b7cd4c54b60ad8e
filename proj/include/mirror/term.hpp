#ifndef MIRROR_TERM_HPP
#define MIRROR_TERM_HPP

#include <cstddef>
#include <memory>
#include <string>

namespace mirror {

enum class TermKind {
  Base,
  SelfRef,
  Node,
  Cap,
  Enter,
  Named,
};

/// Immutable term of the mirror calculus. Copies are cheap (shared
/// structure); terms are safe to share across threads.
class Term {
 public:
  static Term base();
  static Term self_ref();
  static Term node(Term child);
  static Term cap(Term child);
  static Term enter(Term child);
  static Term named(std::string label, Term child);

  TermKind kind() const noexcept;

  /// Label of a Named term. Precondition: kind() == TermKind::Named.
  const std::string& label() const;

  /// Child of a unary term. Precondition: kind() is Node, Cap, Enter or Named.
  const Term& child() const;

  friend bool operator==(const Term& lhs, const Term& rhs) noexcept;
  friend bool operator!=(const Term& lhs, const Term& rhs) noexcept {
    return !(lhs == rhs);
  }

 private:
  struct Rep;

  Term() noexcept = default;  // internal null state, never exposed
  explicit Term(std::shared_ptr<Rep> rep) noexcept : rep_(std::move(rep)) {}

  std::shared_ptr<Rep> rep_;
};

enum class MirrorState {
  Normal,
  Paradox,
  Integrate,
  Reentry,
};

const char* to_string(MirrorState state) noexcept;

/// True iff t is exactly named(s, self_ref) for some label s. Inspects the
/// root only; deeper occurrences do not count.
bool is_paradox(const Term& t) noexcept;

MirrorState classify(const Term& t) noexcept;

/// True iff no reduction rule applies to t: base, self_ref, or a named
/// wrapper chain over one of those that is not itself a paradox.
bool is_value(const Term& t) noexcept;

/// Number of constructor occurrences in t. Labels do not contribute.
std::size_t term_size(const Term& t) noexcept;

/// Number of consecutive node constructors at the root of t.
std::size_t node_depth_prefix(const Term& t) noexcept;

}  // namespace mirror

#endif  // MIRROR_TERM_HPP
