#ifndef MIRROR_COMPLETION_HPP
#define MIRROR_COMPLETION_HPP

#include <cstddef>

#include "mirror/term.hpp"

namespace mirror {

struct CompletionResult {
  Term canonical;
  std::size_t rewrites_applied;  // paradox occurrences wrapped; 0 iff canonical == input
};

/// Canonicalization: one bottom-up pass that replaces every paradox
/// occurrence p by node(p), except occurrences already directly under a
/// node constructor (which keeps the procedure idempotent).
CompletionResult complete(const Term& t);

/// True iff no paradox subterm of t contains another paradox as a proper
/// subterm. Vacuously true under the root-only paradox predicate, where a
/// paradox's only proper subterm is self_ref.
bool is_stratified(const Term& t);

/// True iff complete would apply zero rewrites to t.
bool is_mirror_canonical(const Term& t);

/// True iff a and b have the same canonical form.
bool equivalent_mod_completion(const Term& a, const Term& b);

}  // namespace mirror

#endif  // MIRROR_COMPLETION_HPP
