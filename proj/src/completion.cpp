#include "mirror/completion.hpp"

#include <utility>
#include <vector>

namespace mirror {

namespace {

bool is_unary(TermKind k) {
  return k != TermKind::Base && k != TermKind::SelfRef;
}

// Constructor occurrences from root to leaf. Terms are unary chains, so a
// traversal is a walk down this vector.
std::vector<const Term*> chain_of(const Term& t) {
  std::vector<const Term*> chain;
  const Term* cur = &t;
  chain.push_back(cur);
  while (is_unary(cur->kind())) {
    cur = &cur->child();
    chain.push_back(cur);
  }
  return chain;
}

Term rewrap(const Term& original, Term new_child) {
  switch (original.kind()) {
    case TermKind::Node: return Term::node(std::move(new_child));
    case TermKind::Cap: return Term::cap(std::move(new_child));
    case TermKind::Enter: return Term::enter(std::move(new_child));
    default: return Term::named(original.label(), std::move(new_child));
  }
}

}  // namespace

CompletionResult complete(const Term& t) {
  std::vector<const Term*> chain = chain_of(t);
  std::size_t rewrites = 0;
  // Rebuild from the leaf up. A rewrite wraps the occurrence in node; the
  // occurrences inside it are final and are not revisited.
  Term rebuilt = *chain.back();
  for (std::size_t i = chain.size() - 1;; --i) {
    const Term& occ = *chain[i];
    if (i + 1 < chain.size()) rebuilt = rewrap(occ, std::move(rebuilt));
    if (is_paradox(occ)) {
      bool under_node = i > 0 && chain[i - 1]->kind() == TermKind::Node;
      if (!under_node) {
        rebuilt = Term::node(std::move(rebuilt));
        ++rewrites;
      }
    }
    if (i == 0) break;
  }
  return CompletionResult{std::move(rebuilt), rewrites};
}

bool is_stratified(const Term& t) {
  std::vector<const Term*> chain = chain_of(t);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_paradox(*chain[i])) continue;
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (is_paradox(*chain[j])) return false;
    }
  }
  return true;
}

bool is_mirror_canonical(const Term& t) {
  std::vector<const Term*> chain = chain_of(t);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_paradox(*chain[i])) continue;
    if (i == 0 || chain[i - 1]->kind() != TermKind::Node) return false;
  }
  return true;
}

bool equivalent_mod_completion(const Term& a, const Term& b) {
  return complete(a).canonical == complete(b).canonical;
}

}  // namespace mirror
