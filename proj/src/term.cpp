#include "mirror/term.hpp"

#include <cassert>
#include <utility>

namespace mirror {

struct Term::Rep {
  TermKind kind;
  Term child;  // null for Base and SelfRef
  std::string label;

  Rep(TermKind k, Term c, std::string l)
      : kind(k), child(std::move(c)), label(std::move(l)) {}

  // Unlink uniquely-owned descendants iteratively so that dropping a long
  // unary chain cannot overflow the stack.
  ~Rep() {
    Term cur = std::move(child);
    while (cur.rep_ && cur.rep_.use_count() == 1) {
      Term next = std::move(cur.rep_->child);
      cur = std::move(next);
    }
  }
};

Term Term::base() {
  static const Term t{std::make_shared<Rep>(TermKind::Base, Term{}, std::string{})};
  return t;
}

Term Term::self_ref() {
  static const Term t{std::make_shared<Rep>(TermKind::SelfRef, Term{}, std::string{})};
  return t;
}

Term Term::node(Term child) {
  return Term{std::make_shared<Rep>(TermKind::Node, std::move(child), std::string{})};
}

Term Term::cap(Term child) {
  return Term{std::make_shared<Rep>(TermKind::Cap, std::move(child), std::string{})};
}

Term Term::enter(Term child) {
  return Term{std::make_shared<Rep>(TermKind::Enter, std::move(child), std::string{})};
}

Term Term::named(std::string label, Term child) {
  return Term{std::make_shared<Rep>(TermKind::Named, std::move(child), std::move(label))};
}

TermKind Term::kind() const noexcept {
  return rep_->kind;
}

const std::string& Term::label() const {
  assert(rep_->kind == TermKind::Named);
  return rep_->label;
}

const Term& Term::child() const {
  assert(rep_->kind != TermKind::Base && rep_->kind != TermKind::SelfRef);
  return rep_->child;
}

bool operator==(const Term& lhs, const Term& rhs) noexcept {
  const Term::Rep* a = lhs.rep_.get();
  const Term::Rep* b = rhs.rep_.get();
  // Terms are unary chains, so structural comparison is a walk down both.
  while (a != b) {
    if (a == nullptr || b == nullptr) return false;
    if (a->kind != b->kind) return false;
    if (a->kind == TermKind::Named && a->label != b->label) return false;
    a = a->child.rep_.get();
    b = b->child.rep_.get();
  }
  return true;
}

const char* to_string(MirrorState state) noexcept {
  switch (state) {
    case MirrorState::Normal: return "Normal";
    case MirrorState::Paradox: return "Paradox";
    case MirrorState::Integrate: return "Integrate";
    case MirrorState::Reentry: return "Reentry";
  }
  return "Normal";
}

bool is_paradox(const Term& t) noexcept {
  return t.kind() == TermKind::Named && t.child().kind() == TermKind::SelfRef;
}

MirrorState classify(const Term& t) noexcept {
  if (is_paradox(t)) return MirrorState::Paradox;
  switch (t.kind()) {
    case TermKind::Cap: return MirrorState::Integrate;
    case TermKind::Enter: return MirrorState::Reentry;
    default: return MirrorState::Normal;
  }
}

bool is_value(const Term& t) noexcept {
  const Term* cur = &t;
  while (cur->kind() == TermKind::Named) {
    if (is_paradox(*cur)) return false;
    cur = &cur->child();
  }
  return cur->kind() == TermKind::Base || cur->kind() == TermKind::SelfRef;
}

std::size_t term_size(const Term& t) noexcept {
  std::size_t n = 1;
  const Term* cur = &t;
  while (cur->kind() != TermKind::Base && cur->kind() != TermKind::SelfRef) {
    cur = &cur->child();
    ++n;
  }
  return n;
}

std::size_t node_depth_prefix(const Term& t) noexcept {
  std::size_t n = 0;
  const Term* cur = &t;
  while (cur->kind() == TermKind::Node) {
    cur = &cur->child();
    ++n;
  }
  return n;
}

}  // namespace mirror
