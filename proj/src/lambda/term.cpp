#include "modmon/lambda/term.hpp"

#include <stdexcept>

#include "modmon/core/error.hpp"

namespace modmon::lambda {

struct LcTerm::Node {
  Kind kind = Kind::var;
  VarRef var;
  std::vector<LcTerm> children;
};

LcTerm LcTerm::var(VarRef v) {
  auto n = std::make_shared<Node>();
  n->var = std::move(v);
  return LcTerm(std::move(n));
}

LcTerm LcTerm::app(LcTerm fun, LcTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::app;
  n->children = {std::move(fun), std::move(arg)};
  return LcTerm(std::move(n));
}

LcTerm LcTerm::abs(LcTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::abs;
  n->children = {std::move(body)};
  return LcTerm(std::move(n));
}

LcTerm::Kind LcTerm::kind() const { return node_->kind; }

const VarRef& LcTerm::as_var() const {
  if (node_->kind != Kind::var) throw std::logic_error("LcTerm::as_var on non-variable");
  return node_->var;
}

const LcTerm& LcTerm::fun() const {
  if (node_->kind != Kind::app) throw std::logic_error("LcTerm::fun on non-application");
  return node_->children[0];
}

const LcTerm& LcTerm::arg() const {
  if (node_->kind != Kind::app) throw std::logic_error("LcTerm::arg on non-application");
  return node_->children[1];
}

const LcTerm& LcTerm::body() const {
  if (node_->kind != Kind::abs) throw std::logic_error("LcTerm::body on non-abstraction");
  return node_->children[0];
}

bool operator==(const LcTerm& a, const LcTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LcTerm::Kind::var:
      return a.as_var() == b.as_var();
    case LcTerm::Kind::app:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case LcTerm::Kind::abs:
      return a.body() == b.body();
  }
  return false;
}

std::size_t size(const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      return 1;
    case LcTerm::Kind::app:
      return 1 + size(t.fun()) + size(t.arg());
    case LcTerm::Kind::abs:
      return 1 + size(t.body());
  }
  return 0;
}

namespace {

void collect_free(const LcTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* f = std::get_if<Free>(&t.as_var())) out.insert(f->name);
      return;
    case LcTerm::Kind::app:
      collect_free(t.fun(), out);
      collect_free(t.arg(), out);
      return;
    case LcTerm::Kind::abs:
      collect_free(t.body(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_names(const LcTerm& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

void check_scoped(const LcTerm& t, std::size_t depth) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= depth)
        throw MalformedTermError("bound index " + std::to_string(b->index) + " escapes " +
                                 std::to_string(depth) + " binders");
      return;
    case LcTerm::Kind::app:
      check_scoped(t.fun(), depth);
      check_scoped(t.arg(), depth);
      return;
    case LcTerm::Kind::abs:
      check_scoped(t.body(), depth + 1);
      return;
  }
}

bool is_scoped(const LcTerm& t, std::size_t depth) {
  try {
    check_scoped(t, depth);
    return true;
  } catch (const MalformedTermError&) {
    return false;
  }
}

bool occurs_bound(const LcTerm& t, std::size_t index) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var())) return b->index == index;
      return false;
    case LcTerm::Kind::app:
      return occurs_bound(t.fun(), index) || occurs_bound(t.arg(), index);
    case LcTerm::Kind::abs:
      return occurs_bound(t.body(), index + 1);
  }
  return false;
}

namespace {

// Adds `by` to every index at or above `cutoff`.
LcTerm shift_by(const LcTerm& t, std::size_t cutoff, std::size_t by) {
  if (by == 0) return t;
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= cutoff)
        return LcTerm::bound(b->index + by);
      return t;
    case LcTerm::Kind::app:
      return LcTerm::app(shift_by(t.fun(), cutoff, by), shift_by(t.arg(), cutoff, by));
    case LcTerm::Kind::abs:
      return LcTerm::abs(shift_by(t.body(), cutoff + 1, by));
  }
  return t;
}

LcTerm unshift_above(const LcTerm& t, std::size_t cutoff) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= cutoff) {
        if (b->index == cutoff) throw MalformedTermError("lc_unshift: slot still occurs");
        return LcTerm::bound(b->index - 1);
      }
      return t;
    case LcTerm::Kind::app:
      return LcTerm::app(unshift_above(t.fun(), cutoff), unshift_above(t.arg(), cutoff));
    case LcTerm::Kind::abs:
      return LcTerm::abs(unshift_above(t.body(), cutoff + 1));
  }
  return t;
}

}  // namespace

LcTerm shift_above(const LcTerm& t, std::size_t cutoff) { return shift_by(t, cutoff, 1); }

LcTerm lc_shift(const LcTerm& t) { return shift_by(t, 0, 1); }

LcTerm lc_unshift(const LcTerm& t) { return unshift_above(t, 0); }

namespace {

LcTerm subst_free(const LcSubst& s, const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* f = std::get_if<Free>(&t.as_var())) {
        // Images are closed, so shifting them under binders is the identity.
        if (auto it = s.images.find(f->name); it != s.images.end()) return it->second;
      }
      return t;
    case LcTerm::Kind::app:
      return LcTerm::app(subst_free(s, t.fun()), subst_free(s, t.arg()));
    case LcTerm::Kind::abs:
      return LcTerm::abs(subst_free(s, t.body()));
  }
  return t;
}

LcTerm subst0_at(const LcTerm& t, const LcTerm& u, std::size_t depth) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var())) {
        if (b->index < depth) return t;
        if (b->index == depth) return shift_by(u, 0, depth);
        return LcTerm::bound(b->index - 1);
      }
      return t;
    case LcTerm::Kind::app:
      return LcTerm::app(subst0_at(t.fun(), u, depth), subst0_at(t.arg(), u, depth));
    case LcTerm::Kind::abs:
      return LcTerm::abs(subst0_at(t.body(), u, depth + 1));
  }
  return t;
}

}  // namespace

LcTerm lc_subst(const LcSubst& s, const LcTerm& t) {
  for (const auto& [name, image] : s.images) {
    if (!is_scoped(image, 0))
      throw MalformedTermError("image of '" + name + "' is not closed at depth 0");
  }
  return subst_free(s, t);
}

LcTerm lc_subst0(const LcTerm& t, const LcTerm& u) { return subst0_at(t, u, 0); }

LcTerm lc_rename(const core::NameMap& renaming, const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* f = std::get_if<Free>(&t.as_var())) {
        if (auto it = renaming.find(f->name); it != renaming.end()) return LcTerm::free(it->second);
      }
      return t;
    case LcTerm::Kind::app:
      return LcTerm::app(lc_rename(renaming, t.fun()), lc_rename(renaming, t.arg()));
    case LcTerm::Kind::abs:
      return LcTerm::abs(lc_rename(renaming, t.body()));
  }
  return t;
}

core::ScopedTerm to_scoped(const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      return core::ScopedTerm::var(t.as_var());
    case LcTerm::Kind::app:
      return core::ScopedTerm::op(0, {to_scoped(t.fun()), to_scoped(t.arg())});
    case LcTerm::Kind::abs:
      return core::ScopedTerm::op(1, {to_scoped(t.body())});
  }
  throw std::logic_error("unreachable");
}

LcTerm from_scoped(const core::ScopedTerm& t) {
  if (t.is_var()) return LcTerm::var(t.as_var());
  const auto args = t.args();
  switch (t.op_index()) {
    case 0:
      if (args.size() != 2) throw MalformedTermError("app expects 2 arguments");
      return LcTerm::app(from_scoped(args[0]), from_scoped(args[1]));
    case 1:
      if (args.size() != 1) throw MalformedTermError("abs expects 1 argument");
      return LcTerm::abs(from_scoped(args[0]));
    default:
      throw MalformedTermError("operator index " + std::to_string(t.op_index()) +
                               " is not in the lambda signature");
  }
}

}  // namespace modmon::lambda
