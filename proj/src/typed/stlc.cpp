#include "modmon/typed/stlc.hpp"

#include <stdexcept>

#include "modmon/core/error.hpp"

namespace modmon::typed {

struct SimpleType::Node {
  SimpleType dom;
  SimpleType cod;
};

SimpleType SimpleType::base() { return SimpleType(nullptr); }

SimpleType SimpleType::arrow(SimpleType dom, SimpleType cod) {
  return SimpleType(std::make_shared<const Node>(Node{std::move(dom), std::move(cod)}));
}

const SimpleType& SimpleType::dom() const {
  if (!node_) throw std::logic_error("SimpleType::dom on base type");
  return node_->dom;
}

const SimpleType& SimpleType::cod() const {
  if (!node_) throw std::logic_error("SimpleType::cod on base type");
  return node_->cod;
}

bool operator==(const SimpleType& a, const SimpleType& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_base()) return std::strong_ordering::less;
  if (b.is_base()) return std::strong_ordering::greater;
  if (auto c = a.dom() <=> b.dom(); c != 0) return c;
  return a.cod() <=> b.cod();
}

std::string format_type(const SimpleType& t) {
  if (t.is_base()) return "*";
  const std::string dom = format_type(t.dom());
  return (t.dom().is_base() ? dom : "(" + dom + ")") + " -> " + format_type(t.cod());
}

struct StlcTerm::Node {
  Kind kind = Kind::var;
  TypedVarRef var;
  SimpleType binder = SimpleType::base();
  std::vector<StlcTerm> children;
};

StlcTerm StlcTerm::free(std::string name, SimpleType type) {
  auto n = std::make_shared<Node>();
  n->var = TypedName{std::move(name), std::move(type)};
  return StlcTerm(std::move(n));
}

StlcTerm StlcTerm::bound(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->var = Bound{index};
  return StlcTerm(std::move(n));
}

StlcTerm StlcTerm::app(StlcTerm fun, StlcTerm arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::app;
  n->children = {std::move(fun), std::move(arg)};
  return StlcTerm(std::move(n));
}

StlcTerm StlcTerm::abs(SimpleType binder, StlcTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::abs;
  n->binder = std::move(binder);
  n->children = {std::move(body)};
  return StlcTerm(std::move(n));
}

StlcTerm::Kind StlcTerm::kind() const { return node_->kind; }

const TypedVarRef& StlcTerm::as_var() const {
  if (node_->kind != Kind::var) throw std::logic_error("StlcTerm::as_var on non-variable");
  return node_->var;
}

const StlcTerm& StlcTerm::fun() const {
  if (node_->kind != Kind::app) throw std::logic_error("StlcTerm::fun on non-application");
  return node_->children[0];
}

const StlcTerm& StlcTerm::arg() const {
  if (node_->kind != Kind::app) throw std::logic_error("StlcTerm::arg on non-application");
  return node_->children[1];
}

const SimpleType& StlcTerm::binder() const {
  if (node_->kind != Kind::abs) throw std::logic_error("StlcTerm::binder on non-abstraction");
  return node_->binder;
}

const StlcTerm& StlcTerm::body() const {
  if (node_->kind != Kind::abs) throw std::logic_error("StlcTerm::body on non-abstraction");
  return node_->children[0];
}

bool operator==(const StlcTerm& a, const StlcTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case StlcTerm::Kind::var:
      return a.as_var() == b.as_var();
    case StlcTerm::Kind::app:
      return a.fun() == b.fun() && a.arg() == b.arg();
    case StlcTerm::Kind::abs:
      return a.binder() == b.binder() && a.body() == b.body();
  }
  return false;
}

std::size_t size(const StlcTerm& t) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      return 1;
    case StlcTerm::Kind::app:
      return 1 + size(t.fun()) + size(t.arg());
    case StlcTerm::Kind::abs:
      return 1 + size(t.body());
  }
  return 0;
}

namespace {

SimpleType synth(const TypeContext& ctx, const StlcTerm& t, std::vector<SimpleType>& slots,
                 const std::string& path) {
  switch (t.kind()) {
    case StlcTerm::Kind::var: {
      if (const auto* b = std::get_if<Bound>(&t.as_var())) {
        if (b->index >= slots.size())
          throw TypeError(path + ": bound index " + std::to_string(b->index) + " is not in scope");
        return slots[slots.size() - 1 - b->index];
      }
      const auto& v = std::get<TypedName>(t.as_var());
      if (auto it = ctx.find(v.name); it != ctx.end() && it->second != v.type)
        throw TypeError(path + ": '" + v.name + "' is annotated " + format_type(v.type) +
                        " but the context says " + format_type(it->second));
      return v.type;
    }
    case StlcTerm::Kind::app: {
      const SimpleType f = synth(ctx, t.fun(), slots, path + ".fun");
      const SimpleType a = synth(ctx, t.arg(), slots, path + ".arg");
      if (f.is_base())
        throw TypeError(path + ": applying a term of type " + format_type(f) +
                        ", which is not a function type");
      if (f.dom() != a)
        throw TypeError(path + ": argument has type " + format_type(a) + ", expected " +
                        format_type(f.dom()));
      return f.cod();
    }
    case StlcTerm::Kind::abs: {
      slots.push_back(t.binder());
      const SimpleType body = synth(ctx, t.body(), slots, path + ".body");
      slots.pop_back();
      return SimpleType::arrow(t.binder(), body);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SimpleType typecheck(const TypeContext& ctx, const StlcTerm& t,
                     const std::vector<SimpleType>& slots) {
  // `slots` lists slot 0 first; the stack below keeps slot 0 last.
  std::vector<SimpleType> stack(slots.rbegin(), slots.rend());
  return synth(ctx, t, stack, "term");
}

std::optional<SimpleType> try_typecheck(const TypeContext& ctx, const StlcTerm& t,
                                        const std::vector<SimpleType>& slots) {
  try {
    return typecheck(ctx, t, slots);
  } catch (const TypeError&) {
    return std::nullopt;
  }
}

namespace {

StlcTerm subst_free(const StlcSubst& s, const StlcTerm& t) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      if (const auto* v = std::get_if<TypedName>(&t.as_var())) {
        if (auto it = s.images.find(*v); it != s.images.end()) return it->second;
      }
      return t;
    case StlcTerm::Kind::app:
      return StlcTerm::app(subst_free(s, t.fun()), subst_free(s, t.arg()));
    case StlcTerm::Kind::abs:
      return StlcTerm::abs(t.binder(), subst_free(s, t.body()));
  }
  return t;
}

}  // namespace

StlcTerm stlc_subst(const StlcSubst& s, const StlcTerm& t) {
  for (const auto& [key, image] : s.images) {
    const SimpleType actual = typecheck({}, image);
    if (actual != key.type)
      throw TypeError("image of '" + key.name + "' has type " + format_type(actual) +
                      ", expected " + format_type(key.type));
  }
  return subst_free(s, t);
}

namespace {

StlcTerm shift_by(const StlcTerm& t, std::size_t cutoff, std::size_t by) {
  if (by == 0) return t;
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= cutoff)
        return StlcTerm::bound(b->index + by);
      return t;
    case StlcTerm::Kind::app:
      return StlcTerm::app(shift_by(t.fun(), cutoff, by), shift_by(t.arg(), cutoff, by));
    case StlcTerm::Kind::abs:
      return StlcTerm::abs(t.binder(), shift_by(t.body(), cutoff + 1, by));
  }
  return t;
}

StlcTerm unshift(const StlcTerm& t, std::size_t cutoff) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= cutoff) {
        if (b->index == cutoff) throw MalformedTermError("unshift: slot still occurs");
        return StlcTerm::bound(b->index - 1);
      }
      return t;
    case StlcTerm::Kind::app:
      return StlcTerm::app(unshift(t.fun(), cutoff), unshift(t.arg(), cutoff));
    case StlcTerm::Kind::abs:
      return StlcTerm::abs(t.binder(), unshift(t.body(), cutoff + 1));
  }
  return t;
}

bool occurs(const StlcTerm& t, std::size_t index) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var())) return b->index == index;
      return false;
    case StlcTerm::Kind::app:
      return occurs(t.fun(), index) || occurs(t.arg(), index);
    case StlcTerm::Kind::abs:
      return occurs(t.body(), index + 1);
  }
  return false;
}

StlcTerm subst0_at(const StlcTerm& t, const StlcTerm& u, std::size_t depth) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var())) {
        if (b->index < depth) return t;
        if (b->index == depth) return shift_by(u, 0, depth);
        return StlcTerm::bound(b->index - 1);
      }
      return t;
    case StlcTerm::Kind::app:
      return StlcTerm::app(subst0_at(t.fun(), u, depth), subst0_at(t.arg(), u, depth));
    case StlcTerm::Kind::abs:
      return StlcTerm::abs(t.binder(), subst0_at(t.body(), u, depth + 1));
  }
  return t;
}

}  // namespace

ScopedStlc delta_extend(const SimpleType& t, const ScopedStlc& m) {
  std::vector<SimpleType> slots{t};
  slots.insert(slots.end(), m.slots.begin(), m.slots.end());
  return ScopedStlc{std::move(slots), shift_by(m.term, 0, 1)};
}

StlcTerm stlc_shift_above(const StlcTerm& t, std::size_t cutoff) { return shift_by(t, cutoff, 1); }

StlcTerm stlc_subst0(const StlcTerm& t, const StlcTerm& u) { return subst0_at(t, u, 0); }

std::optional<StlcTerm> stlc_beta_step(const StlcTerm& t) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      return std::nullopt;
    case StlcTerm::Kind::abs:
      if (auto b = stlc_beta_step(t.body())) return StlcTerm::abs(t.binder(), std::move(*b));
      return std::nullopt;
    case StlcTerm::Kind::app:
      if (t.fun().is_abs()) return stlc_subst0(t.fun().body(), t.arg());
      if (auto f = stlc_beta_step(t.fun())) return StlcTerm::app(std::move(*f), t.arg());
      if (auto a = stlc_beta_step(t.arg())) return StlcTerm::app(t.fun(), std::move(*a));
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<StlcTerm> stlc_eta_step(const StlcTerm& t) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      return std::nullopt;
    case StlcTerm::Kind::abs: {
      const StlcTerm& body = t.body();
      if (body.is_app() && body.arg().is_var()) {
        const auto* b = std::get_if<Bound>(&body.arg().as_var());
        if (b && b->index == 0 && !occurs(body.fun(), 0)) return unshift(body.fun(), 0);
      }
      if (auto next = stlc_eta_step(body)) return StlcTerm::abs(t.binder(), std::move(*next));
      return std::nullopt;
    }
    case StlcTerm::Kind::app:
      if (auto f = stlc_eta_step(t.fun())) return StlcTerm::app(std::move(*f), t.arg());
      if (auto a = stlc_eta_step(t.arg())) return StlcTerm::app(t.fun(), std::move(*a));
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<StlcTerm> stlc_normalize(const StlcTerm& t, Fuel& fuel) {
  StlcTerm cur = t;
  while (auto next = stlc_beta_step(cur)) {
    if (!fuel.consume() || size(*next) > kMaxTermSize) return std::nullopt;
    cur = std::move(*next);
  }
  while (auto next = stlc_eta_step(cur)) {
    if (!fuel.consume()) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

}  // namespace modmon::typed
