#pragma once

// Reference implementations used to check the library. They share no code
// with it beyond the term types they convert from and to.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modmon/lambda/term.hpp"

namespace oracle {

// Named lambda terms, substitution by renaming.
struct Named {
  enum Kind { var, app, abs } kind;
  std::string name;  // var name or binder name
  std::shared_ptr<const Named> a, b;
};
using NamedPtr = std::shared_ptr<const Named>;

inline NamedPtr nvar(std::string x) { return std::make_shared<Named>(Named{Named::var, x, {}, {}}); }
inline NamedPtr napp(NamedPtr f, NamedPtr x) {
  return std::make_shared<Named>(Named{Named::app, "", f, x});
}
inline NamedPtr nabs(std::string x, NamedPtr body) {
  return std::make_shared<Named>(Named{Named::abs, x, body, {}});
}

inline std::set<std::string> fv(const NamedPtr& t) {
  switch (t->kind) {
    case Named::var:
      return {t->name};
    case Named::app: {
      auto s = fv(t->a);
      auto r = fv(t->b);
      s.insert(r.begin(), r.end());
      return s;
    }
    case Named::abs: {
      auto s = fv(t->a);
      s.erase(t->name);
      return s;
    }
  }
  return {};
}

inline std::size_t nsize(const NamedPtr& t) {
  if (t->kind == Named::var) return 1;
  if (t->kind == Named::app) return 1 + nsize(t->a) + nsize(t->b);
  return 1 + nsize(t->a);
}

class Reducer {
 public:
  // t[x := u]
  NamedPtr subst(const NamedPtr& t, const std::string& x, const NamedPtr& u) {
    switch (t->kind) {
      case Named::var:
        return t->name == x ? u : t;
      case Named::app:
        return napp(subst(t->a, x, u), subst(t->b, x, u));
      case Named::abs: {
        if (t->name == x) return t;
        const auto fu = fv(u);
        if (!fu.count(t->name)) return nabs(t->name, subst(t->a, x, u));
        const std::string y = "_r" + std::to_string(counter_++);
        return nabs(y, subst(subst(t->a, t->name, nvar(y)), x, u));
      }
    }
    return t;
  }

  // Normal order.
  std::optional<NamedPtr> beta(const NamedPtr& t) {
    switch (t->kind) {
      case Named::var:
        return std::nullopt;
      case Named::app:
        if (t->a->kind == Named::abs) return subst(t->a->a, t->a->name, t->b);
        if (auto f = beta(t->a)) return napp(*f, t->b);
        if (auto x = beta(t->b)) return napp(t->a, *x);
        return std::nullopt;
      case Named::abs:
        if (auto b = beta(t->a)) return nabs(t->name, *b);
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<NamedPtr> eta(const NamedPtr& t) {
    switch (t->kind) {
      case Named::var:
        return std::nullopt;
      case Named::app:
        if (auto f = eta(t->a)) return napp(*f, t->b);
        if (auto x = eta(t->b)) return napp(t->a, *x);
        return std::nullopt;
      case Named::abs: {
        const auto& body = t->a;
        if (body->kind == Named::app && body->b->kind == Named::var && body->b->name == t->name &&
            !fv(body->a).count(t->name))
          return body->a;
        if (auto b = eta(body)) return nabs(t->name, *b);
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::optional<NamedPtr> normalize(NamedPtr t, std::size_t steps, std::size_t max_size) {
    while (auto n = beta(t)) {
      if (steps-- == 0 || nsize(*n) > max_size) return std::nullopt;
      t = *n;
    }
    while (auto n = eta(t)) {
      if (steps-- == 0) return std::nullopt;
      t = *n;
    }
    return t;
  }

 private:
  std::uint64_t counter_ = 0;
};

inline NamedPtr to_named(const modmon::lambda::LcTerm& t, std::vector<std::string>& binders) {
  using modmon::lambda::LcTerm;
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<modmon::Bound>(&t.as_var()))
        return nvar(binders[binders.size() - 1 - b->index]);
      return nvar(std::get<modmon::Free>(t.as_var()).name);
    case LcTerm::Kind::app:
      return napp(to_named(t.fun(), binders), to_named(t.arg(), binders));
    case LcTerm::Kind::abs: {
      binders.push_back("_b" + std::to_string(binders.size()));
      auto body = to_named(t.body(), binders);
      auto out = nabs(binders.back(), body);
      binders.pop_back();
      return out;
    }
  }
  return nullptr;
}

inline NamedPtr to_named(const modmon::lambda::LcTerm& t) {
  std::vector<std::string> binders;
  return to_named(t, binders);
}

inline modmon::lambda::LcTerm from_named(const NamedPtr& t, std::vector<std::string>& binders) {
  using modmon::lambda::LcTerm;
  switch (t->kind) {
    case Named::var:
      for (std::size_t i = binders.size(); i-- > 0;)
        if (binders[i] == t->name) return LcTerm::var(modmon::Bound{binders.size() - 1 - i});
      return LcTerm::var(modmon::Free{t->name});
    case Named::app:
      return LcTerm::app(from_named(t->a, binders), from_named(t->b, binders));
    case Named::abs: {
      binders.push_back(t->name);
      auto body = from_named(t->a, binders);
      binders.pop_back();
      return LcTerm::abs(body);
    }
  }
  throw std::logic_error("unreachable");
}

inline modmon::lambda::LcTerm from_named(const NamedPtr& t) {
  std::vector<std::string> binders;
  return from_named(t, binders);
}

inline std::optional<modmon::lambda::LcTerm> normalize(const modmon::lambda::LcTerm& t,
                                                       std::size_t steps = 10000,
                                                       std::size_t max_size = 2048) {
  Reducer r;
  auto n = r.normalize(to_named(t), steps, max_size);
  if (!n) return std::nullopt;
  return from_named(*n);
}

// Lists: join and bind written out as nested loops.
inline std::vector<std::int64_t> join(const std::vector<std::vector<std::int64_t>>& xss) {
  std::vector<std::int64_t> out;
  for (const auto& xs : xss)
    for (auto x : xs) out.push_back(x);
  return out;
}

// Left fold from the unit, matching the monoid action on lists.
template <class F>
std::int64_t fold(const std::vector<std::int64_t>& xs, std::int64_t unit, F op) {
  std::int64_t acc = unit;
  for (auto x : xs) acc = op(acc, x);
  return acc;
}

// Plus/times trees as strings, every compound operand parenthesized.
struct Pt {
  char op;  // 'v', '+', '*'
  std::string name;
  std::shared_ptr<const Pt> l, r;
};
using PtPtr = std::shared_ptr<const Pt>;
inline PtPtr pv(std::string x) { return std::make_shared<Pt>(Pt{'v', x, {}, {}}); }
inline PtPtr pbin(char op, PtPtr l, PtPtr r) { return std::make_shared<Pt>(Pt{op, "", l, r}); }

inline std::string show(const PtPtr& t) {
  if (t->op == 'v') return t->name;
  auto side = [](const PtPtr& s) { return s->op == 'v' ? show(s) : "(" + show(s) + ")"; };
  return side(t->l) + std::string(1, t->op) + side(t->r);
}
inline PtPtr psubst(const PtPtr& t, const std::map<std::string, PtPtr>& s) {
  if (t->op == 'v') {
    auto it = s.find(t->name);
    return it == s.end() ? t : it->second;
  }
  return pbin(t->op, psubst(t->l, s), psubst(t->r, s));
}
// x -> x+x, + -> *, * -> +
inline PtPtr pn(const PtPtr& t) {
  if (t->op == 'v') return pbin('+', t, t);
  return pbin(t->op == '+' ? '*' : '+', pn(t->l), pn(t->r));
}

}  // namespace oracle
