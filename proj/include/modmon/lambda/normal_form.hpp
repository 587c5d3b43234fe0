#pragma once

#include <functional>
#include <optional>
#include <string>

#include "modmon/core/error.hpp"
#include "modmon/core/instance.hpp"
#include "modmon/lambda/reduce.hpp"
#include "modmon/lambda/term.hpp"

namespace modmon::lambda {

// A beta-normal, eta-reduced term: the canonical representative of its
// beta-eta class.
class NfTerm {
 public:
  // Throws MalformedTermError when `t` has a beta or eta redex.
  static NfTerm certify(LcTerm t);

  const LcTerm& term() const { return term_; }

  friend bool operator==(const NfTerm& a, const NfTerm& b) { return a.term_ == b.term_; }

 private:
  explicit NfTerm(LcTerm t) : term_(std::move(t)) {}
  LcTerm term_;
};

bool is_normal(const LcTerm& t);

// Beta to normal form leftmost-outermost, then eta to a fixed point. Returns
// nullopt when `fuel` runs out.
std::optional<NfTerm> normalize(const LcTerm& t, Fuel& fuel);

enum class Equivalence { equivalent, inequivalent, inconclusive };

std::string to_string(Equivalence e);

// Both sides get a fresh budget of `fuel` steps.
Equivalence beta_eta_equiv(const LcTerm& a, const LcTerm& b, std::size_t fuel);

using NfSubst = core::Subst<std::string, NfTerm>;

// normalize (lc_subst s t)
std::optional<NfTerm> nf_bind(const NfSubst& s, const NfTerm& t, Fuel& fuel);

// app(shift t, 0) renormalized; the result lives one scope deeper.
NfTerm exp_app1(const NfTerm& t);

// abs(t), eta-contracted at the root when that forms a redex.
NfTerm exp_abs(const NfTerm& t);

// Substitutes `u` for slot 0 of `t` and renormalizes.
std::optional<NfTerm> nf_subst0(const NfTerm& t, const NfTerm& u, Fuel& fuel);

// Exponential structure of a monad with binders, as consumed by iota_fold:
// `bound(k)` is the unit at slot k, `weaken` the inclusion into one more
// slot, `subst_fresh(v, u)` the bind that sends slot 0 of v to u and every
// other variable to its unit.
template <class Value>
struct ExpStructure {
  std::string name;
  std::function<Value(std::size_t)> bound;
  std::function<Value(const Value&)> weaken;
  std::function<Value(const Value&)> exp_abs;
  std::function<Value(const Value&)> exp_app;
  std::function<Value(const Value&, const Value&)> subst_fresh;
};

namespace detail {

template <class Value>
Value iota(const ExpStructure<Value>& e, const LcTerm& t,
           const std::function<Value(const std::string&)>& env, std::size_t depth) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* b = std::get_if<Bound>(&t.as_var())) return e.bound(b->index);
      {
        Value v = env(std::get<Free>(t.as_var()).name);
        for (std::size_t i = 0; i < depth; ++i) v = e.weaken(v);
        return v;
      }
    case LcTerm::Kind::app:
      return e.subst_fresh(e.exp_app(iota(e, t.fun(), env, depth)), iota(e, t.arg(), env, depth));
    case LcTerm::Kind::abs:
      return e.exp_abs(iota(e, t.body(), env, depth + 1));
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

// The initial morphism into an exponential monad: variables go to `env`,
// abstraction to exp_abs, application x y to exp_app(x) with the fresh slot
// bound to y. Throws ConfigurationError when the structure is incomplete.
template <class Value>
Value iota_fold(const ExpStructure<Value>& e, const LcTerm& t,
                const std::function<Value(const std::string&)>& env) {
  if (!e.bound || !e.weaken || !e.exp_abs || !e.exp_app || !e.subst_fresh)
    throw ConfigurationError("'" + e.name + "' is not an exponential structure");
  check_scoped(t);
  return detail::iota(e, t, env, 0);
}

// Exponential structure of normal forms. Rewrites draw from `fuel`;
// exhaustion surfaces as FuelExhausted.
ExpStructure<NfTerm> nf_exp_structure(Fuel& fuel);

// Syntactic terms carry abs but no inverse to it, so the structure lacks
// exp_app.
ExpStructure<LcTerm> lc_partial_exp_structure();

// iota_fold into normal forms with free names sent to themselves.
std::optional<NfTerm> nf_iota_fold(const LcTerm& t, Fuel& fuel);

}  // namespace modmon::lambda
