#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "modmon/core/error.hpp"
#include "modmon/core/instance.hpp"
#include "modmon/core/laws.hpp"

namespace modmon::modcalc {

using core::CarrierMap;
using core::ModuleInstance;
using core::MonadMorphism;

// M' = M . Maybe. The action pushes the substitution through gamma (the
// fresh slot goes to unit(fresh), old names to their image weakened into
// the extended alphabet) and then acts with M.
template <class Key, class Value, class Carrier>
ModuleInstance<Key, Value, Carrier> derive(const ModuleInstance<Key, Value, Carrier>& mod) {
  if (!mod.base.derivable())
    throw ConfigurationError("cannot derive '" + mod.name + "': monad '" + mod.base.name +
                             "' has no fresh slot");
  ModuleInstance<Key, Value, Carrier> d = mod;
  d.name = mod.name + "'";
  d.generate = [g = mod.generate](Rng& rng, std::size_t size, std::size_t extra) {
    return g(rng, size, extra + 1);
  };
  d.mbind = [base = mod.base, act = mod.mbind](const core::Subst<Key, Value>& s, const Carrier& c) {
    return act(core::lift_subst(base, s), c);
  };
  d.substitute_fresh = nullptr;
  return d;
}

template <class Carrier>
struct SecondDerivativeInclusions {
  // Old slot to the inner (most recent) slot of M''.
  CarrierMap<Carrier, Carrier> to_inner;
  // Old slot to the outer slot of M''.
  CarrierMap<Carrier, Carrier> to_outer;
};

// The two inclusions M' -> M''. The new slot of M'' is inserted above the
// old one (to_inner) or below it (to_outer).
template <class Key, class Value, class Carrier>
SecondDerivativeInclusions<Carrier> second_derivative_inclusions(
    const ModuleInstance<Key, Value, Carrier>& mod) {
  if (!mod.weaken_above)
    throw ConfigurationError("module '" + mod.name + "' cannot rename its slots");
  return {[w = mod.weaken_above](const Carrier& c) { return w(c, 1); },
          [w = mod.weaken_above](const Carrier& c) { return w(c, 0); }};
}

template <class Key, class Value, class A, class B>
ModuleInstance<Key, Value, std::pair<A, B>> product(const ModuleInstance<Key, Value, A>& m1,
                                                    const ModuleInstance<Key, Value, B>& m2) {
  if (m1.base.name != m2.base.name)
    throw ConfigurationError("product of modules over different monads '" + m1.base.name +
                             "' and '" + m2.base.name + "'");
  using Pair = std::pair<A, B>;
  ModuleInstance<Key, Value, Pair> p;
  p.name = m1.name + " x " + m2.name;
  p.base = m1.base;
  p.generate = [g1 = m1.generate, g2 = m2.generate](Rng& rng, std::size_t size, std::size_t extra) {
    A a = g1(rng, size, extra);
    B b = g2(rng, size, extra);
    return Pair{std::move(a), std::move(b)};
  };
  p.mbind = [a1 = m1.mbind, a2 = m2.mbind](const core::Subst<Key, Value>& s, const Pair& c) {
    return Pair{a1(s, c.first), a2(s, c.second)};
  };
  p.equal = [e1 = m1.equal, e2 = m2.equal](const Pair& x, const Pair& y) {
    return e1(x.first, y.first) && e2(x.second, y.second);
  };
  p.show = [s1 = m1.show, s2 = m2.show](const Pair& c) {
    return "<" + s1(c.first) + ", " + s2(c.second) + ">";
  };
  if (m1.substitute_fresh && m2.substitute_fresh)
    p.substitute_fresh = [f1 = m1.substitute_fresh, f2 = m2.substitute_fresh](const Pair& c,
                                                                               const Value& v) {
      return Pair{f1(c.first, v), f2(c.second, v)};
    };
  if (m1.weaken_above && m2.weaken_above)
    p.weaken_above = [w1 = m1.weaken_above, w2 = m2.weaken_above](const Pair& c, std::size_t k) {
      return Pair{w1(c.first, k), w2(c.second, k)};
    };
  return p;
}

template <class Key, class Value, class Carrier>
struct EvalMorphism {
  ModuleInstance<Key, Value, std::pair<Carrier, Value>> source;  // M' x R
  ModuleInstance<Key, Value, Carrier> target;                     // M
  CarrierMap<std::pair<Carrier, Value>, Carrier> map;
};

// eval : M' x R -> M, filling the fresh slot.
template <class Key, class Value, class Carrier>
EvalMorphism<Key, Value, Carrier> eval_morphism(const ModuleInstance<Key, Value, Carrier>& mod) {
  if (!mod.substitute_fresh)
    throw ConfigurationError("module '" + mod.name + "' cannot substitute its fresh slot");
  return {product(derive(mod), core::tautological(mod.base)), mod,
          [fill = mod.substitute_fresh](const std::pair<Carrier, Value>& c) {
            return fill(c.first, c.second);
          }};
}

// f*M: the B-module M seen as an A-module along f : A -> B. `f` is checked
// against the monad-morphism laws on `samples` samples first; a failure is
// a ConfigurationError carrying the counterexample.
template <class Key, class Source, class Target, class Carrier>
ModuleInstance<Key, Source, Carrier> base_change(const MonadMorphism<Key, Source, Target>& f,
                                                 const ModuleInstance<Key, Target, Carrier>& mod,
                                                 std::size_t samples = 200,
                                                 std::uint64_t seed = 0) {
  if (f.target.name != mod.base.name)
    throw ConfigurationError("base change along '" + f.name + "' into '" + f.target.name +
                             "' applied to a module over '" + mod.base.name + "'");
  const core::LawReport check = core::check_monad_morphism(f, samples, seed);
  for (const auto& law : check.laws) {
    if (law.status == core::LawStatus::fail)
      throw ConfigurationError("'" + f.name + "' is not a monad morphism (" + law.law +
                               "): " + *law.counterexample);
  }
  ModuleInstance<Key, Source, Carrier> out;
  out.name = f.name + "*(" + mod.name + ")";
  out.base = f.source;
  out.generate = mod.generate;
  out.mbind = [f, act = mod.mbind](const core::Subst<Key, Source>& s, const Carrier& c) {
    return act(core::map_subst(f, s), c);
  };
  out.equal = mod.equal;
  out.show = mod.show;
  out.weaken_above = mod.weaken_above;
  return out;
}

// Pointwise agreement of two actions over the same monad and carrier.
template <class Key, class Value, class Carrier>
core::LawReport check_actions_agree(const std::string& name,
                                    const ModuleInstance<Key, Value, Carrier>& a,
                                    const ModuleInstance<Key, Value, Carrier>& b,
                                    std::size_t samples, std::uint64_t seed,
                                    const core::HarnessOptions& opts = {}) {
  core::LawReport report{"agreement", name, samples, seed, {}};
  report.laws.push_back(core::check_property(
      name, samples, seed,
      [&](Rng& rng) {
        const std::size_t size = core::draw_size(rng, opts);
        const Carrier x = a.generate(rng, size, 0);
        const auto s = a.base.generate_subst(rng, size);
        return core::detail::compare(a.mbind(s, x), b.mbind(s, x), a.equal, a.show,
                                     "x = " + a.show(x) + "; s = " + core::show_subst(a.base, s));
      },
      opts));
  return report;
}

}  // namespace modmon::modcalc
