#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "modmon/core/error.hpp"
#include "modmon/core/rng.hpp"

namespace modmon::core {

// Kleisli arrow X -> R Y as a finite map; unmapped keys go to unit.
template <class Key, class Value>
struct Subst {
  std::map<Key, Value> images;
};

// Runtime bundle of a monad presented by unit and bind. Nothing here is
// assumed lawful; the harness checks it.
template <class Key, class Value>
struct MonadInstance {
  using key_type = Key;
  using value_type = Value;
  using subst_type = Subst<Key, Value>;

  std::string name;
  std::function<Key(Rng&)> generate_key;
  // `depth` extra fresh slots may occur in the generated value.
  std::function<Value(Rng&, std::size_t size, std::size_t depth)> generate;
  std::function<subst_type(Rng&, std::size_t size)> generate_subst;
  std::function<Value(const Key&)> unit;
  std::function<Value(const subst_type&, const Value&)> bind;
  std::function<bool(const Value&, const Value&)> equal;
  std::function<std::string(const Value&)> show;
  std::function<std::string(const Key&)> show_key;

  // Derivation structure, absent for monads without binders: the unit at
  // the fresh slot and the inclusion R X -> R (Maybe X).
  std::function<Value()> fresh;
  std::function<Value(const Value&)> weaken;

  bool derivable() const { return static_cast<bool>(fresh) && static_cast<bool>(weaken); }
};

template <class Key, class Value>
Value lookup(const MonadInstance<Key, Value>& m, const Subst<Key, Value>& s, const Key& k) {
  if (auto it = s.images.find(k); it != s.images.end()) return it->second;
  return m.unit(k);
}

// The Kleisli composite u |-> bind g (f u).
template <class Key, class Value>
Subst<Key, Value> compose(const MonadInstance<Key, Value>& m, const Subst<Key, Value>& f,
                          const Subst<Key, Value>& g) {
  Subst<Key, Value> out;
  for (const auto& [k, v] : f.images) out.images.emplace(k, m.bind(g, v));
  for (const auto& [k, v] : g.images) out.images.emplace(k, v);
  return out;
}

// gamma : Maybe . R -> R . Maybe. nullopt is the fresh marker.
template <class Key, class Value>
Value maybe_gamma(const MonadInstance<Key, Value>& m, const std::optional<Value>& v) {
  if (!m.derivable()) throw ConfigurationError("monad '" + m.name + "' has no fresh slot");
  return v ? m.weaken(*v) : m.fresh();
}

// Pushes every image of `s` through gamma, giving a substitution over the
// alphabet extended by one slot that fixes the slot.
template <class Key, class Value>
Subst<Key, Value> lift_subst(const MonadInstance<Key, Value>& m, const Subst<Key, Value>& s) {
  Subst<Key, Value> out;
  for (const auto& [k, v] : s.images) out.images.emplace(k, maybe_gamma(m, std::optional<Value>(v)));
  return out;
}

template <class Key, class Value>
std::string show_subst(const MonadInstance<Key, Value>& m, const Subst<Key, Value>& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, v] : s.images) {
    out << (first ? "" : ", ") << m.show_key(k) << " := " << m.show(v);
    first = false;
  }
  out << '}';
  return out.str();
}

// Left module over `base`. `generate(rng, size, extra)` yields a carrier
// element with `extra` additional fresh slots, which is how derivation
// reaches the generator.
template <class Key, class Value, class Carrier>
struct ModuleInstance {
  using monad_type = MonadInstance<Key, Value>;
  using carrier_type = Carrier;

  std::string name;
  monad_type base;
  std::function<Carrier(Rng&, std::size_t size, std::size_t extra)> generate;
  std::function<Carrier(const Subst<Key, Value>&, const Carrier&)> mbind;
  std::function<bool(const Carrier&, const Carrier&)> equal;
  std::function<std::string(const Carrier&)> show;
  // Replaces the innermost fresh slot; needed by the evaluation morphism.
  std::function<Carrier(const Carrier&, const Value&)> substitute_fresh;
  // Inserts a new slot at position `cutoff`, renumbering slots at or above
  // it; needed by the inclusions of M' into M''.
  std::function<Carrier(const Carrier&, std::size_t cutoff)> weaken_above;
};

// R as a left module over itself.
template <class Key, class Value>
ModuleInstance<Key, Value, Value> tautological(const MonadInstance<Key, Value>& m) {
  ModuleInstance<Key, Value, Value> mod;
  mod.name = m.name;
  mod.base = m;
  mod.generate = m.generate;
  mod.mbind = m.bind;
  mod.equal = m.equal;
  mod.show = m.show;
  return mod;
}

// Constant functor at a fixed set; the action ignores the substitution.
template <class Key, class Value, class Carrier>
ModuleInstance<Key, Value, Carrier> constant_module(
    const MonadInstance<Key, Value>& m, std::string name, std::function<Carrier(Rng&)> generate,
    std::function<std::string(const Carrier&)> show) {
  ModuleInstance<Key, Value, Carrier> mod;
  mod.name = std::move(name);
  mod.base = m;
  mod.generate = [generate = std::move(generate)](Rng& rng, std::size_t, std::size_t) {
    return generate(rng);
  };
  mod.mbind = [](const Subst<Key, Value>&, const Carrier& c) { return c; };
  mod.equal = [](const Carrier& a, const Carrier& b) { return a == b; };
  mod.show = std::move(show);
  mod.substitute_fresh = [](const Carrier& c, const Value&) { return c; };
  mod.weaken_above = [](const Carrier& c, std::size_t) { return c; };
  return mod;
}

// A carrier map between module carriers.
template <class From, class To>
using CarrierMap = std::function<To(const From&)>;

// Monad morphism descriptor; laws are validated by sampling where used.
template <class Key, class Source, class Target>
struct MonadMorphism {
  std::string name;
  MonadInstance<Key, Source> source;
  MonadInstance<Key, Target> target;
  std::function<Target(const Source&)> map;
};

template <class Key, class Source, class Target>
Subst<Key, Target> map_subst(const MonadMorphism<Key, Source, Target>& f,
                             const Subst<Key, Source>& s) {
  Subst<Key, Target> out;
  for (const auto& [k, v] : s.images) out.images.emplace(k, f.map(v));
  return out;
}

}  // namespace modmon::core
