#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modmon/core/instance.hpp"
#include "modmon/core/list_monad.hpp"
#include "modmon/core/rng.hpp"

namespace modmon::core {

enum class LawStatus { pass, fail, inconclusive };

std::string to_string(LawStatus s);

struct LawResult {
  std::string law;
  LawStatus status = LawStatus::pass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  // Lowest failing sample and its rendering.
  std::optional<std::size_t> failing_sample;
  std::optional<std::string> counterexample;
  // Generator failure or similar; set together with `inconclusive`.
  std::optional<std::string> note;
};

struct LawReport {
  std::string suite;
  std::string instance;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool all_pass() const;
  const LawResult& law(const std::string& name) const;
  void append(const LawReport& other);
};

// Outcome of one sample of a property.
struct SampleOutcome {
  enum class Kind { holds, violated, skipped };
  Kind kind = Kind::holds;
  std::string witness;

  static SampleOutcome holds() { return {}; }
  static SampleOutcome violated(std::string w) { return {Kind::violated, std::move(w)}; }
  static SampleOutcome skipped() { return {Kind::skipped, {}}; }
};

using Property = std::function<SampleOutcome(Rng&)>;

struct HarnessOptions {
  // Upper bound on generated term size.
  std::size_t max_size = 8;
  // Samples are split across this many threads; results do not depend on it.
  unsigned workers = 1;
};

// Runs `prop` on samples 0..samples-1, each with its own seed derived from
// (seed, index). FuelExhausted marks a sample skipped; GeneratorError makes
// the law inconclusive.
LawResult check_property(const std::string& law, std::size_t samples, std::uint64_t seed,
                         const Property& prop, const HarnessOptions& opts = {});

inline std::size_t draw_size(Rng& rng, const HarnessOptions& opts) {
  return 1 + static_cast<std::size_t>(rng.below(opts.max_size));
}

namespace detail {

template <class T, class Eq, class Show>
SampleOutcome compare(const T& lhs, const T& rhs, const Eq& eq, const Show& show,
                      const std::string& context) {
  if (eq(lhs, rhs)) return SampleOutcome::holds();
  return SampleOutcome::violated(context + "; lhs = " + show(lhs) + "; rhs = " + show(rhs));
}

inline void require_samples(std::size_t samples) {
  if (samples == 0) throw ConfigurationError("samples must be at least 1");
}

}  // namespace detail

// bind g . bind f = bind (bind g . f), bind unit = id, bind f . unit = f.
template <class Key, class Value>
LawReport check_monad_laws(const MonadInstance<Key, Value>& m, std::size_t samples,
                           std::uint64_t seed, const HarnessOptions& opts = {}) {
  detail::require_samples(samples);
  LawReport report{"monad", m.name, samples, seed, {}};

  report.laws.push_back(check_property(
      "bind-bind", samples, seed,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Value t = m.generate(rng, size, 0);
        const auto f = m.generate_subst(rng, size);
        const auto g = m.generate_subst(rng, size);
        const Value lhs = m.bind(g, m.bind(f, t));
        const Value rhs = m.bind(compose(m, f, g), t);
        return detail::compare(lhs, rhs, m.equal, m.show,
                               "t = " + m.show(t) + "; f = " + show_subst(m, f) +
                                   "; g = " + show_subst(m, g));
      },
      opts));

  report.laws.push_back(check_property(
      "bind-unit", samples, seed + 1,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Value t = m.generate(rng, size, 0);
        Subst<Key, Value> units;
        const std::size_t n = rng.below(4);
        for (std::size_t i = 0; i < n; ++i) {
          const Key k = m.generate_key(rng);
          units.images.insert_or_assign(k, m.unit(k));
        }
        const Value lhs = m.bind(units, t);
        return detail::compare(lhs, t, m.equal, m.show,
                               "t = " + m.show(t) + "; s = " + show_subst(m, units));
      },
      opts));

  report.laws.push_back(check_property(
      "unit-bind", samples, seed + 2,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Key k = m.generate_key(rng);
        const auto f = m.generate_subst(rng, size);
        const Value lhs = m.bind(f, m.unit(k));
        const Value rhs = lookup(m, f, k);
        return detail::compare(lhs, rhs, m.equal, m.show,
                               "x = " + m.show_key(k) + "; f = " + show_subst(m, f));
      },
      opts));
  return report;
}

// mbind g . mbind f = mbind (bind g . f), mbind unit = id.
template <class Key, class Value, class Carrier>
LawReport check_module_laws(const ModuleInstance<Key, Value, Carrier>& mod, std::size_t samples,
                            std::uint64_t seed, const HarnessOptions& opts = {}) {
  detail::require_samples(samples);
  const auto& m = mod.base;
  LawReport report{"module", mod.name, samples, seed, {}};

  report.laws.push_back(check_property(
      "mbind-mbind", samples, seed,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Carrier x = mod.generate(rng, size, 0);
        const auto f = m.generate_subst(rng, size);
        const auto g = m.generate_subst(rng, size);
        const Carrier lhs = mod.mbind(g, mod.mbind(f, x));
        const Carrier rhs = mod.mbind(compose(m, f, g), x);
        return detail::compare(lhs, rhs, mod.equal, mod.show,
                               "x = " + mod.show(x) + "; f = " + show_subst(m, f) +
                                   "; g = " + show_subst(m, g));
      },
      opts));

  report.laws.push_back(check_property(
      "mbind-unit", samples, seed + 1,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Carrier x = mod.generate(rng, size, 0);
        Subst<Key, Value> units;
        const std::size_t n = rng.below(4);
        for (std::size_t i = 0; i < n; ++i) {
          const Key k = m.generate_key(rng);
          units.images.insert_or_assign(k, m.unit(k));
        }
        return detail::compare(mod.mbind(units, x), x, mod.equal, mod.show,
                               "x = " + mod.show(x) + "; s = " + show_subst(m, units));
      },
      opts));
  return report;
}

// tau . mbind_src s = mbind_dst s . tau
template <class Key, class Value, class Src, class Dst>
LawReport check_linearity(const std::string& morphism, const ModuleInstance<Key, Value, Src>& src,
                          const ModuleInstance<Key, Value, Dst>& dst,
                          const CarrierMap<Src, Dst>& tau, std::size_t samples,
                          std::uint64_t seed, const HarnessOptions& opts = {}) {
  detail::require_samples(samples);
  if (src.base.name != dst.base.name)
    throw ConfigurationError("linearity needs a common base monad, got '" + src.base.name +
                             "' and '" + dst.base.name + "'");
  const auto& m = src.base;
  LawReport report{"linearity", morphism, samples, seed, {}};
  report.laws.push_back(check_property(
      morphism, samples, seed,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Src x = src.generate(rng, size, 0);
        const auto s = m.generate_subst(rng, size);
        const Dst lhs = tau(src.mbind(s, x));
        const Dst rhs = dst.mbind(s, tau(x));
        return detail::compare(lhs, rhs, dst.equal, dst.show,
                               "x = " + src.show(x) + "; s = " + show_subst(m, s));
      },
      opts));
  return report;
}

// f . unit_A = unit_B and f . bind_A s = bind_B (f . s) . f
template <class Key, class Source, class Target>
LawReport check_monad_morphism(const MonadMorphism<Key, Source, Target>& f, std::size_t samples,
                               std::uint64_t seed, const HarnessOptions& opts = {}) {
  detail::require_samples(samples);
  const auto& a = f.source;
  const auto& b = f.target;
  LawReport report{"morphism", f.name, samples, seed, {}};
  report.laws.push_back(check_property(
      "morphism-unit", samples, seed,
      [&](Rng& rng) {
        const Key k = a.generate_key(rng);
        return detail::compare(f.map(a.unit(k)), b.unit(k), b.equal, b.show,
                               "x = " + a.show_key(k));
      },
      opts));
  report.laws.push_back(check_property(
      "morphism-bind", samples, seed + 1,
      [&](Rng& rng) {
        const std::size_t size = draw_size(rng, opts);
        const Source t = a.generate(rng, size, 0);
        const auto s = a.generate_subst(rng, size);
        const Target lhs = f.map(a.bind(s, t));
        const Target rhs = b.bind(map_subst(f, s), f.map(t));
        return detail::compare(lhs, rhs, b.equal, b.show,
                               "t = " + a.show(t) + "; s = " + show_subst(a, s));
      },
      opts));
  return report;
}

// Algebra diagrams for a monoid over the list monad:
// act [a] = a and act (join xss) = act (map act xss).
template <class A>
LawReport algebra_check(const MonoidAlgebra<A>& alg, std::size_t samples, std::uint64_t seed,
                        const HarnessOptions& opts = {}) {
  detail::require_samples(samples);
  LawReport report{"algebra", alg.name, samples, seed, {}};
  auto show_list = [&](const ListVal<A>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + alg.show(xs[i]);
    return s + "]";
  };
  report.laws.push_back(check_property(
      "unit", samples, seed,
      [&](Rng& rng) {
        const A a = alg.generate(rng);
        return detail::compare(alg.act(list_unit(a)), a, alg.equal, alg.show,
                               "a = " + alg.show(a));
      },
      opts));
  report.laws.push_back(check_property(
      "associativity", samples, seed + 1,
      [&](Rng& rng) {
        std::vector<ListVal<A>> xss(rng.below(4));
        for (auto& xs : xss) {
          xs.resize(rng.below(4));
          for (auto& x : xs) x = alg.generate(rng);
        }
        ListVal<A> acted;
        for (const auto& xs : xss) acted.push_back(alg.act(xs));
        std::string shown = "[";
        for (std::size_t i = 0; i < xss.size(); ++i) shown += (i ? "," : "") + show_list(xss[i]);
        shown += "]";
        return detail::compare(alg.act(list_join(xss)), alg.act(acted), alg.equal, alg.show,
                               "xss = " + shown);
      },
      opts));
  return report;
}

// Plain-text rendering used by the command line tool.
std::string format_report(const LawReport& report);

}  // namespace modmon::core
