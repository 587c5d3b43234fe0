#include "modmon/typed/instances.hpp"

#include "modmon/core/instances.hpp"
#include "modmon/modcalc/combinators.hpp"
#include "modmon/typed/stlc_syntax.hpp"

namespace modmon::typed {

SimpleType generate_type(Rng& rng, std::size_t depth) {
  if (depth == 0 || rng.chance(1, 2)) return SimpleType::base();
  SimpleType dom = generate_type(rng, depth - 1);
  return SimpleType::arrow(std::move(dom), generate_type(rng, depth - 1));
}

namespace {

StlcTerm variable_of(Rng& rng, const SimpleType& type, const std::vector<SimpleType>& slots) {
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (slots[k] == type) candidates.push_back(k);
  if (!candidates.empty() && rng.chance(2, 3)) return StlcTerm::bound(rng.pick(candidates));
  return StlcTerm::free(rng.pick(core::free_name_pool()), type);
}

std::vector<SimpleType> with_slot(const SimpleType& t, const std::vector<SimpleType>& slots) {
  std::vector<SimpleType> out{t};
  out.insert(out.end(), slots.begin(), slots.end());
  return out;
}

std::string show_scoped(const ScopedStlc& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.slots.size(); ++i)
    out += (i ? ", " : "") + format_type(c.slots[i]);
  return out + "] " + format_stlc(c.term);
}

}  // namespace

StlcTerm generate_stlc(Rng& rng, const SimpleType& type, std::size_t size,
                       const std::vector<SimpleType>& slots) {
  if (size <= 1 || rng.chance(1, 5)) return variable_of(rng, type, slots);
  if (!type.is_base() && rng.chance(1, 2))
    return StlcTerm::abs(type.dom(), generate_stlc(rng, type.cod(), size - 1, with_slot(type.dom(), slots)));
  const SimpleType arg_type = generate_type(rng, 1);
  const std::size_t left = 1 + rng.below(size - 1);
  // Explicit redexes, so reduction has something to do.
  StlcTerm f = left > 1 && rng.chance(1, 3)
                   ? StlcTerm::abs(arg_type, generate_stlc(rng, type, left - 1,
                                                           with_slot(arg_type, slots)))
                   : generate_stlc(rng, SimpleType::arrow(arg_type, type), left, slots);
  StlcTerm a = generate_stlc(rng, arg_type, size - left, slots);
  return StlcTerm::app(std::move(f), std::move(a));
}

StlcSubst generate_stlc_subst(Rng& rng, std::size_t size) {
  StlcSubst s;
  for (const auto& name : core::free_name_pool()) {
    if (!rng.chance(2, 3)) continue;
    const SimpleType t = generate_type(rng, 1);
    s.images.insert_or_assign(TypedName{name, t}, generate_stlc(rng, t, size));
  }
  return s;
}

StlcMonad stlc_monad() {
  StlcMonad m;
  m.name = "stlc";
  m.generate_key = [](Rng& rng) {
    const std::string& name = rng.pick(core::free_name_pool());
    return TypedName{name, generate_type(rng, 1)};
  };
  m.generate = [](Rng& rng, std::size_t size, std::size_t depth) {
    return generate_stlc(rng, generate_type(rng), size,
                         std::vector<SimpleType>(depth, SimpleType::base()));
  };
  m.generate_subst = generate_stlc_subst;
  m.unit = [](const TypedName& k) { return StlcTerm::free(k.name, k.type); };
  m.bind = stlc_subst;
  m.equal = [](const StlcTerm& a, const StlcTerm& b) { return a == b; };
  m.show = format_stlc;
  m.show_key = [](const TypedName& k) { return k.name + ":" + format_type(k.type); };
  m.fresh = [] { return StlcTerm::bound(0); };
  m.weaken = [](const StlcTerm& t) { return stlc_shift_above(t, 0); };
  return m;
}

StlcModule stlc_fiber_module(const SimpleType& t, std::vector<SimpleType> slots) {
  StlcModule mod;
  mod.name = "stlc[" + format_type(t) + "]";
  mod.base = stlc_monad();
  mod.generate = [t, slots](Rng& rng, std::size_t size, std::size_t extra) {
    std::vector<SimpleType> scope(extra, SimpleType::base());
    scope.insert(scope.end(), slots.begin(), slots.end());
    StlcTerm term = generate_stlc(rng, t, size, scope);
    return ScopedStlc{std::move(scope), std::move(term)};
  };
  mod.mbind = [](const StlcSubst& s, const ScopedStlc& c) {
    return ScopedStlc{c.slots, stlc_subst(s, c.term)};
  };
  mod.equal = [](const ScopedStlc& a, const ScopedStlc& b) { return a == b; };
  mod.show = show_scoped;
  return mod;
}

StlcModule delta_module(const SimpleType& s, const SimpleType& t,
                        const std::vector<SimpleType>& slots) {
  StlcModule d = stlc_fiber_module(t, with_slot(s, slots));
  d.name = "delta[" + format_type(s) + "](stlc[" + format_type(t) + "])";
  return d;
}

namespace {

struct TypePair {
  SimpleType s;
  SimpleType t;
};

std::vector<TypePair> sampled_pairs() {
  const SimpleType b = SimpleType::base();
  const SimpleType bb = SimpleType::arrow(b, b);
  return {{b, b}, {bb, b}, {b, bb}, {bb, bb}};
}

StlcTerm normal(const StlcTerm& t) {
  Fuel fuel(kDefaultFuel);
  auto nf = stlc_normalize(t, fuel);
  if (!nf) throw FuelExhausted();
  return *nf;
}

StlcSubst normal_subst(const StlcSubst& s) {
  StlcSubst out;
  for (const auto& [k, v] : s.images) out.images.emplace(k, normal(v));
  return out;
}

}  // namespace

core::LawReport stlc_linearity_suite(std::size_t samples, std::uint64_t seed,
                                     const core::HarnessOptions& opts) {
  core::LawReport report{"linearity", "stlc", samples, seed, {}};
  std::uint64_t law_seed = seed;
  for (const auto& [s, t] : sampled_pairs()) {
    const std::string tag = "[" + format_type(s) + ", " + format_type(t) + "]";

    const auto fun = stlc_fiber_module(SimpleType::arrow(s, t));
    const auto arg = stlc_fiber_module(s);
    const core::CarrierMap<std::pair<ScopedStlc, ScopedStlc>, ScopedStlc> app =
        [](const std::pair<ScopedStlc, ScopedStlc>& c) {
          return ScopedStlc{c.first.slots, StlcTerm::app(c.first.term, c.second.term)};
        };
    report.append(core::check_linearity("app" + tag, modcalc::product(fun, arg),
                                        stlc_fiber_module(t), app, samples, law_seed++, opts));

    const core::CarrierMap<ScopedStlc, ScopedStlc> abs = [s = s](const ScopedStlc& c) {
      return ScopedStlc{std::vector<SimpleType>(c.slots.begin() + 1, c.slots.end()),
                        StlcTerm::abs(s, c.term)};
    };
    report.append(core::check_linearity("abs" + tag, delta_module(s, t),
                                        stlc_fiber_module(SimpleType::arrow(s, t)), abs, samples,
                                        law_seed++, opts));

    report.laws.push_back(core::check_property(
        "app-normal" + tag, samples, law_seed++,
        [&, s = s, t = t](Rng& rng) {
          const std::size_t size = core::draw_size(rng, opts);
          const StlcTerm f = normal(generate_stlc(rng, SimpleType::arrow(s, t), size));
          const StlcTerm a = normal(generate_stlc(rng, s, size));
          const StlcSubst sub = normal_subst(generate_stlc_subst(rng, size));
          const StlcTerm lhs = normal(stlc_subst(sub, normal(StlcTerm::app(f, a))));
          const StlcTerm rhs =
              normal(StlcTerm::app(normal(stlc_subst(sub, f)), normal(stlc_subst(sub, a))));
          return core::detail::compare(lhs, rhs, std::equal_to<>{}, format_stlc,
                                       "f = " + format_stlc(f) + "; a = " + format_stlc(a));
        },
        opts));

    report.laws.push_back(core::check_property(
        "abs-normal" + tag, samples, law_seed++,
        [&, s = s, t = t](Rng& rng) {
          const std::size_t size = core::draw_size(rng, opts);
          const StlcTerm body = normal(generate_stlc(rng, t, size, {s}));
          const StlcSubst sub = normal_subst(generate_stlc_subst(rng, size));
          const StlcTerm lhs = normal(stlc_subst(sub, normal(StlcTerm::abs(s, body))));
          const StlcTerm rhs = normal(StlcTerm::abs(s, normal(stlc_subst(sub, body))));
          return core::detail::compare(lhs, rhs, std::equal_to<>{}, format_stlc,
                                       "body = " + format_stlc(body));
        },
        opts));
  }

  report.laws.push_back(core::check_property(
      "subst-preserves-type", samples, law_seed++,
      [&](Rng& rng) {
        const std::size_t size = core::draw_size(rng, opts);
        const SimpleType type = generate_type(rng);
        const StlcTerm x = generate_stlc(rng, type, size);
        const StlcTerm y = stlc_subst(generate_stlc_subst(rng, size), x);
        const auto got = try_typecheck({}, y);
        if (got && *got == type) return core::SampleOutcome::holds();
        return core::SampleOutcome::violated("x = " + format_stlc(x) + "; result = " +
                                             format_stlc(y));
      },
      opts));
  return report;
}

TListTerm generate_tlist(Rng& rng, ListSort sort, std::size_t size) {
  const auto var = [&] { return TListTerm::var(rng.pick(core::free_name_pool()), sort); };
  if (sort.depth == 0 || size <= 1) {
    if (sort.depth > 0 && rng.chance(1, 3)) return TListTerm::nil(ListSort{sort.depth - 1});
    return var();
  }
  switch (rng.below(3)) {
    case 0:
      return var();
    case 1:
      return TListTerm::nil(ListSort{sort.depth - 1});
    default: {
      const std::size_t left = 1 + rng.below(size - 1);
      TListTerm head = generate_tlist(rng, ListSort{sort.depth - 1}, left);
      return TListTerm::cons(std::move(head), generate_tlist(rng, sort, size - left));
    }
  }
}

namespace {

constexpr std::size_t kMaxSort = 3;

std::string show_sorted(const SortedName& k) { return k.name + "@" + std::to_string(k.sort.depth); }

TListSubst generate_tlist_subst(Rng& rng, std::size_t size) {
  TListSubst s;
  for (const auto& name : core::free_name_pool())
    for (std::size_t d = 0; d < kMaxSort; ++d)
      if (rng.chance(1, 3))
        s.images.insert_or_assign(SortedName{name, ListSort{d}},
                                  generate_tlist(rng, ListSort{d}, size));
  return s;
}

}  // namespace

TListMonad tlist_monad() {
  TListMonad m;
  m.name = "tlist";
  m.generate_key = [](Rng& rng) {
    return SortedName{rng.pick(core::free_name_pool()), ListSort{rng.below(kMaxSort)}};
  };
  m.generate = [](Rng& rng, std::size_t size, std::size_t) {
    return generate_tlist(rng, ListSort{rng.below(kMaxSort)}, size);
  };
  m.generate_subst = generate_tlist_subst;
  m.unit = [](const SortedName& k) { return TListTerm::var(k.name, k.sort); };
  m.bind = tlist_subst;
  m.equal = [](const TListTerm& a, const TListTerm& b) { return a == b; };
  m.show = format_tlist;
  m.show_key = show_sorted;
  return m;
}

core::LawReport tlist_linearity_suite(std::size_t samples, std::uint64_t seed,
                                      const core::HarnessOptions& opts) {
  const TListMonad m = tlist_monad();
  core::LawReport report{"linearity", "tlist", samples, seed, {}};

  using Pair = std::pair<TListTerm, TListTerm>;
  core::ModuleInstance<SortedName, TListTerm, Pair> pairs;
  pairs.name = "tlist[k] x tlist[k+1]";
  pairs.base = m;
  pairs.generate = [](Rng& rng, std::size_t size, std::size_t) {
    const ListSort k{rng.below(kMaxSort - 1)};
    TListTerm head = generate_tlist(rng, k, size);
    return Pair{std::move(head), generate_tlist(rng, ListSort{k.depth + 1}, size)};
  };
  pairs.mbind = [](const TListSubst& s, const Pair& c) {
    return Pair{tlist_subst(s, c.first), tlist_subst(s, c.second)};
  };
  pairs.equal = [](const Pair& a, const Pair& b) { return a == b; };
  pairs.show = [](const Pair& c) {
    return "<" + format_tlist(c.first) + ", " + format_tlist(c.second) + ">";
  };
  const auto taut = core::tautological(m);
  report.append(core::check_linearity<SortedName, TListTerm, Pair, TListTerm>(
      "cons", pairs, taut, [](const Pair& c) { return TListTerm::cons(c.first, c.second); },
      samples, seed, opts));

  const auto sorts = core::constant_module<SortedName, TListTerm, ListSort>(
      m, "sorts", [](Rng& rng) { return ListSort{rng.below(kMaxSort)}; },
      [](const ListSort& k) { return std::to_string(k.depth); });
  report.append(core::check_linearity<SortedName, TListTerm, ListSort, TListTerm>(
      "nil", sorts, taut, [](const ListSort& k) { return TListTerm::nil(k); }, samples, seed + 1,
      opts));

  report.laws.push_back(core::check_property(
      "shift", samples, seed + 2,
      [&](Rng& rng) {
        const std::size_t size = core::draw_size(rng, opts);
        const TListTerm t = m.generate(rng, size, 0);
        const TListSubst s = generate_tlist_subst(rng, size);
        const std::size_t n = 1 + rng.below(2);
        const TListTerm lhs = tlist_shift(tlist_subst(s, t), n);
        const TListTerm rhs = tlist_subst(tlist_shift_subst(s, n), tlist_shift(t, n));
        return core::detail::compare(lhs, rhs, m.equal, m.show,
                                     "t = " + format_tlist(t) + "; s = " + core::show_subst(m, s) +
                                         "; n = " + std::to_string(n));
      },
      opts));
  return report;
}

}  // namespace modmon::typed
