#include "modmon/lambda/instances.hpp"

#include "modmon/core/instances.hpp"
#include "modmon/lambda/syntax.hpp"

namespace modmon::lambda {

LcTerm generate_lc(Rng& rng, std::size_t size, std::size_t depth) {
  if (size <= 1 || rng.chance(1, 5)) {
    if (depth > 0 && rng.chance(2, 3)) return LcTerm::bound(rng.below(depth));
    return LcTerm::free(rng.pick(core::free_name_pool()));
  }
  if (rng.chance(1, 2)) return LcTerm::abs(generate_lc(rng, size - 1, depth + 1));
  const std::size_t left = 1 + rng.below(size - 1);
  return LcTerm::app(generate_lc(rng, left, depth), generate_lc(rng, size - left, depth));
}

namespace {

LcTerm variable(Rng& rng, std::size_t depth) {
  if (depth > 0 && rng.chance(2, 3)) return LcTerm::bound(rng.below(depth));
  return LcTerm::free(rng.pick(core::free_name_pool()));
}

// Beta-normal: abstractions over neutral terms, a variable head applied to
// beta-normal arguments.
LcTerm generate_beta_normal(Rng& rng, std::size_t size, std::size_t depth) {
  if (size <= 1) return variable(rng, depth);
  if (rng.chance(1, 3)) return LcTerm::abs(generate_beta_normal(rng, size - 1, depth + 1));
  LcTerm t = variable(rng, depth);
  std::size_t budget = size - 1;
  while (budget > 0 && rng.chance(2, 3)) {
    const std::size_t share = 1 + rng.below(budget);
    t = LcTerm::app(t, generate_beta_normal(rng, share, depth));
    budget -= share;
  }
  return t;
}

}  // namespace

NfTerm generate_nf(Rng& rng, std::size_t size, std::size_t depth) {
  LcTerm t = generate_beta_normal(rng, size, depth);
  while (auto next = eta_step(t)) t = std::move(*next);
  return NfTerm::certify(std::move(t));
}

LcSubst generate_lc_subst(Rng& rng, std::size_t size) {
  LcSubst s;
  for (const auto& name : core::free_name_pool())
    if (rng.chance(1, 2)) s.images.emplace(name, generate_lc(rng, size, 0));
  return s;
}

LcMonad lc_monad() {
  LcMonad m;
  m.name = "lc";
  m.generate_key = [](Rng& rng) { return rng.pick(core::free_name_pool()); };
  m.generate = generate_lc;
  m.generate_subst = generate_lc_subst;
  m.unit = [](const std::string& name) { return LcTerm::free(name); };
  m.bind = [](const LcSubst& s, const LcTerm& t) { return lc_subst(s, t); };
  m.equal = [](const LcTerm& a, const LcTerm& b) { return a == b; };
  m.show = format_lambda;
  m.show_key = [](const std::string& k) { return k; };
  m.fresh = [] { return LcTerm::bound(0); };
  m.weaken = lc_shift;
  return m;
}

NfMonad nf_monad(std::size_t fuel_per_bind) {
  NfMonad m;
  m.name = "nf";
  m.generate_key = [](Rng& rng) { return rng.pick(core::free_name_pool()); };
  m.generate = generate_nf;
  m.generate_subst = [](Rng& rng, std::size_t size) {
    NfSubst s;
    for (const auto& name : core::free_name_pool())
      if (rng.chance(1, 2)) s.images.emplace(name, generate_nf(rng, size, 0));
    return s;
  };
  m.unit = [](const std::string& name) { return NfTerm::certify(LcTerm::free(name)); };
  m.bind = [fuel_per_bind](const NfSubst& s, const NfTerm& t) {
    Fuel fuel(fuel_per_bind);
    auto r = nf_bind(s, t, fuel);
    if (!r) throw FuelExhausted();
    return *r;
  };
  m.equal = [](const NfTerm& a, const NfTerm& b) { return a == b; };
  m.show = [](const NfTerm& t) { return format_lambda(t.term()); };
  m.show_key = [](const std::string& k) { return k; };
  m.fresh = [] { return NfTerm::certify(LcTerm::bound(0)); };
  m.weaken = [](const NfTerm& t) { return NfTerm::certify(lc_shift(t.term())); };
  return m;
}

LcModule lc_module() {
  LcModule mod = core::tautological(lc_monad());
  mod.substitute_fresh = lc_subst0;
  mod.weaken_above = shift_above;
  return mod;
}

NfModule nf_module(std::size_t fuel_per_bind) {
  NfModule mod = core::tautological(nf_monad(fuel_per_bind));
  mod.substitute_fresh = [fuel_per_bind](const NfTerm& t, const NfTerm& u) {
    Fuel fuel(fuel_per_bind);
    auto r = nf_subst0(t, u, fuel);
    if (!r) throw FuelExhausted();
    return *r;
  };
  mod.weaken_above = [](const NfTerm& t, std::size_t cutoff) {
    return NfTerm::certify(shift_above(t.term(), cutoff));
  };
  return mod;
}

core::MonadMorphism<std::string, LcTerm, NfTerm> normalize_morphism(std::size_t fuel) {
  core::MonadMorphism<std::string, LcTerm, NfTerm> f;
  f.name = "normalize";
  f.source = lc_monad();
  f.target = nf_monad(fuel);
  f.map = [fuel](const LcTerm& t) {
    Fuel budget(fuel);
    auto r = normalize(t, budget);
    if (!r) throw FuelExhausted();
    return *r;
  };
  return f;
}

core::Representation<NfTerm> nf_representation(Fuel& fuel) {
  const auto e = nf_exp_structure(fuel);
  core::Representation<NfTerm> rep;
  rep.name = "nf";
  rep.arities = {core::Arity{{0, 0}}, core::Arity{{1}}};
  rep.ops.push_back([e](std::span<const NfTerm> args) {
    return e.subst_fresh(e.exp_app(args[0]), args[1]);
  });
  rep.ops.push_back([e](std::span<const NfTerm> args) { return e.exp_abs(args[0]); });
  rep.fresh = e.bound;
  rep.weaken = e.weaken;
  return rep;
}

namespace {

// Substitution whose images live one scope deeper than the host term: the
// image's slot 0 is the shared star, so it is shifted past every binder it
// is placed under.
LcTerm subst_open(const std::map<std::string, LcTerm>& images, const LcTerm& t, std::size_t depth) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      if (const auto* f = std::get_if<Free>(&t.as_var())) {
        if (auto it = images.find(f->name); it != images.end()) {
          LcTerm image = it->second;
          for (std::size_t i = 0; i < depth; ++i) image = lc_shift(image);
          return image;
        }
      }
      return t;
    case LcTerm::Kind::app:
      return LcTerm::app(subst_open(images, t.fun(), depth), subst_open(images, t.arg(), depth));
    case LcTerm::Kind::abs:
      return LcTerm::abs(subst_open(images, t.body(), depth + 1));
  }
  return t;
}

}  // namespace

core::LawReport abs_monad_morphism_report(std::size_t samples, std::uint64_t seed,
                                          const core::HarnessOptions& opts) {
  core::LawReport report{"morphism", "abs", samples, seed, {}};
  report.laws.push_back(core::check_property(
      "abs-monad-morphism", samples, seed,
      [&](Rng& rng) {
        const std::size_t size = core::draw_size(rng, opts);
        // An element of LC(LC(X + *) + *): an outer term over the outer star
        // whose free names stand for inner terms over their own star.
        const LcTerm outer = generate_lc(rng, size, 1);
        std::map<std::string, LcTerm> inner;
        for (const auto& name : core::free_name_pool())
          inner.emplace(name, generate_lc(rng, size, 1));
        const LcTerm flatten_then_abs = LcTerm::abs(subst_open(inner, outer, 0));
        LcSubst closed;
        for (const auto& [name, t] : inner) closed.images.emplace(name, LcTerm::abs(t));
        const LcTerm abs_then_flatten = lc_subst(closed, LcTerm::abs(outer));
        if (flatten_then_abs == abs_then_flatten) return core::SampleOutcome::holds();
        std::string shown = "outer = " + format_debruijn(outer) + "; inner = {";
        bool first = true;
        for (const auto& [name, t] : inner) {
          shown += (first ? "" : ", ") + name + " := " + format_debruijn(t);
          first = false;
        }
        return core::SampleOutcome::violated(shown + "}; mu-then-abs = " +
                                             format_debruijn(flatten_then_abs) +
                                             "; abs-abs-then-mu = " +
                                             format_debruijn(abs_then_flatten));
      },
      opts));
  return report;
}

}  // namespace modmon::lambda
