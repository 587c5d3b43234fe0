#include "modmon/lambda/normal_form.hpp"

#include <stdexcept>

namespace modmon::lambda {

bool is_normal(const LcTerm& t) { return is_beta_normal(t) && is_eta_normal(t); }

NfTerm NfTerm::certify(LcTerm t) {
  if (!is_normal(t)) throw MalformedTermError("term is not in beta-eta normal form");
  return NfTerm(std::move(t));
}

std::optional<NfTerm> normalize(const LcTerm& t, Fuel& fuel) {
  LcTerm cur = t;
  while (auto next = beta_step(cur)) {
    if (!fuel.consume() || size(*next) > kMaxTermSize) return std::nullopt;
    cur = std::move(*next);
  }
  // Eta contraction keeps beta-normal terms beta-normal.
  while (auto next = eta_step(cur)) {
    if (!fuel.consume()) return std::nullopt;
    cur = std::move(*next);
  }
  return NfTerm::certify(std::move(cur));
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::equivalent:
      return "equivalent";
    case Equivalence::inequivalent:
      return "inequivalent";
    case Equivalence::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Equivalence beta_eta_equiv(const LcTerm& a, const LcTerm& b, std::size_t fuel) {
  Fuel fa(fuel);
  Fuel fb(fuel);
  const auto na = normalize(a, fa);
  const auto nb = normalize(b, fb);
  if (!na || !nb) return Equivalence::inconclusive;
  return *na == *nb ? Equivalence::equivalent : Equivalence::inequivalent;
}

std::optional<NfTerm> nf_bind(const NfSubst& s, const NfTerm& t, Fuel& fuel) {
  LcSubst raw;
  for (const auto& [name, image] : s.images) raw.images.emplace(name, image.term());
  return normalize(lc_subst(raw, t.term()), fuel);
}

std::optional<NfTerm> nf_subst0(const NfTerm& t, const NfTerm& u, Fuel& fuel) {
  return normalize(lc_subst0(t.term(), u.term()), fuel);
}

NfTerm exp_app1(const NfTerm& t) {
  // On a normal input at most the head redex fires, so this budget is never
  // reached unless normalization itself is broken.
  Fuel internal(size(t.term()) + 1);
  auto result = normalize(LcTerm::app(lc_shift(t.term()), LcTerm::bound(0)), internal);
  if (!result) throw std::logic_error("exp_app1: renormalization exceeded its structural bound");
  return *result;
}

NfTerm exp_abs(const NfTerm& t) {
  const LcTerm& body = t.term();
  if (body.is_app() && body.arg().is_var()) {
    const auto* b = std::get_if<Bound>(&body.arg().as_var());
    if (b && b->index == 0 && !occurs_bound(body.fun(), 0))
      return NfTerm::certify(lc_unshift(body.fun()));
  }
  return NfTerm::certify(LcTerm::abs(body));
}

ExpStructure<NfTerm> nf_exp_structure(Fuel& fuel) {
  ExpStructure<NfTerm> e;
  e.name = "nf";
  e.bound = [](std::size_t k) { return NfTerm::certify(LcTerm::bound(k)); };
  e.weaken = [](const NfTerm& t) { return NfTerm::certify(lc_shift(t.term())); };
  e.exp_abs = [](const NfTerm& t) { return exp_abs(t); };
  e.exp_app = [](const NfTerm& t) { return exp_app1(t); };
  e.subst_fresh = [&fuel](const NfTerm& t, const NfTerm& u) {
    auto r = nf_subst0(t, u, fuel);
    if (!r) throw FuelExhausted();
    return *r;
  };
  return e;
}

ExpStructure<LcTerm> lc_partial_exp_structure() {
  ExpStructure<LcTerm> e;
  e.name = "lc";
  e.bound = [](std::size_t k) { return LcTerm::bound(k); };
  e.weaken = [](const LcTerm& t) { return lc_shift(t); };
  e.exp_abs = [](const LcTerm& t) { return LcTerm::abs(t); };
  e.subst_fresh = [](const LcTerm& t, const LcTerm& u) { return lc_subst0(t, u); };
  return e;
}

std::optional<NfTerm> nf_iota_fold(const LcTerm& t, Fuel& fuel) {
  const auto e = nf_exp_structure(fuel);
  const std::function<NfTerm(const std::string&)> env = [](const std::string& name) {
    return NfTerm::certify(LcTerm::free(name));
  };
  try {
    return iota_fold(e, t, env);
  } catch (const FuelExhausted&) {
    return std::nullopt;
  }
}

}  // namespace modmon::lambda
