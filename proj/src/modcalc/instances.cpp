#include "modmon/modcalc/instances.hpp"

namespace modmon::modcalc {

using lambda::LcTerm;

PtModule pt_module() { return core::tautological(pt_monad()); }

lambda::LcModule derived_lc_module() { return derive(lambda::lc_module()); }

LcPairModule product_lc_module() { return product(derived_lc_module(), lambda::lc_module()); }

core::LawReport n_linearity_report(std::size_t samples, std::uint64_t seed,
                                   const core::HarnessOptions& opts) {
  const PtModule m = pt_module();
  return core::check_linearity<std::string, PtTerm, PtTerm, PtTerm>("n", m, m, n_transform,
                                                                    samples, seed, opts);
}

LinearitySquare n_witness() {
  PtSubst s;
  s.images.emplace("x", PtTerm::times(PtTerm::var("x"), PtTerm::var("x")));
  return n_square(s, PtTerm::var("x"));
}

core::LawReport concat_linearity_report(std::size_t samples, std::uint64_t seed,
                                        const core::HarnessOptions& opts) {
  const ListModule l = core::tautological(core::list_monad());
  const ListPairModule ll = product(l, l);
  return core::check_linearity<std::int64_t, core::IntList, std::pair<core::IntList, core::IntList>,
                               core::IntList>(
      "concat", ll, l,
      [](const std::pair<core::IntList, core::IntList>& p) {
        return core::list_concat(p.first, p.second);
      },
      samples, seed, opts);
}

core::LawReport app_linearity_report(std::size_t samples, std::uint64_t seed,
                                     const core::HarnessOptions& opts) {
  const auto lc = lambda::lc_module();
  return core::check_linearity<std::string, LcTerm, std::pair<LcTerm, LcTerm>, LcTerm>(
      "app", product(lc, lc), lc,
      [](const std::pair<LcTerm, LcTerm>& p) { return LcTerm::app(p.first, p.second); }, samples,
      seed, opts);
}

core::LawReport abs_linearity_report(std::size_t samples, std::uint64_t seed,
                                     const core::HarnessOptions& opts) {
  return core::check_linearity<std::string, LcTerm, LcTerm, LcTerm>(
      "abs", derived_lc_module(), lambda::lc_module(),
      [](const LcTerm& body) { return LcTerm::abs(body); }, samples, seed, opts);
}

core::LawReport inclusion_linearity_report(std::size_t samples, std::uint64_t seed,
                                           const core::HarnessOptions& opts) {
  const auto d1 = derived_lc_module();
  const auto d2 = derive(d1);
  const auto inc = second_derivative_inclusions(d1);
  core::LawReport report = core::check_linearity<std::string, LcTerm, LcTerm, LcTerm>(
      "inclusion-inner", d1, d2, inc.to_inner, samples, seed, opts);
  report.instance = "inclusions";
  report.append(core::check_linearity<std::string, LcTerm, LcTerm, LcTerm>(
      "inclusion-outer", d1, d2, inc.to_outer, samples, seed + 1, opts));
  return report;
}

core::LawReport eval_linearity_report(std::size_t samples, std::uint64_t seed,
                                      const core::HarnessOptions& opts) {
  const auto e = eval_morphism(lambda::lc_module());
  return core::check_linearity<std::string, LcTerm, std::pair<LcTerm, LcTerm>, LcTerm>(
      "eval", e.source, e.target, e.map, samples, seed, opts);
}

}  // namespace modmon::modcalc
