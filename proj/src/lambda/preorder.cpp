#include "modmon/lambda/preorder.hpp"

#include <unordered_set>

#include "modmon/lambda/syntax.hpp"

namespace modmon::lambda {

namespace {

void root_contractions(const LcTerm& t, std::vector<LcTerm>& out) {
  if (t.is_app() && t.fun().is_abs()) out.push_back(lc_subst0(t.fun().body(), t.arg()));
  if (t.is_abs() && t.body().is_app() && t.body().arg().is_var()) {
    const auto* b = std::get_if<Bound>(&t.body().arg().as_var());
    if (b && b->index == 0 && !occurs_bound(t.body().fun(), 0))
      out.push_back(lc_unshift(t.body().fun()));
  }
}

}  // namespace

std::vector<LcTerm> one_step_reducts(const LcTerm& t) {
  std::vector<LcTerm> out;
  root_contractions(t, out);
  switch (t.kind()) {
    case LcTerm::Kind::var:
      break;
    case LcTerm::Kind::abs:
      for (auto& b : one_step_reducts(t.body())) out.push_back(LcTerm::abs(std::move(b)));
      break;
    case LcTerm::Kind::app:
      for (auto& f : one_step_reducts(t.fun())) out.push_back(LcTerm::app(std::move(f), t.arg()));
      for (auto& a : one_step_reducts(t.arg())) out.push_back(LcTerm::app(t.fun(), std::move(a)));
      break;
  }
  return out;
}

std::string to_string(PreorderResult r) {
  return r == PreorderResult::related ? "related" : "not-related-within-depth";
}

PreorderResult preorder_leq(const LcTerm& from, const LcTerm& to, std::size_t depth) {
  if (from == to) return PreorderResult::related;
  std::unordered_set<std::string> seen{format_debruijn(from)};
  std::vector<LcTerm> frontier{from};
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<LcTerm> next;
    for (const auto& t : frontier) {
      for (auto& r : one_step_reducts(t)) {
        if (r == to) return PreorderResult::related;
        if (seen.insert(format_debruijn(r)).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return PreorderResult::not_related_within_depth;
}

}  // namespace modmon::lambda
