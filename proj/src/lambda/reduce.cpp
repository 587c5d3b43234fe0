#include "modmon/lambda/reduce.hpp"

namespace modmon::lambda {

std::optional<LcTerm> beta_step(const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      return std::nullopt;
    case LcTerm::Kind::abs:
      if (auto b = beta_step(t.body())) return LcTerm::abs(std::move(*b));
      return std::nullopt;
    case LcTerm::Kind::app:
      if (t.fun().is_abs()) return lc_subst0(t.fun().body(), t.arg());
      if (auto f = beta_step(t.fun())) return LcTerm::app(std::move(*f), t.arg());
      if (auto a = beta_step(t.arg())) return LcTerm::app(t.fun(), std::move(*a));
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool is_eta_redex(const LcTerm& t) {
  if (!t.is_abs()) return false;
  const LcTerm& body = t.body();
  if (!body.is_app() || !body.arg().is_var()) return false;
  const auto* b = std::get_if<Bound>(&body.arg().as_var());
  return b && b->index == 0 && !occurs_bound(body.fun(), 0);
}

}  // namespace

std::optional<LcTerm> eta_step(const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      return std::nullopt;
    case LcTerm::Kind::abs:
      if (is_eta_redex(t)) return lc_unshift(t.body().fun());
      if (auto b = eta_step(t.body())) return LcTerm::abs(std::move(*b));
      return std::nullopt;
    case LcTerm::Kind::app:
      if (auto f = eta_step(t.fun())) return LcTerm::app(std::move(*f), t.arg());
      if (auto a = eta_step(t.arg())) return LcTerm::app(t.fun(), std::move(*a));
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_beta_normal(const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      return true;
    case LcTerm::Kind::abs:
      return is_beta_normal(t.body());
    case LcTerm::Kind::app:
      return !t.fun().is_abs() && is_beta_normal(t.fun()) && is_beta_normal(t.arg());
  }
  return true;
}

bool is_eta_normal(const LcTerm& t) {
  switch (t.kind()) {
    case LcTerm::Kind::var:
      return true;
    case LcTerm::Kind::abs:
      return !is_eta_redex(t) && is_eta_normal(t.body());
    case LcTerm::Kind::app:
      return is_eta_normal(t.fun()) && is_eta_normal(t.arg());
  }
  return true;
}

}  // namespace modmon::lambda
