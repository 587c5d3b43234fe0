#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracle/oracle.hpp"
#include "modmon/core/error.hpp"
#include "modmon/core/instances.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/lambda/instances.hpp"
#include "modmon/lambda/normal_form.hpp"
#include "modmon/lambda/preorder.hpp"
#include "modmon/lambda/reduce.hpp"
#include "modmon/lambda/syntax.hpp"
#include "modmon/lambda/term.hpp"

using namespace modmon;
using namespace modmon::lambda;

namespace {

LcTerm L(const std::string& s) { return parse_lambda(s); }
LcTerm F(const std::string& n) { return LcTerm::var(Free{n}); }
LcTerm B(std::size_t i) { return LcTerm::var(Bound{i}); }

LcSubst one(const std::string& name, const LcTerm& image) {
  LcSubst s;
  s.images.emplace(name, image);
  return s;
}

NfTerm nf(const std::string& s) { return NfTerm::certify(L(s)); }

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(L("x") == F("x"));
  CHECK(L("\\x. x") == LcTerm::abs(B(0)));
  CHECK(L("λx. x") == LcTerm::abs(B(0)));
  CHECK(L("a b c") == LcTerm::app(LcTerm::app(F("a"), F("b")), F("c")));
  CHECK(L("a \\x. x b") == LcTerm::app(F("a"), LcTerm::abs(LcTerm::app(B(0), F("b")))));
  CHECK(format_lambda(L("\\x. \\y. x y z")) == "\\v0. \\v1. v0 v1 z");
  CHECK(format_lambda(L("\\v0. v1")) == "\\v0. v1");
  CHECK(format_lambda(L("\\x. v0 x")) == "\\v1. v0 v1");
  CHECK(format_lambda(L("(\\x. x) y")) == "(\\v0. v0) y");
  CHECK(format_lambda(L("f (g x)")) == "f (g x)");
  CHECK(format_debruijn(L("\\x. x y")) == "λ. 0 y");
  CHECK_THROWS_AS(L("\\x x"), ParseError);
  CHECK_THROWS_AS(L("(x"), ParseError);
  CHECK_THROWS_AS(L(""), ParseError);
  CHECK_THROWS_AS(L("x )"), ParseError);
}

TEST_CASE("print then parse is the identity") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(sample_seed(21, i));
    const LcTerm t = generate_lc(rng, 1 + rng.below(12), 0);
    CHECK(L(format_lambda(t)) == t);
  }
}

TEST_CASE("shifting") {
  CHECK(lc_shift(F("x")) == F("x"));
  CHECK(lc_shift(B(0)) == B(1));
  CHECK(lc_shift(LcTerm::abs(B(0))) == LcTerm::abs(B(0)));
  CHECK(lc_unshift(lc_shift(LcTerm::app(B(0), F("y")))) == LcTerm::app(B(0), F("y")));
  CHECK_THROWS_AS(lc_unshift(B(0)), MalformedTermError);
  CHECK(shift_above(LcTerm::app(B(0), B(1)), 1) == LcTerm::app(B(0), B(2)));
}

TEST_CASE("substitution") {
  CHECK(lc_subst(one("y", F("z")), F("y")) == F("z"));
  CHECK(lc_subst(LcSubst{}, L("\\x. x y")) == L("\\x. x y"));
  CHECK(lc_subst(one("y", L("\\z. z")), L("\\x. x y")) == L("\\x. x (\\z. z)"));

  // ((t //= f) //= g) against t //= (f then g)
  const LcTerm t = L("\\x. x y");
  const LcSubst f = one("y", F("w"));
  const LcSubst g = one("w", L("\\z. z"));
  const auto m = lc_monad();
  CHECK(lc_subst(g, lc_subst(f, t)) == lc_subst(core::compose(m, f, g), t));
  CHECK(lc_subst(g, lc_subst(f, t)) == L("\\x. x (\\z. z)"));

  CHECK_THROWS_AS(lc_subst(one("y", B(0)), F("y")), MalformedTermError);
  CHECK_THROWS_AS(check_scoped(B(0)), MalformedTermError);
  CHECK(lc_rename({{"x", "y"}}, L("\\a. a x")) == L("\\a. a y"));
}

TEST_CASE("fresh-slot substitution") {
  CHECK(lc_subst0(B(0), F("u")) == F("u"));
  CHECK(lc_subst0(F("x"), F("u")) == F("x"));
  CHECK(lc_subst0(LcTerm::app(B(0), B(0)), F("y")) == LcTerm::app(F("y"), F("y")));
  CHECK(lc_subst0(LcTerm::abs(LcTerm::app(B(0), B(1))), F("y")) == L("\\x. x y"));
  CHECK(lc_subst0(B(1), F("y")) == B(0));
}

TEST_CASE("single steps") {
  CHECK(beta_step(L("(\\x. x) y")) == F("y"));
  CHECK_FALSE(beta_step(F("y")).has_value());
  CHECK(beta_step(L("(\\x. x x) (\\y. y)")) == L("(\\y. y) (\\y. y)"));
  CHECK(beta_step(L("(\\x. x) ((\\y. y) z)")) == L("(\\y. y) z"));

  CHECK(eta_step(L("\\x. y x")) == F("y"));
  CHECK_FALSE(eta_step(L("\\x. x")).has_value());
  CHECK_FALSE(eta_step(L("\\x. x x")).has_value());
  CHECK(is_beta_normal(L("\\x. y x")));
  CHECK_FALSE(is_eta_normal(L("\\x. y x")));
}

TEST_CASE("normalization") {
  Fuel ten(10);
  CHECK(normalize(L("(\\x. x) y"), ten)->term() == F("y"));
  Fuel hundred(100);
  CHECK(normalize(L("(\\x. \\y. x) a b"), hundred)->term() == F("a"));
  Fuel thousand(1000);
  CHECK_FALSE(normalize(L("(\\x. x x) (\\x. x x)"), thousand).has_value());
  CHECK(thousand.exhausted());
  Fuel plenty(kDefaultFuel);
  CHECK(normalize(L("\\x. y x"), plenty)->term() == F("y"));
  CHECK_THROWS_AS(NfTerm::certify(L("(\\x. x) y")), MalformedTermError);
  CHECK_THROWS_AS(NfTerm::certify(L("\\x. y x")), MalformedTermError);
}

TEST_CASE("normalization agrees with a named-variable reducer") {
  std::size_t compared = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(sample_seed(31, i));
    const LcTerm t = generate_lc(rng, 1 + rng.below(14), 0);
    Fuel fuel(kDefaultFuel);
    const auto ours = normalize(t, fuel);
    const auto theirs = oracle::normalize(t);
    if (!ours || !theirs) continue;
    ++compared;
    CHECK(ours->term() == *theirs);
    Fuel again(kDefaultFuel);
    CHECK(normalize(ours->term(), again)->term() == ours->term());
    CHECK(is_scoped(ours->term()));
  }
  CHECK(compared > 900);
}

TEST_CASE("equivalence") {
  CHECK(beta_eta_equiv(L("\\x. y x"), F("y"), 100) == Equivalence::equivalent);
  CHECK(beta_eta_equiv(F("x"), F("y"), 100) == Equivalence::inequivalent);
  CHECK(beta_eta_equiv(L("(\\x. x x) (\\x. x x)"), F("y"), 100) == Equivalence::inconclusive);
  CHECK(to_string(Equivalence::inconclusive) == "inconclusive");
}

TEST_CASE("bind on normal forms") {
  Fuel fuel(100);
  CHECK(*nf_bind(NfSubst{}, nf("\\x. x z"), fuel) == nf("\\x. x z"));
  NfSubst s;
  s.images.emplace("y", nf("\\z. z"));
  CHECK(*nf_bind(s, nf("y y"), fuel) == nf("\\z. z"));
  Fuel f2(100);
  CHECK(*nf_subst0(NfTerm::certify(LcTerm::app(B(0), F("a"))), nf("\\z. z"), f2) == nf("a"));
}

TEST_CASE("exponential structure") {
  CHECK(exp_app1(nf("y")).term() == LcTerm::app(F("y"), B(0)));
  CHECK(exp_app1(nf("\\x. x")).term() == B(0));
  CHECK(exp_abs(NfTerm::certify(B(0))).term() == L("\\x. x"));
  CHECK(exp_abs(NfTerm::certify(LcTerm::app(F("y"), B(0)))).term() == F("y"));
  CHECK(exp_abs(NfTerm::certify(LcTerm::app(B(0), B(0)))).term() == L("\\x. x x"));

  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(sample_seed(41, i));
    const NfTerm t = generate_nf(rng, 1 + rng.below(10), 0);
    CHECK(exp_abs(exp_app1(t)) == t);
    const NfTerm u = generate_nf(rng, 1 + rng.below(10), 1);
    CHECK(exp_app1(exp_abs(u)) == u);
  }
}

TEST_CASE("iota fold") {
  Fuel fuel(kDefaultFuel);
  CHECK(nf_iota_fold(L("(\\x. x) y"), fuel)->term() == F("y"));
  Fuel f2(kDefaultFuel);
  CHECK(nf_iota_fold(L("\\x. x (\\y. y z)"), f2)->term() == L("\\x. x (\\y. y z)"));

  const std::function<LcTerm(const std::string&)> env = [](const std::string& n) { return F(n); };
  CHECK_THROWS_AS(iota_fold(lc_partial_exp_structure(), L("x"), env), ConfigurationError);

  std::size_t agreed = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(sample_seed(51, i));
    const LcTerm t = generate_lc(rng, 1 + rng.below(10), 0);
    Fuel a(kDefaultFuel), b(kDefaultFuel);
    const auto n = normalize(t, a);
    if (!n) continue;
    const auto folded = nf_iota_fold(t, b);
    if (!folded) continue;
    CHECK(*folded == *n);
    ++agreed;
  }
  CHECK(agreed > 450);
}

TEST_CASE("reduction preorder") {
  CHECK(preorder_leq(L("(\\x. x) y"), F("y"), 1) == PreorderResult::related);
  CHECK(preorder_leq(F("y"), L("(\\x. x) y"), 5) == PreorderResult::not_related_within_depth);
  CHECK(preorder_leq(L("a (\\x. x) y"), L("a (\\x. x) y"), 0) == PreorderResult::related);
  CHECK(preorder_leq(L("(\\x. x x) (\\y. y)"), L("\\y. y"), 1) ==
        PreorderResult::not_related_within_depth);
  CHECK(preorder_leq(L("(\\x. x x) (\\y. y)"), L("\\y. y"), 2) == PreorderResult::related);
  // congruence under application and abstraction
  CHECK(preorder_leq(L("f ((\\x. x) y)"), L("f y"), 1) == PreorderResult::related);
  CHECK(preorder_leq(L("\\z. (\\x. x) z"), L("\\z. z"), 1) == PreorderResult::related);
  CHECK(preorder_leq(L("\\z. f z"), L("f"), 1) == PreorderResult::related);
  CHECK(one_step_reducts(F("y")).empty());
  CHECK(to_string(PreorderResult::related) == "related");
}

TEST_CASE("lambda monad and module instances") {
  CHECK(core::check_monad_laws(lc_monad(), 1000, 0).all_pass());
  const auto nf_laws = core::check_monad_laws(nf_monad(kDefaultFuel), 300, 0);
  CHECK(nf_laws.all_pass());
  CHECK(core::check_module_laws(lc_module(), 1000, 0).all_pass());

  const auto m = lc_monad();
  REQUIRE(m.derivable());
  CHECK(core::maybe_gamma(m, std::optional<LcTerm>{}) == B(0));
  CHECK(core::maybe_gamma(m, std::optional<LcTerm>{F("x")}) == F("x"));
  CHECK(core::maybe_gamma(m, std::optional<LcTerm>{L("x y")}) == L("x y"));
}

TEST_CASE("normalization is a monad morphism and abs is not") {
  CHECK(core::check_monad_morphism(normalize_morphism(kDefaultFuel), 500, 0).all_pass());
  const auto r = abs_monad_morphism_report(1000, 0);
  CHECK(r.law("abs-monad-morphism").status == core::LawStatus::fail);
  CHECK(r.law("abs-monad-morphism").counterexample.has_value());
}

TEST_CASE("scoped terms over the lambda signature") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(sample_seed(61, i));
    const LcTerm t = generate_lc(rng, 1 + rng.below(12), 0);
    CHECK(from_scoped(to_scoped(t)) == t);
    const auto s = core::generate_scoped(core::lambda_signature(), rng, 1 + rng.below(12), 0);
    CHECK(to_scoped(from_scoped(s)) == s);
  }
  Fuel fuel(kDefaultFuel);
  const auto rep = nf_representation(fuel);
  const std::function<NfTerm(const std::string&)> env = [](const std::string& n) {
    return NfTerm::certify(F(n));
  };
  CHECK(core::gen_fold(core::lambda_signature(), rep, to_scoped(L("(\\x. x) y")), env) == nf("y"));
}
