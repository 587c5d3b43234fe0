#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "../oracle/oracle.hpp"
#include "modmon/core/error.hpp"
#include "modmon/core/instances.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/core/list_monad.hpp"
#include "modmon/core/scoped_term.hpp"
#include "modmon/core/signature.hpp"

using namespace modmon;
using namespace modmon::core;

namespace {

ListMonad broken_list_monad() {
  ListMonad m = list_monad();
  m.name = "list-drop-last";
  m.bind = [good = m.bind](const ListMonad::subst_type& s, const IntList& xs) {
    IntList out = good(s, xs);
    if (!out.empty()) out.pop_back();
    return out;
  };
  return m;
}

ScopedTerm sx(const std::string& text) { return parse_sexpr(lambda_signature(), text); }

}  // namespace

TEST_CASE("list unit, join and bind") {
  CHECK(list_unit<std::int64_t>(7) == IntList{7});
  CHECK(list_unit<std::string>("a") == ListVal<std::string>{"a"});

  const std::vector<IntList> nested{{1, 2}, {3}};
  CHECK(list_join(nested) == oracle::join(nested));
  CHECK(list_join(nested) == IntList{1, 2, 3});
  CHECK(list_join(std::vector<IntList>{}).empty());
  CHECK(list_join(std::vector<IntList>{{}, {5}, {}}) == IntList{5});

  const std::function<IntList(const std::int64_t&)> twice = [](const std::int64_t& n) {
    return IntList{n, n};
  };
  const IntList xs{1, 2};
  CHECK(list_bind(twice, xs) == oracle::join({twice(1), twice(2)}));
  CHECK(list_bind(twice, xs) == IntList{1, 1, 2, 2});
  const std::function<IntList(const std::int64_t&)> unit = [](const std::int64_t& n) {
    return list_unit(n);
  };
  CHECK(list_bind(unit, IntList{1, 2, 3}) == IntList{1, 2, 3});
  const std::function<IntList(const std::int64_t&)> none = [](const std::int64_t&) {
    return IntList{};
  };
  CHECK(list_bind(none, xs).empty());
}

TEST_CASE("list bind agrees with map-then-join on samples") {
  const ListMonad m = list_monad();
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(sample_seed(11, i));
    const IntList xs = m.generate(rng, 6, 0);
    const auto s = m.generate_subst(rng, 4);
    std::vector<IntList> mapped;
    for (auto x : xs) mapped.push_back(lookup(m, s, x));
    CHECK(m.bind(s, xs) == oracle::join(mapped));
  }
}

TEST_CASE("signature parsing") {
  const Signature sig = parse_signature("app: [0, 0]\n# comment\nabs: [1]\n");
  CHECK(sig == lambda_signature());
  CHECK(format_signature(sig) == format_signature(lambda_signature()));
  CHECK(parse_signature(format_signature(sig)) == sig);
  CHECK_THROWS_AS(parse_signature("app: [0]\napp: [1]"), ParseError);
  CHECK_THROWS_AS(parse_signature("app [0]"), ParseError);
  try {
    parse_signature("abs: [x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(Signature(std::vector<Operator>{Operator{"f", Arity{}}, Operator{"f", Arity{{0}}}}),
                  ConfigurationError);
  CHECK_THROWS_AS(lambda_signature().at(2), MalformedTermError);
}

TEST_CASE("renaming") {
  const NameMap xy{{"x", "y"}};
  CHECK(gen_rename(xy, sx("x")) == sx("y"));
  CHECK(gen_rename(xy, ScopedTerm::var(Bound{0})) == ScopedTerm::var(Bound{0}));
  CHECK(gen_rename(xy, sx("(abs x)")) == sx("(abs y)"));
  CHECK(gen_rename(xy, sx("(abs (app #0 x))")) == sx("(abs (app #0 y))"));
}

TEST_CASE("generic substitution") {
  const Signature& sig = lambda_signature();
  GenSubst s;
  s.images.emplace("x", sx("(app u v)"));
  CHECK(gen_subst(sig, s, sx("x")) == sx("(app u v)"));
  CHECK(gen_subst(sig, GenSubst{}, sx("(abs (app #0 y))")) == sx("(abs (app #0 y))"));

  GenSubst y_to_id;
  y_to_id.images.emplace("y", sx("(abs #0)"));
  CHECK(gen_subst(sig, y_to_id, sx("(abs (app #0 y))")) == sx("(abs (app #0 (abs #0)))"));

  GenSubst open;
  open.images.emplace("y", ScopedTerm::var(Bound{0}));
  CHECK_THROWS_AS(gen_subst(sig, open, sx("y")), MalformedTermError);
  CHECK_THROWS_AS(gen_subst(sig, GenSubst{}, ScopedTerm::op(5, {})), MalformedTermError);
  CHECK_THROWS_AS(gen_subst(sig, GenSubst{}, ScopedTerm::op(1, {sx("x"), sx("y")})),
                  MalformedTermError);
}

TEST_CASE("scoping checks") {
  const Signature& sig = lambda_signature();
  CHECK(is_scoped(sig, sx("(abs #0)")));
  CHECK_FALSE(is_scoped(sig, ScopedTerm::op(1, {ScopedTerm::var(Bound{1})})));
  CHECK(is_scoped(sig, ScopedTerm::var(Bound{0}), 1));
  CHECK_THROWS_AS(check_scoped(sig, ScopedTerm::var(Bound{0})), MalformedTermError);
  CHECK(term_size(sx("(abs (app #0 y))")) == 4);
}

TEST_CASE("s-expression syntax") {
  const Signature& sig = lambda_signature();
  CHECK(format_sexpr(sig, sx("(abs (app #0 y))")) == "(abs (app #0 y))");
  CHECK_THROWS_AS(sx("(app x)"), ParseError);
  CHECK_THROWS_AS(sx("(lam x)"), ParseError);
  CHECK_THROWS_AS(sx("(abs #)"), ParseError);
  CHECK_THROWS_AS(sx("x y"), ParseError);
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(sample_seed(3, i));
    const ScopedTerm t = generate_scoped(sig, rng, 1 + rng.below(10), 0);
    CHECK(is_scoped(sig, t));
    CHECK(sx(format_sexpr(sig, t)) == t);
  }
}

TEST_CASE("fold into a target") {
  const Signature& sig = lambda_signature();
  const auto self = syntactic_representation(sig);
  const std::function<ScopedTerm(const std::string&)> var = [](const std::string& n) {
    return ScopedTerm::var(Free{n});
  };
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(sample_seed(5, i));
    const ScopedTerm t = generate_scoped(sig, rng, 1 + rng.below(10), 0);
    CHECK(gen_fold(sig, self, t, var) == t);
  }

  // One constant and a binary operator, folded into integers by addition.
  const Signature arith = parse_signature("one: []\nplus: [0, 0]");
  Representation<std::int64_t> add;
  add.name = "int";
  add.arities = {Arity{}, Arity{{0, 0}}};
  add.ops = {[](std::span<const std::int64_t>) { return std::int64_t{1}; },
             [](std::span<const std::int64_t> a) { return a[0] + a[1]; }};
  const ScopedTerm tree = parse_sexpr(arith, "(plus (one) (plus (one) x))");
  const std::function<std::int64_t(const std::string&)> env = [](const std::string&) {
    return std::int64_t{5};
  };
  CHECK(gen_fold(arith, add, tree, env) == 1 + 1 + 5);

  auto wrong = add;
  wrong.arities[1] = Arity{{0, 1}};
  CHECK_THROWS_AS(gen_fold(arith, wrong, tree, env), ConfigurationError);
  wrong = add;
  wrong.ops.pop_back();
  CHECK_THROWS_AS(gen_fold(arith, wrong, tree, env), ConfigurationError);
}

TEST_CASE("monad laws for lists and a broken bind") {
  const LawReport good = check_monad_laws(list_monad(), 1000, 0);
  CHECK(good.all_pass());
  CHECK(good.laws.size() == 3);
  for (const auto& l : good.laws) CHECK(l.checked == 1000);

  const LawReport bad = check_monad_laws(broken_list_monad(), 1000, 0);
  CHECK_FALSE(bad.all_pass());
  const LawResult& ub = bad.law("unit-bind");
  CHECK(ub.status == LawStatus::fail);
  REQUIRE(ub.counterexample.has_value());
  CHECK(ub.failing_sample.has_value());

  CHECK(check_monad_laws(list_monad(), 1, 42).all_pass());
  CHECK_THROWS_AS(check_monad_laws(list_monad(), 0, 0), ConfigurationError);
}

TEST_CASE("reports are deterministic and independent of worker count") {
  const auto bad = broken_list_monad();
  const auto one = format_report(check_monad_laws(bad, 500, 9));
  CHECK(format_report(check_monad_laws(bad, 500, 9)) == one);
  HarnessOptions four;
  four.workers = 4;
  CHECK(format_report(check_monad_laws(bad, 500, 9, four)) == one);
  CHECK(format_report(check_monad_laws(bad, 500, 10)) != one);
}

TEST_CASE("harness outcomes") {
  const auto skip_odd = check_property("skips", 100, 0, [](Rng& rng) {
    if (rng.below(2) == 1) throw FuelExhausted();
    return SampleOutcome::holds();
  });
  CHECK(skip_odd.status == LawStatus::pass);
  CHECK(skip_odd.checked + skip_odd.skipped == 100);
  CHECK(skip_odd.skipped > 0);

  const auto broken = check_property("gen", 10, 0, [](Rng&) -> SampleOutcome {
    throw GeneratorError("no terms of that size");
  });
  CHECK(broken.status == LawStatus::inconclusive);
  CHECK(broken.note.has_value());

  HarnessOptions opts;
  opts.workers = 3;
  const auto fails = check_property(
      "late", 50, 0, [](Rng&) { return SampleOutcome::violated("always"); }, opts);
  CHECK(fails.status == LawStatus::fail);
  CHECK(*fails.failing_sample == 0);

  LawReport r{"s", "i", 1, 0, {fails}};
  CHECK(format_report(r).find("law late: FAIL (checked") != std::string::npos);
  CHECK(format_report(r).find("  counterexample at sample 0: always") != std::string::npos);
}

TEST_CASE("module laws for tautological and constant modules") {
  const ListMonad m = list_monad();
  CHECK(check_module_laws(tautological(m), 1000, 0).all_pass());
  const auto point = constant_module<std::int64_t, IntList, int>(
      m, "point", [](Rng&) { return 0; }, [](const int&) { return std::string("*"); });
  CHECK(check_module_laws(point, 50, 0).all_pass());

  const auto id = tautological(m);
  CHECK(check_linearity<std::int64_t, IntList, IntList, IntList>(
            "id", id, id, [](const IntList& x) { return x; }, 500, 0)
            .all_pass());
}

TEST_CASE("fresh slots need a derivable monad") {
  const ListMonad m = list_monad();
  CHECK_FALSE(m.derivable());
  CHECK_THROWS_AS(maybe_gamma(m, std::optional<IntList>{}), ConfigurationError);
}

TEST_CASE("algebras over the list monad") {
  CHECK(algebra_check(sum_algebra(), 1000, 0).all_pass());
  CHECK(algebra_check(one_point_algebra(), 100, 0).all_pass());

  const auto sub = subtraction_algebra();
  const auto minus = [](std::int64_t a, std::int64_t b) { return a - b; };
  const std::vector<IntList> xss{{1, 2}, {3}};
  const std::int64_t joined = sub.act(list_join(xss));
  const std::int64_t stepwise = sub.act({sub.act(xss[0]), sub.act(xss[1])});
  CHECK(joined == oracle::fold(oracle::join(xss), 0, minus));
  CHECK(stepwise == oracle::fold({oracle::fold(xss[0], 0, minus), oracle::fold(xss[1], 0, minus)},
                                 0, minus));
  CHECK(joined == -6);
  CHECK(stepwise == 6);

  const LawReport r = algebra_check(sub, 1000, 0);
  CHECK(r.law("associativity").status == LawStatus::fail);
  CHECK(r.law("associativity").counterexample.has_value());
}

TEST_CASE("sample seeds") {
  CHECK(sample_seed(0, 0) != sample_seed(0, 1));
  CHECK(sample_seed(0, 0) != sample_seed(1, 0));
  Rng a(sample_seed(4, 4));
  Rng b(sample_seed(4, 4));
  for (int i = 0; i < 20; ++i) CHECK(a.below(1000) == b.below(1000));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
}
