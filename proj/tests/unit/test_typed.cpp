#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modmon/core/error.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/typed/instances.hpp"
#include "modmon/typed/stlc.hpp"
#include "modmon/typed/stlc_syntax.hpp"
#include "modmon/typed/tlist.hpp"

using namespace modmon;
using namespace modmon::typed;

namespace {

const SimpleType star = SimpleType::base();
SimpleType arrow(SimpleType a, SimpleType b) { return SimpleType::arrow(a, b); }
StlcTerm S(const std::string& s, const TypeContext& ctx = {}) { return parse_stlc(s, ctx); }
TListTerm T(const std::string& s) { return parse_tlist(s); }

}  // namespace

TEST_CASE("types") {
  CHECK(parse_type("*") == star);
  CHECK(parse_type("* -> * -> *") == arrow(star, arrow(star, star)));
  CHECK(parse_type("(* -> *) -> *") == arrow(arrow(star, star), star));
  CHECK(format_type(arrow(arrow(star, star), arrow(star, star))) == "(* -> *) -> * -> *");
  CHECK(star < arrow(star, star));
  CHECK_THROWS_AS(parse_type("* ->"), ParseError);
}

TEST_CASE("typechecking") {
  const TypeContext y{{"y", star}};
  CHECK(typecheck({}, S("\\x:*. x")) == arrow(star, star));
  CHECK(typecheck(y, S("(\\x:*. x) y", y)) == star);
  CHECK_THROWS_AS(typecheck(y, S("y y", y)), TypeError);
  CHECK_THROWS_AS(S("unknown"), TypeError);
  CHECK(typecheck({}, StlcTerm::bound(0), {star}) == star);
  CHECK_THROWS_AS(typecheck({}, StlcTerm::bound(0)), TypeError);
  CHECK_THROWS_AS(typecheck({{"y", arrow(star, star)}}, StlcTerm::free("y", star)), TypeError);
  CHECK_FALSE(try_typecheck(y, S("y y", y)).has_value());
  CHECK(format_stlc(S("\\x:* -> *. \\z:*. x z")) == "\\v0:* -> *. \\v1:*. v0 v1");
}

TEST_CASE("print then parse on sampled terms") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(sample_seed(71, i));
    const SimpleType ty = generate_type(rng);
    const StlcTerm t = generate_stlc(rng, ty, 1 + rng.below(12));
    CHECK(typecheck({}, t) == ty);
    TypeContext ctx;
    // Free names in samples may carry different types at different uses;
    // the printed form only round-trips when each name has one type.
    bool consistent = true;
    std::function<void(const StlcTerm&)> collect = [&](const StlcTerm& u) {
      switch (u.kind()) {
        case StlcTerm::Kind::var:
          if (const auto* n = std::get_if<TypedName>(&u.as_var())) {
            auto [it, fresh] = ctx.emplace(n->name, n->type);
            if (!fresh && !(it->second == n->type)) consistent = false;
          }
          break;
        case StlcTerm::Kind::app:
          collect(u.fun());
          collect(u.arg());
          break;
        case StlcTerm::Kind::abs:
          collect(u.body());
          break;
      }
    };
    collect(t);
    if (consistent) CHECK(S(format_stlc(t), ctx) == t);
  }
}

TEST_CASE("typed substitution") {
  const TypeContext ctx{{"y", star}, {"z", star}};
  StlcSubst s;
  s.images.emplace(TypedName{"y", star}, S("z", ctx));
  CHECK(stlc_subst(s, S("y", ctx)) == S("z", ctx));
  // A y at another type is a different variable.
  CHECK(stlc_subst(s, StlcTerm::free("y", arrow(star, star))) ==
        StlcTerm::free("y", arrow(star, star)));

  StlcSubst bad;
  bad.images.emplace(TypedName{"y", star}, S("\\x:*. x"));
  CHECK_THROWS_AS(stlc_subst(bad, S("y", ctx)), TypeError);
  StlcSubst open;
  open.images.emplace(TypedName{"y", star}, StlcTerm::bound(0));
  CHECK_THROWS_AS(stlc_subst(open, S("y", ctx)), TypeError);
}

TEST_CASE("scopes and shifting") {
  CHECK(stlc_shift_above(StlcTerm::free("x", star), 0) == StlcTerm::free("x", star));
  CHECK(stlc_shift_above(StlcTerm::bound(0), 0) == StlcTerm::bound(1));
  CHECK(stlc_shift_above(S("\\x:*. x"), 0) == S("\\x:*. x"));
  const ScopedStlc c{{star}, StlcTerm::bound(0)};
  const ScopedStlc d = delta_extend(arrow(star, star), c);
  CHECK(d.slots == std::vector<SimpleType>{arrow(star, star), star});
  CHECK(d.term == StlcTerm::bound(1));
  CHECK(typecheck({}, d.term, d.slots) == star);
}

TEST_CASE("typed reduction") {
  const TypeContext y{{"y", star}};
  CHECK(stlc_beta_step(S("(\\x:*. x) y", y)) == S("y", y));
  CHECK(stlc_eta_step(S("\\x:*. f x", {{"f", arrow(star, star)}})) ==
        StlcTerm::free("f", arrow(star, star)));
  Fuel fuel(100);
  const StlcTerm twice = S("\\f:* -> *. \\x:*. f (f x)");
  const StlcTerm id = S("\\y:*. y");
  CHECK(stlc_normalize(StlcTerm::app(twice, id), fuel) == S("\\x:*. x"));
}

TEST_CASE("subject reduction and normalization on samples") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(sample_seed(81, i));
    const SimpleType ty = generate_type(rng);
    StlcTerm t = generate_stlc(rng, ty, 1 + rng.below(30));
    std::size_t steps = 0;
    while (auto next = stlc_beta_step(t)) {
      REQUIRE(typecheck({}, *next) == ty);
      t = *next;
      REQUIRE(++steps < kDefaultFuel);
    }
    while (auto next = stlc_eta_step(t)) {
      REQUIRE(typecheck({}, *next) == ty);
      t = *next;
    }
  }
}

TEST_CASE("typed monad and modules") {
  CHECK(core::check_monad_laws(stlc_monad(), 1000, 0).all_pass());
  CHECK(core::check_module_laws(stlc_fiber_module(star), 1000, 0).all_pass());
  CHECK(core::check_module_laws(delta_module(star, arrow(star, star)), 1000, 0).all_pass());
  CHECK(stlc_linearity_suite(300, 0).all_pass());
}

TEST_CASE("typed lists") {
  CHECK(format_tlist(T("cons(x@0, nil@0)")) == "cons(x@0, nil@0)");
  CHECK(sort_of(T("cons(x@0, nil@0)")) == ListSort{1});
  CHECK(sort_of(T("nil@2")) == ListSort{3});
  CHECK_THROWS_AS(sort_of(T("cons(x@0, y@0)")), TypeError);
  CHECK_FALSE(is_well_sorted(T("cons(x@1, nil@0)")));
  CHECK_THROWS_AS(T("cons(x@0"), ParseError);

  CHECK(tlist_subst(TListSubst{}, T("cons(x@0, l@1)")) == T("cons(x@0, l@1)"));
  TListSubst s;
  s.images.emplace(SortedName{"x", {0}}, T("y@0"));
  CHECK(tlist_subst(s, T("cons(x@0, nil@0)")) == T("cons(y@0, nil@0)"));
  CHECK(tlist_subst(s, T("x@1")) == T("x@1"));
  TListSubst bad;
  bad.images.emplace(SortedName{"x", {0}}, T("nil@0"));
  CHECK_THROWS_AS(tlist_subst(bad, T("x@0")), TypeError);

  CHECK(tlist_shift(T("cons(x@0, nil@0)"), 1) == T("cons(x@1, nil@1)"));

  CHECK(core::check_monad_laws(tlist_monad(), 1000, 0).all_pass());
  CHECK(core::check_module_laws(core::tautological(tlist_monad()), 500, 0).all_pass());
  CHECK(tlist_linearity_suite(1000, 0).all_pass());

  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(sample_seed(91, i));
    const ListSort k{rng.below(3)};
    const TListTerm t = generate_tlist(rng, k, 1 + rng.below(10));
    CHECK(sort_of(t) == k);
    CHECK(T(format_tlist(t)) == t);
  }
}
