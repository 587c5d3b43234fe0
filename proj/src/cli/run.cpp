#include "modmon/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iterator>
#include <istream>
#include <set>
#include <sstream>

#include "modmon/core/error.hpp"
#include "modmon/core/instances.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/lambda/instances.hpp"
#include "modmon/lambda/normal_form.hpp"
#include "modmon/lambda/preorder.hpp"
#include "modmon/lambda/syntax.hpp"
#include "modmon/modcalc/combinators.hpp"
#include "modmon/modcalc/instances.hpp"
#include "modmon/modcalc/pt_term.hpp"
#include "modmon/typed/instances.hpp"
#include "modmon/typed/stlc_syntax.hpp"

namespace modmon::cli {

namespace {

using core::LawReport;
using lambda::LcSubst;
using lambda::LcTerm;

// Thrown for flag combinations CLI11 accepts but we do not.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& input;
  RunResult result;

  void print(const std::string& line) { result.out += line + '\n'; }
  void fail(int code, const std::string& line) {
    result.exit = code;
    result.err += line + '\n';
  }
};

std::string term_text(Context& ctx, const std::string& arg) {
  if (arg != "-") return arg;
  std::string text{std::istreambuf_iterator<char>(ctx.input), {}};
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

LcTerm lambda_arg(Context& ctx, const std::string& arg) {
  return lambda::parse_lambda(term_text(ctx, arg));
}

// Laws from several reports under one heading; names are qualified by the
// originating instance only where they would collide.
LawReport merge(const std::string& suite, const std::string& instance, std::size_t samples,
                std::uint64_t seed, const std::vector<LawReport>& parts) {
  LawReport out{suite, instance, samples, seed, {}};
  std::multiset<std::string> names;
  for (const auto& p : parts)
    for (const auto& l : p.laws) names.insert(l.law);
  for (const auto& p : parts)
    for (auto l : p.laws) {
      if (names.count(l.law) > 1) l.law = p.instance + "/" + l.law;
      out.laws.push_back(std::move(l));
    }
  return out;
}

struct LawsOptions {
  std::string suite;
  std::string instance;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

std::vector<LawReport> monad_reports(const LawsOptions& o) {
  const auto n = o.samples;
  const auto s = o.seed;
  if (o.instance == "lc") return {core::check_monad_laws(lambda::lc_monad(), n, s)};
  if (o.instance == "nf") return {core::check_monad_laws(lambda::nf_monad(kDefaultFuel), n, s)};
  if (o.instance == "list") return {core::check_monad_laws(core::list_monad(), n, s)};
  if (o.instance == "pt") return {core::check_monad_laws(modcalc::pt_monad(), n, s)};
  if (o.instance == "stlc") return {core::check_monad_laws(typed::stlc_monad(), n, s)};
  if (o.instance == "tlist") return {core::check_monad_laws(typed::tlist_monad(), n, s)};
  throw UsageError("no monad suite for instance '" + o.instance + "'");
}

std::vector<LawReport> module_reports(const LawsOptions& o) {
  const auto n = o.samples;
  const auto s = o.seed;
  if (o.instance == "lc") return {core::check_module_laws(lambda::lc_module(), n, s)};
  if (o.instance == "nf") {
    const auto changed = modcalc::base_change(lambda::normalize_morphism(kDefaultFuel), lambda::nf_module(kDefaultFuel));
    return {core::check_module_laws(lambda::nf_module(kDefaultFuel), n, s),
            core::check_module_laws(changed, n, s + 2)};
  }
  if (o.instance == "list") {
    const auto m = core::list_monad();
    const auto constant = core::constant_module<std::int64_t, core::IntList, std::string>(
        m, "const", [](Rng& rng) { return rng.pick(core::free_name_pool()); },
        [](const std::string& c) { return c; });
    return {core::check_module_laws(core::tautological(m), n, s),
            core::check_module_laws(constant, n, s + 2)};
  }
  if (o.instance == "pt") return {core::check_module_laws(modcalc::pt_module(), n, s)};
  if (o.instance == "stlc") {
    const auto base = typed::SimpleType::base();
    const auto arrow = typed::SimpleType::arrow(base, base);
    return {core::check_module_laws(typed::stlc_fiber_module(base), n, s),
            core::check_module_laws(typed::stlc_fiber_module(arrow), n, s + 2),
            core::check_module_laws(typed::delta_module(arrow, base), n, s + 4)};
  }
  if (o.instance == "tlist")
    return {core::check_module_laws(core::tautological(typed::tlist_monad()), n, s)};
  if (o.instance == "derived-lc")
    return {core::check_module_laws(modcalc::derived_lc_module(), n, s),
            core::check_module_laws(modcalc::derive(modcalc::derived_lc_module()), n, s + 2)};
  if (o.instance == "product-lc")
    return {core::check_module_laws(modcalc::product_lc_module(), n, s)};
  throw UsageError("no module suite for instance '" + o.instance + "'");
}

std::vector<LawReport> linearity_reports(const LawsOptions& o) {
  const auto n = o.samples;
  const auto s = o.seed;
  if (o.instance == "lc")
    return {modcalc::app_linearity_report(n, s), modcalc::abs_linearity_report(n, s + 1),
            modcalc::eval_linearity_report(n, s + 2),
            modcalc::inclusion_linearity_report(n, s + 3)};
  if (o.instance == "list") return {modcalc::concat_linearity_report(n, s)};
  if (o.instance == "stlc") return {typed::stlc_linearity_suite(n, s)};
  if (o.instance == "tlist") return {typed::tlist_linearity_suite(n, s)};
  if (o.instance == "derived-lc") return {modcalc::inclusion_linearity_report(n, s)};
  if (o.instance == "product-lc") return {modcalc::app_linearity_report(n, s)};
  throw UsageError("no linearity suite for instance '" + o.instance + "'");
}

std::vector<LawReport> algebra_reports(const LawsOptions& o) {
  if (o.instance == "list")
    return {core::algebra_check(core::sum_algebra(), o.samples, o.seed),
            core::algebra_check(core::one_point_algebra(), o.samples, o.seed + 2)};
  throw UsageError("no algebra suite for instance '" + o.instance + "'");
}

// n is not linear: the suite succeeds when sampling refutes the square and
// the fixed witness reproduces.
void run_pt_linearity(Context& ctx, const LawsOptions& o) {
  const LawReport report = modcalc::n_linearity_report(o.samples, o.seed);
  ctx.result.out += core::format_report(report);

  const modcalc::PtTerm t = modcalc::PtTerm::var("x");
  const modcalc::PtTerm image = modcalc::parse_pt("x*x");
  const auto w = modcalc::n_witness();
  ctx.print("witness: t = var(" + modcalc::format_pt(t) + "); s = {x := var(" +
            modcalc::format_pt(image) + ")}");
  ctx.print("  n(s t) = " + modcalc::format_pt(w.after_subst));
  ctx.print("  s(n t) = " + modcalc::format_pt(w.before_subst));

  const auto& law = report.law("n");
  const bool refuted = law.status == core::LawStatus::fail && law.counterexample.has_value();
  const bool witnessed = !(w.after_subst == w.before_subst);
  ctx.print(std::string("expected: not linear; ") +
            (refuted && witnessed ? "counterexample found" : "no counterexample found"));
  ctx.result.exit = refuted && witnessed ? kExitOk : kExitNegative;
}

void run_laws(Context& ctx, const LawsOptions& o) {
  if (o.samples == 0) throw UsageError("--samples must be at least 1");
  if (o.suite == "linearity" && o.instance == "pt") return run_pt_linearity(ctx, o);
  std::vector<LawReport> parts;
  if (o.suite == "monad")
    parts = monad_reports(o);
  else if (o.suite == "module")
    parts = module_reports(o);
  else if (o.suite == "linearity")
    parts = linearity_reports(o);
  else
    parts = algebra_reports(o);
  const LawReport report = merge(o.suite, o.instance, o.samples, o.seed, parts);
  ctx.result.out += core::format_report(report);
  ctx.result.exit = report.all_pass() ? kExitOk : kExitNegative;
}

LcSubst parse_map(Context& ctx, const std::vector<std::string>& entries) {
  LcSubst s;
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || !is_identifier(entry.substr(0, eq)))
      throw UsageError("--map entry '" + entry + "' is not name=term");
    s.images.insert_or_assign(entry.substr(0, eq), lambda_arg(ctx, entry.substr(eq + 1)));
  }
  return s;
}

// name:T pairs for typecheck.
typed::TypeContext parse_type_context(const std::vector<std::string>& entries) {
  typed::TypeContext c;
  for (const auto& entry : entries) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos || !is_identifier(entry.substr(0, colon)))
      throw UsageError("--ctx entry '" + entry + "' is not name:type");
    c.insert_or_assign(entry.substr(0, colon), typed::parse_type(entry.substr(colon + 1)));
  }
  return c;
}

}  // namespace

RunResult run(const std::vector<std::string>& args, std::istream& input) {
  Context ctx{input, {}};

  CLI::App app{"Terms with binding, substitution monads and their modules.", "modmon"};
  app.require_subcommand(1);

  std::string term, other;
  std::size_t fuel = kDefaultFuel;
  std::size_t depth = 20;
  bool debruijn = false;
  std::vector<std::string> map_entries, ctx_entries;
  std::string target = "nf";
  LawsOptions laws;

  auto* parse = app.add_subcommand("parse", "Print the canonical form of a term");
  parse->add_option("term", term, "Term, or - for stdin")->required();

  auto* normalize = app.add_subcommand("normalize", "Beta-eta normal form");
  normalize->add_option("--fuel", fuel, "Reduction step budget")->capture_default_str();
  normalize->add_flag("--debruijn", debruijn, "Print with numeric indices");
  normalize->add_option("term", term, "Term, or - for stdin")->required();

  auto* equiv = app.add_subcommand("equiv", "Beta-eta equivalence");
  equiv->add_option("--fuel", fuel, "Reduction step budget per side")->capture_default_str();
  equiv->add_option("t1", term)->required();
  equiv->add_option("t2", other)->required();

  auto* leq = app.add_subcommand("leq", "Reduction preorder within a depth bound");
  leq->add_option("--depth", depth, "Maximum reduction steps")->capture_default_str();
  leq->add_option("t1", term)->required();
  leq->add_option("t2", other)->required();

  auto* subst = app.add_subcommand("subst", "Capture-avoiding substitution of free names");
  subst->add_option("--map", map_entries, "name=term entries")->delimiter(',')->required();
  subst->add_option("term", term)->required();

  auto* laws_cmd = app.add_subcommand("laws", "Sample a law suite");
  laws_cmd->add_option("--suite", laws.suite)
      ->required()
      ->check(CLI::IsMember({"monad", "module", "linearity", "algebra"}));
  laws_cmd->add_option("--instance", laws.instance)
      ->required()
      ->check(CLI::IsMember(
          {"lc", "nf", "list", "pt", "stlc", "tlist", "derived-lc", "product-lc"}));
  laws_cmd->add_option("--samples", laws.samples)->capture_default_str();
  laws_cmd->add_option("--seed", laws.seed)->capture_default_str();

  auto* fold = app.add_subcommand("fold", "Initial-algebra fold into a target");
  fold->add_option("--target", target)->check(CLI::IsMember({"nf"}))->capture_default_str();
  fold->add_option("--fuel", fuel)->capture_default_str();
  fold->add_option("term", term)->required();

  auto* typecheck = app.add_subcommand("typecheck", "Type of a simply typed term");
  typecheck->add_option("--ctx", ctx_entries, "name:type entries for free variables")
      ->delimiter(',');
  typecheck->add_option("term", term)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    ctx.result.out = app.help();
    return ctx.result;
  } catch (const CLI::CallForAllHelp&) {
    ctx.result.out = app.help("", CLI::AppFormatMode::All);
    return ctx.result;
  } catch (const CLI::ParseError& e) {
    ctx.fail(kExitUsage, e.what());
    ctx.result.err += app.help();
    return ctx.result;
  }

  try {
    if (parse->parsed()) {
      ctx.print(lambda::format_lambda(lambda_arg(ctx, term)));
    } else if (normalize->parsed()) {
      Fuel budget(fuel);
      const auto nf = lambda::normalize(lambda_arg(ctx, term), budget);
      if (!nf) {
        ctx.print("fuel exhausted");
        ctx.result.exit = kExitFuel;
      } else {
        ctx.print(debruijn ? lambda::format_debruijn(nf->term()) : lambda::format_lambda(nf->term()));
      }
    } else if (equiv->parsed()) {
      const auto a = lambda_arg(ctx, term);
      const auto b = lambda_arg(ctx, other);
      const auto e = lambda::beta_eta_equiv(a, b, fuel);
      ctx.print(lambda::to_string(e));
      ctx.result.exit = e == lambda::Equivalence::equivalent     ? kExitOk
                        : e == lambda::Equivalence::inequivalent ? kExitNegative
                                                                 : kExitFuel;
    } else if (leq->parsed()) {
      const auto a = lambda_arg(ctx, term);
      const auto b = lambda_arg(ctx, other);
      const auto r = lambda::preorder_leq(a, b, depth);
      ctx.print(lambda::to_string(r));
      ctx.result.exit = r == lambda::PreorderResult::related ? kExitOk : kExitNegative;
    } else if (subst->parsed()) {
      const LcSubst s = parse_map(ctx, map_entries);
      ctx.print(lambda::format_lambda(lambda::lc_subst(s, lambda_arg(ctx, term))));
    } else if (laws_cmd->parsed()) {
      run_laws(ctx, laws);
    } else if (fold->parsed()) {
      Fuel budget(fuel);
      const auto nf = lambda::nf_iota_fold(lambda_arg(ctx, term), budget);
      if (!nf) {
        ctx.print("fuel exhausted");
        ctx.result.exit = kExitFuel;
      } else {
        ctx.print(lambda::format_lambda(nf->term()));
      }
    } else if (typecheck->parsed()) {
      const auto types = parse_type_context(ctx_entries);
      const auto t = typed::parse_stlc(term_text(ctx, term), types);
      ctx.print(typed::format_type(typed::typecheck(types, t)));
    }
  } catch (const ParseError& e) {
    ctx.fail(kExitParse, std::string("parse error ") + e.what());
  } catch (const TypeError& e) {
    ctx.fail(kExitNegative, std::string("type error: ") + e.what());
  } catch (const UsageError& e) {
    ctx.fail(kExitUsage, e.what());
    ctx.result.err += app.help();
  } catch (const FuelExhausted&) {
    ctx.print("fuel exhausted");
    ctx.result.exit = kExitFuel;
  }
  return ctx.result;
}

}  // namespace modmon::cli
