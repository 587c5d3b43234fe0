#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "modmon/core/instance.hpp"
#include "modmon/core/scoped_term.hpp"
#include "modmon/core/var_ref.hpp"

namespace modmon::lambda {

// Untyped lambda term, nameless for bound variables. Structural equality is
// alpha-equivalence.
class LcTerm {
 public:
  enum class Kind { var, app, abs };

  static LcTerm var(VarRef v);
  static LcTerm free(std::string name) { return var(Free{std::move(name)}); }
  static LcTerm bound(std::size_t index) { return var(Bound{index}); }
  static LcTerm app(LcTerm fun, LcTerm arg);
  static LcTerm abs(LcTerm body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::var; }
  bool is_app() const { return kind() == Kind::app; }
  bool is_abs() const { return kind() == Kind::abs; }

  const VarRef& as_var() const;
  const LcTerm& fun() const;
  const LcTerm& arg() const;
  const LcTerm& body() const;

  friend bool operator==(const LcTerm& a, const LcTerm& b);

 private:
  struct Node;
  explicit LcTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using LcSubst = core::Subst<std::string, LcTerm>;

std::size_t size(const LcTerm& t);
std::set<std::string> free_names(const LcTerm& t);

// Every bound index below `depth` plus the enclosing abstractions.
bool is_scoped(const LcTerm& t, std::size_t depth = 0);
void check_scoped(const LcTerm& t, std::size_t depth = 0);

// True when bound slot `index` (relative to the top) occurs in t.
bool occurs_bound(const LcTerm& t, std::size_t index);

// Indices at or above `cutoff` move up by one.
LcTerm shift_above(const LcTerm& t, std::size_t cutoff);
// Moves t one scope deeper.
LcTerm lc_shift(const LcTerm& t);
// Inverse of lc_shift; requires slot 0 not to occur.
LcTerm lc_unshift(const LcTerm& t);

// Capture-avoiding substitution of free names. Images must be closed at
// depth zero; throws MalformedTermError otherwise.
LcTerm lc_subst(const LcSubst& s, const LcTerm& t);

// Replaces slot 0 of `t` by `u` and lowers the other top-level indices.
LcTerm lc_subst0(const LcTerm& t, const LcTerm& u);

LcTerm lc_rename(const core::NameMap& renaming, const LcTerm& t);

// Conversions to and from generic syntax over app: [0,0], abs: [1].
core::ScopedTerm to_scoped(const LcTerm& t);
LcTerm from_scoped(const core::ScopedTerm& t);

}  // namespace modmon::lambda
