#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modmon/core/fuel.hpp"
#include "modmon/core/instance.hpp"
#include "modmon/core/var_ref.hpp"

namespace modmon::typed {

// * | dom -> cod
class SimpleType {
 public:
  SimpleType() = default;  // the base type
  static SimpleType base();
  static SimpleType arrow(SimpleType dom, SimpleType cod);

  bool is_base() const { return !node_; }
  const SimpleType& dom() const;
  const SimpleType& cod() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b);
  friend std::strong_ordering operator<=>(const SimpleType& a, const SimpleType& b);

 private:
  struct Node;
  explicit SimpleType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;  // null for the base type
};

std::string format_type(const SimpleType& t);

// A variable of the tau-set: a name in the fiber of its type.
struct TypedName {
  std::string name;
  SimpleType type;
  auto operator<=>(const TypedName&) const = default;
  bool operator==(const TypedName&) const = default;
};

using TypedVarRef = std::variant<TypedName, Bound>;

// Church-style terms: each abstraction records its binder type.
class StlcTerm {
 public:
  enum class Kind { var, app, abs };

  static StlcTerm free(std::string name, SimpleType type);
  static StlcTerm bound(std::size_t index);
  static StlcTerm app(StlcTerm fun, StlcTerm arg);
  static StlcTerm abs(SimpleType binder, StlcTerm body);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::var; }
  bool is_app() const { return kind() == Kind::app; }
  bool is_abs() const { return kind() == Kind::abs; }
  const TypedVarRef& as_var() const;
  const StlcTerm& fun() const;
  const StlcTerm& arg() const;
  const SimpleType& binder() const;
  const StlcTerm& body() const;

  friend bool operator==(const StlcTerm& a, const StlcTerm& b);

 private:
  struct Node;
  explicit StlcTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using TypeContext = std::map<std::string, SimpleType>;
using StlcSubst = core::Subst<TypedName, StlcTerm>;

std::size_t size(const StlcTerm& t);

// Synthesizes the type of `t`. `slots` types the open bound indices, slot 0
// first. A free variable's annotation must agree with `ctx` when `ctx`
// mentions it. Throws TypeError.
SimpleType typecheck(const TypeContext& ctx, const StlcTerm& t,
                     const std::vector<SimpleType>& slots = {});
std::optional<SimpleType> try_typecheck(const TypeContext& ctx, const StlcTerm& t,
                                        const std::vector<SimpleType>& slots = {});

// Type-preserving substitution of free variables; every image must be
// closed and have its variable's type (TypeError otherwise).
StlcTerm stlc_subst(const StlcSubst& s, const StlcTerm& t);

// A term over a scope whose open slots are typed, slot 0 innermost.
struct ScopedStlc {
  std::vector<SimpleType> slots;
  StlcTerm term;
  bool operator==(const ScopedStlc&) const = default;
};

// delta_t: adds one slot of type `t` as the new slot 0.
ScopedStlc delta_extend(const SimpleType& t, const ScopedStlc& m);

StlcTerm stlc_shift_above(const StlcTerm& t, std::size_t cutoff);
StlcTerm stlc_subst0(const StlcTerm& t, const StlcTerm& u);

std::optional<StlcTerm> stlc_beta_step(const StlcTerm& t);
std::optional<StlcTerm> stlc_eta_step(const StlcTerm& t);

// Leftmost-outermost beta, then eta; nullopt when `fuel` steps run out.
std::optional<StlcTerm> stlc_normalize(const StlcTerm& t, Fuel& fuel);

}  // namespace modmon::typed
