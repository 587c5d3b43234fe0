#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modmon/core/error.hpp"
#include "modmon/core/signature.hpp"
#include "modmon/core/var_ref.hpp"

namespace modmon::core {

// Signature-generic syntax. Argument j of an operator is scoped under
// arity.binders[j] additional bound slots. Immutable; copies share nodes.
class ScopedTerm {
 public:
  static ScopedTerm var(VarRef v);
  static ScopedTerm free(std::string name) { return var(Free{std::move(name)}); }
  static ScopedTerm bound(std::size_t index) { return var(Bound{index}); }
  static ScopedTerm op(std::size_t op_index, std::vector<ScopedTerm> args);

  bool is_var() const;
  const VarRef& as_var() const;
  std::size_t op_index() const;
  std::span<const ScopedTerm> args() const;

  friend bool operator==(const ScopedTerm& a, const ScopedTerm& b);

 private:
  struct Node;
  explicit ScopedTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using NameMap = std::map<std::string, std::string>;

// Finite substitution with identity default. Images must be closed at
// binder depth zero.
struct GenSubst {
  std::map<std::string, ScopedTerm> images;
};

// Throws MalformedTermError unless `t` fits `sig` under `depth` slots.
void check_scoped(const Signature& sig, const ScopedTerm& t, std::size_t depth = 0);
bool is_scoped(const Signature& sig, const ScopedTerm& t, std::size_t depth = 0);

std::size_t term_size(const ScopedTerm& t);

ScopedTerm gen_rename(const NameMap& renaming, const ScopedTerm& t);
ScopedTerm gen_subst(const Signature& sig, const GenSubst& s, const ScopedTerm& t);

// Target of the initial fold. ops[i] receives one value per argument, each
// computed in its derived scope. `fresh(k)` is the unit at the k-th
// innermost fresh slot and `weaken` the inclusion into one more slot.
template <class Value>
struct Representation {
  std::string name;
  std::vector<Arity> arities;
  std::vector<std::function<Value(std::span<const Value>)>> ops;
  std::function<Value(std::size_t)> fresh;
  std::function<Value(const Value&)> weaken;
};

namespace detail {

template <class Value>
class Folder {
 public:
  Folder(const Representation<Value>& rep, const std::function<Value(const std::string&)>& env)
      : rep_(rep), env_(env) {}

  Value run(const ScopedTerm& t, const std::vector<Value>& bound, std::size_t depth) {
    if (t.is_var()) {
      if (const auto* b = std::get_if<Bound>(&t.as_var())) {
        if (b->index >= bound.size()) throw MalformedTermError("dangling bound index in fold");
        return bound[b->index];
      }
      Value v = env_(std::get<Free>(t.as_var()).name);
      for (std::size_t i = 0; i < depth; ++i) v = rep_.weaken(v);
      return v;
    }
    const auto& binders = rep_.arities[t.op_index()].binders;
    std::vector<Value> results;
    results.reserve(binders.size());
    for (std::size_t j = 0; j < binders.size(); ++j) {
      const std::size_t k = binders[j];
      if (k == 0) {
        results.push_back(run(t.args()[j], bound, depth));
        continue;
      }
      std::vector<Value> inner;
      inner.reserve(bound.size() + k);
      for (std::size_t i = 0; i < k; ++i) inner.push_back(rep_.fresh(i));
      for (const auto& v : bound) {
        Value w = v;
        for (std::size_t i = 0; i < k; ++i) w = rep_.weaken(w);
        inner.push_back(std::move(w));
      }
      results.push_back(run(t.args()[j], inner, depth + k));
    }
    return rep_.ops[t.op_index()](std::span<const Value>(results));
  }

 private:
  const Representation<Value>& rep_;
  const std::function<Value(const std::string&)>& env_;
};

}  // namespace detail

// The unique arrow out of the initial representation, by structural
// recursion. Throws ConfigurationError when `rep` does not match `sig`.
template <class Value>
Value gen_fold(const Signature& sig, const Representation<Value>& rep, const ScopedTerm& t,
               const std::function<Value(const std::string&)>& env) {
  if (rep.arities.size() != sig.size() || rep.ops.size() != sig.size())
    throw ConfigurationError("representation '" + rep.name + "' has " +
                             std::to_string(rep.ops.size()) + " operators, signature has " +
                             std::to_string(sig.size()));
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (rep.arities[i] != sig.at(i).arity)
      throw ConfigurationError("arity mismatch for operator '" + sig.at(i).name + "'");
    if (!rep.ops[i]) throw ConfigurationError("missing operator '" + sig.at(i).name + "'");
  }
  check_scoped(sig, t);
  detail::Folder<Value> folder(rep, env);
  return folder.run(t, {}, 0);
}

// Rebuilds every operator; folding into it is the identity.
Representation<ScopedTerm> syntactic_representation(const Signature& sig);

// s-expressions: `(op a1 ... ak)`, `#k` bound, identifier free.
ScopedTerm parse_sexpr(const Signature& sig, std::string_view text);
std::string format_sexpr(const Signature& sig, const ScopedTerm& t);

}  // namespace modmon::core
