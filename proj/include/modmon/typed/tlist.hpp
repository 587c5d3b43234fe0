#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "modmon/core/instance.hpp"

namespace modmon::typed {

// Nesting depth: 0 is the base sort, k is list^k of it.
struct ListSort {
  std::size_t depth = 0;
  auto operator<=>(const ListSort&) const = default;
};

struct SortedName {
  std::string name;
  ListSort sort;
  auto operator<=>(const SortedName&) const = default;
};

// Var(x@k) | Nil(element sort) | Cons(head, tail). Construction does not
// check sorts; sort_of does.
class TListTerm {
 public:
  enum class Kind { var, nil, cons };

  static TListTerm var(std::string name, ListSort sort);
  static TListTerm nil(ListSort element_sort);
  static TListTerm cons(TListTerm head, TListTerm tail);

  Kind kind() const;
  const SortedName& as_var() const;
  ListSort element_sort() const;  // nil only
  const TListTerm& head() const;
  const TListTerm& tail() const;

  friend bool operator==(const TListTerm& a, const TListTerm& b);

 private:
  struct Node;
  explicit TListTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using TListSubst = core::Subst<SortedName, TListTerm>;

// Throws TypeError when a cons has a tail of the wrong sort.
ListSort sort_of(const TListTerm& t);
bool is_well_sorted(const TListTerm& t);

// Homomorphic substitution; every image must have its variable's sort.
TListTerm tlist_subst(const TListSubst& s, const TListTerm& t);

// X[n] on annotations: every sort label moves up by n.
TListTerm tlist_shift(const TListTerm& t, std::size_t n);
TListSubst tlist_shift_subst(const TListSubst& s, std::size_t n);

// `x@k`, `nil@k`, `cons(h, t)`.
TListTerm parse_tlist(std::string_view text);
std::string format_tlist(const TListTerm& t);

}  // namespace modmon::typed
