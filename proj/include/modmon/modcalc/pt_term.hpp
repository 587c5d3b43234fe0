#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modmon/core/instance.hpp"

namespace modmon::modcalc {

// Free algebra on two binary operations; no binding.
class PtTerm {
 public:
  enum class Kind { var, plus, times };

  static PtTerm var(std::string name);
  static PtTerm plus(PtTerm a, PtTerm b);
  static PtTerm times(PtTerm a, PtTerm b);

  Kind kind() const;
  const std::string& name() const;
  const PtTerm& left() const;
  const PtTerm& right() const;

  friend bool operator==(const PtTerm& a, const PtTerm& b);

 private:
  struct Node;
  explicit PtTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using PtSubst = core::Subst<std::string, PtTerm>;
using PtMonad = core::MonadInstance<std::string, PtTerm>;

// t ::= ident | t '+' t | t '*' t | '(' t ')', '*' binds tighter, both
// left-associative.
PtTerm parse_pt(std::string_view text);

// Compound operands are always parenthesized: (x+x)+(x+x).
std::string format_pt(const PtTerm& t);

// Homomorphic substitution.
PtTerm pt_bind(const PtSubst& s, const PtTerm& t);

// n(x) = x+x, n(a+b) = n(a)*n(b), n(a*b) = n(a)+n(b). Natural but not
// linear.
PtTerm n_transform(const PtTerm& t);

PtMonad pt_monad();

// The two composites of the linearity square for n on the tautological
// module, at term `t` and substitution `s`: n after substitution, and
// substitution after n.
struct LinearitySquare {
  PtTerm after_subst;
  PtTerm before_subst;
};
LinearitySquare n_square(const PtSubst& s, const PtTerm& t);

}  // namespace modmon::modcalc
