#include "modmon/core/scoped_term.hpp"

#include <cctype>
#include <sstream>

namespace modmon::core {

struct ScopedTerm::Node {
  VarRef var;
  std::size_t op_index = 0;
  std::vector<ScopedTerm> args;
  bool is_var = true;
};

ScopedTerm ScopedTerm::var(VarRef v) {
  auto node = std::make_shared<Node>();
  node->var = std::move(v);
  return ScopedTerm(std::move(node));
}

ScopedTerm ScopedTerm::op(std::size_t op_index, std::vector<ScopedTerm> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->op_index = op_index;
  node->args = std::move(args);
  return ScopedTerm(std::move(node));
}

bool ScopedTerm::is_var() const { return node_->is_var; }

const VarRef& ScopedTerm::as_var() const {
  if (!node_->is_var) throw std::logic_error("ScopedTerm::as_var on operator node");
  return node_->var;
}

std::size_t ScopedTerm::op_index() const {
  if (node_->is_var) throw std::logic_error("ScopedTerm::op_index on variable");
  return node_->op_index;
}

std::span<const ScopedTerm> ScopedTerm::args() const { return node_->args; }

bool operator==(const ScopedTerm& a, const ScopedTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.as_var() == b.as_var();
  if (a.op_index() != b.op_index() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!(a.args()[i] == b.args()[i])) return false;
  return true;
}

void check_scoped(const Signature& sig, const ScopedTerm& t, std::size_t depth) {
  if (t.is_var()) {
    if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= depth)
      throw MalformedTermError("bound index #" + std::to_string(b->index) + " escapes " +
                               std::to_string(depth) + " enclosing slots");
    return;
  }
  const auto& op = sig.at(t.op_index());
  if (op.arity.size() != t.args().size())
    throw MalformedTermError("operator '" + op.name + "' expects " +
                             std::to_string(op.arity.size()) + " arguments, got " +
                             std::to_string(t.args().size()));
  for (std::size_t j = 0; j < t.args().size(); ++j)
    check_scoped(sig, t.args()[j], depth + op.arity.binders[j]);
}

bool is_scoped(const Signature& sig, const ScopedTerm& t, std::size_t depth) {
  try {
    check_scoped(sig, t, depth);
    return true;
  } catch (const MalformedTermError&) {
    return false;
  }
}

std::size_t term_size(const ScopedTerm& t) {
  if (t.is_var()) return 1;
  std::size_t n = 1;
  for (const auto& a : t.args()) n += term_size(a);
  return n;
}

ScopedTerm gen_rename(const NameMap& renaming, const ScopedTerm& t) {
  if (t.is_var()) {
    if (const auto* f = std::get_if<Free>(&t.as_var())) {
      if (auto it = renaming.find(f->name); it != renaming.end()) return ScopedTerm::free(it->second);
    }
    return t;
  }
  std::vector<ScopedTerm> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(gen_rename(renaming, a));
  return ScopedTerm::op(t.op_index(), std::move(args));
}

namespace {

// Bound indices at or above `cutoff` move up by `by`; the binder counts come
// from the signature.
ScopedTerm shift_above(const Signature& sig, const ScopedTerm& t, std::size_t cutoff,
                       std::size_t by) {
  if (t.is_var()) {
    if (const auto* b = std::get_if<Bound>(&t.as_var()); b && b->index >= cutoff)
      return ScopedTerm::bound(b->index + by);
    return t;
  }
  const auto& binders = sig.at(t.op_index()).arity.binders;
  std::vector<ScopedTerm> args;
  args.reserve(t.args().size());
  for (std::size_t j = 0; j < t.args().size(); ++j)
    args.push_back(shift_above(sig, t.args()[j], cutoff + binders[j], by));
  return ScopedTerm::op(t.op_index(), std::move(args));
}

ScopedTerm subst_at(const Signature& sig, const GenSubst& s, const ScopedTerm& t) {
  if (t.is_var()) {
    if (const auto* f = std::get_if<Free>(&t.as_var())) {
      // Closed images are invariant under shifting, so no adjustment is
      // needed however deep the occurrence sits.
      if (auto it = s.images.find(f->name); it != s.images.end()) return it->second;
    }
    return t;
  }
  const auto& op = sig.at(t.op_index());
  if (op.arity.size() != t.args().size())
    throw MalformedTermError("operator '" + op.name + "' has wrong argument count");
  std::vector<ScopedTerm> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(subst_at(sig, s, a));
  return ScopedTerm::op(t.op_index(), std::move(args));
}

}  // namespace

ScopedTerm gen_subst(const Signature& sig, const GenSubst& s, const ScopedTerm& t) {
  for (const auto& [name, image] : s.images) {
    try {
      check_scoped(sig, image, 0);
    } catch (const MalformedTermError& e) {
      throw MalformedTermError("image of '" + name + "' is not closed: " + e.what());
    }
  }
  return subst_at(sig, s, t);
}

Representation<ScopedTerm> syntactic_representation(const Signature& sig) {
  Representation<ScopedTerm> rep;
  rep.name = "syntax";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    rep.arities.push_back(sig.at(i).arity);
    rep.ops.push_back([i](std::span<const ScopedTerm> args) {
      return ScopedTerm::op(i, std::vector<ScopedTerm>(args.begin(), args.end()));
    });
  }
  rep.fresh = [](std::size_t k) { return ScopedTerm::bound(k); };
  rep.weaken = [sig](const ScopedTerm& t) { return shift_above(sig, t, 0, 1); };
  return rep;
}

namespace {

class SexprParser {
 public:
  SexprParser(const Signature& sig, std::string_view text) : sig_(sig), text_(text) {}

  ScopedTerm parse() {
    ScopedTerm t = term();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ScopedTerm term() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    if (text_[pos_] == '#') {
      ++pos_;
      const std::string digits = word();
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(start, "expected bound index after '#'");
      return ScopedTerm::bound(std::stoul(digits));
    }
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      const std::size_t name_pos = pos_;
      const std::string name = word();
      const auto index = sig_.find(name);
      if (!index) throw ParseError(name_pos, "unknown operator '" + name + "'");
      std::vector<ScopedTerm> args;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(pos_, "expected ')'");
        if (text_[pos_] == ')') break;
        args.push_back(term());
      }
      ++pos_;
      if (args.size() != sig_.at(*index).arity.size())
        throw ParseError(start, "operator '" + name + "' expects " +
                                    std::to_string(sig_.at(*index).arity.size()) + " arguments");
      return ScopedTerm::op(*index, std::move(args));
    }
    std::string name = word();
    if (!is_identifier(name)) throw ParseError(start, "expected term");
    return ScopedTerm::free(std::move(name));
  }

  const Signature& sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_sexpr(const Signature& sig, const ScopedTerm& t, std::ostream& out) {
  if (t.is_var()) {
    std::visit(
        [&](const auto& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Free>)
            out << v.name;
          else
            out << '#' << v.index;
        },
        t.as_var());
    return;
  }
  out << '(' << sig.at(t.op_index()).name;
  for (const auto& a : t.args()) {
    out << ' ';
    write_sexpr(sig, a, out);
  }
  out << ')';
}

}  // namespace

ScopedTerm parse_sexpr(const Signature& sig, std::string_view text) {
  return SexprParser(sig, text).parse();
}

std::string format_sexpr(const Signature& sig, const ScopedTerm& t) {
  std::ostringstream out;
  write_sexpr(sig, t, out);
  return out.str();
}

}  // namespace modmon::core
