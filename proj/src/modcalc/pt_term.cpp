#include "modmon/modcalc/pt_term.hpp"

#include <cctype>
#include <stdexcept>

#include "modmon/core/error.hpp"
#include "modmon/core/instances.hpp"

namespace modmon::modcalc {

struct PtTerm::Node {
  Kind kind = Kind::var;
  std::string name;
  std::vector<PtTerm> children;
};

PtTerm PtTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  return PtTerm(std::move(n));
}

PtTerm PtTerm::plus(PtTerm a, PtTerm b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::plus;
  n->children = {std::move(a), std::move(b)};
  return PtTerm(std::move(n));
}

PtTerm PtTerm::times(PtTerm a, PtTerm b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::times;
  n->children = {std::move(a), std::move(b)};
  return PtTerm(std::move(n));
}

PtTerm::Kind PtTerm::kind() const { return node_->kind; }

const std::string& PtTerm::name() const {
  if (node_->kind != Kind::var) throw std::logic_error("PtTerm::name on operation");
  return node_->name;
}

const PtTerm& PtTerm::left() const {
  if (node_->kind == Kind::var) throw std::logic_error("PtTerm::left on variable");
  return node_->children[0];
}

const PtTerm& PtTerm::right() const {
  if (node_->kind == Kind::var) throw std::logic_error("PtTerm::right on variable");
  return node_->children[1];
}

bool operator==(const PtTerm& a, const PtTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == PtTerm::Kind::var) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PtTerm parse() {
    PtTerm t = sum();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PtTerm sum() {
    PtTerm t = product();
    while (accept('+')) t = PtTerm::plus(t, product());
    return t;
  }

  PtTerm product() {
    PtTerm t = atom();
    while (accept('*')) t = PtTerm::times(t, atom());
    return t;
  }

  PtTerm atom() {
    skip_space();
    if (accept('(')) {
      PtTerm t = sum();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return t;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!is_identifier(name))
      throw ParseError(start, start < text_.size() ? "expected term" : "unexpected end of input");
    return PtTerm::var(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string operand(const PtTerm& t) {
  if (t.kind() == PtTerm::Kind::var) return t.name();
  return "(" + format_pt(t) + ")";
}

}  // namespace

PtTerm parse_pt(std::string_view text) { return Parser(text).parse(); }

std::string format_pt(const PtTerm& t) {
  switch (t.kind()) {
    case PtTerm::Kind::var:
      return t.name();
    case PtTerm::Kind::plus:
      return operand(t.left()) + "+" + operand(t.right());
    case PtTerm::Kind::times:
      return operand(t.left()) + "*" + operand(t.right());
  }
  return {};
}

PtTerm pt_bind(const PtSubst& s, const PtTerm& t) {
  switch (t.kind()) {
    case PtTerm::Kind::var:
      if (auto it = s.images.find(t.name()); it != s.images.end()) return it->second;
      return t;
    case PtTerm::Kind::plus:
      return PtTerm::plus(pt_bind(s, t.left()), pt_bind(s, t.right()));
    case PtTerm::Kind::times:
      return PtTerm::times(pt_bind(s, t.left()), pt_bind(s, t.right()));
  }
  return t;
}

PtTerm n_transform(const PtTerm& t) {
  switch (t.kind()) {
    case PtTerm::Kind::var:
      return PtTerm::plus(t, t);
    case PtTerm::Kind::plus:
      return PtTerm::times(n_transform(t.left()), n_transform(t.right()));
    case PtTerm::Kind::times:
      return PtTerm::plus(n_transform(t.left()), n_transform(t.right()));
  }
  return t;
}

LinearitySquare n_square(const PtSubst& s, const PtTerm& t) {
  return {n_transform(pt_bind(s, t)), pt_bind(s, n_transform(t))};
}

namespace {

PtTerm generate_pt(Rng& rng, std::size_t size) {
  if (size <= 1 || rng.chance(1, 4)) return PtTerm::var(rng.pick(core::free_name_pool()));
  const std::size_t left = 1 + rng.below(size - 1);
  PtTerm a = generate_pt(rng, left);
  PtTerm b = generate_pt(rng, size - left);
  return rng.chance(1, 2) ? PtTerm::plus(std::move(a), std::move(b))
                          : PtTerm::times(std::move(a), std::move(b));
}

}  // namespace

PtMonad pt_monad() {
  PtMonad m;
  m.name = "pt";
  m.generate_key = [](Rng& rng) { return rng.pick(core::free_name_pool()); };
  m.generate = [](Rng& rng, std::size_t size, std::size_t) { return generate_pt(rng, size); };
  m.generate_subst = [](Rng& rng, std::size_t size) {
    PtSubst s;
    for (const auto& name : core::free_name_pool())
      if (rng.chance(1, 2)) s.images.emplace(name, generate_pt(rng, size));
    return s;
  };
  m.unit = [](const std::string& name) { return PtTerm::var(name); };
  m.bind = pt_bind;
  m.equal = [](const PtTerm& a, const PtTerm& b) { return a == b; };
  m.show = format_pt;
  m.show_key = [](const std::string& k) { return k; };
  return m;
}

}  // namespace modmon::modcalc
