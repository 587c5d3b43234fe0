#include "modmon/typed/tlist.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "modmon/core/error.hpp"
#include "modmon/core/var_ref.hpp"

namespace modmon::typed {

struct TListTerm::Node {
  Kind kind = Kind::var;
  SortedName var;
  ListSort element;
  std::vector<TListTerm> children;
};

TListTerm TListTerm::var(std::string name, ListSort sort) {
  auto n = std::make_shared<Node>();
  n->var = SortedName{std::move(name), sort};
  return TListTerm(std::move(n));
}

TListTerm TListTerm::nil(ListSort element_sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::nil;
  n->element = element_sort;
  return TListTerm(std::move(n));
}

TListTerm TListTerm::cons(TListTerm head, TListTerm tail) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cons;
  n->children = {std::move(head), std::move(tail)};
  return TListTerm(std::move(n));
}

TListTerm::Kind TListTerm::kind() const { return node_->kind; }

const SortedName& TListTerm::as_var() const {
  if (node_->kind != Kind::var) throw std::logic_error("TListTerm::as_var on non-variable");
  return node_->var;
}

ListSort TListTerm::element_sort() const {
  if (node_->kind != Kind::nil) throw std::logic_error("TListTerm::element_sort on non-nil");
  return node_->element;
}

const TListTerm& TListTerm::head() const {
  if (node_->kind != Kind::cons) throw std::logic_error("TListTerm::head on non-cons");
  return node_->children[0];
}

const TListTerm& TListTerm::tail() const {
  if (node_->kind != Kind::cons) throw std::logic_error("TListTerm::tail on non-cons");
  return node_->children[1];
}

bool operator==(const TListTerm& a, const TListTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TListTerm::Kind::var:
      return a.as_var() == b.as_var();
    case TListTerm::Kind::nil:
      return a.element_sort() == b.element_sort();
    case TListTerm::Kind::cons:
      return a.head() == b.head() && a.tail() == b.tail();
  }
  return false;
}

ListSort sort_of(const TListTerm& t) {
  switch (t.kind()) {
    case TListTerm::Kind::var:
      return t.as_var().sort;
    case TListTerm::Kind::nil:
      return ListSort{t.element_sort().depth + 1};
    case TListTerm::Kind::cons: {
      const ListSort h = sort_of(t.head());
      const ListSort tl = sort_of(t.tail());
      if (tl.depth != h.depth + 1)
        throw TypeError("cons of a sort-" + std::to_string(h.depth) + " head onto a sort-" +
                        std::to_string(tl.depth) + " tail");
      return tl;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_well_sorted(const TListTerm& t) {
  try {
    sort_of(t);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

namespace {

TListTerm subst_at(const TListSubst& s, const TListTerm& t) {
  switch (t.kind()) {
    case TListTerm::Kind::var:
      if (auto it = s.images.find(t.as_var()); it != s.images.end()) return it->second;
      return t;
    case TListTerm::Kind::nil:
      return t;
    case TListTerm::Kind::cons:
      return TListTerm::cons(subst_at(s, t.head()), subst_at(s, t.tail()));
  }
  return t;
}

}  // namespace

TListTerm tlist_subst(const TListSubst& s, const TListTerm& t) {
  for (const auto& [key, image] : s.images) {
    const ListSort actual = sort_of(image);
    if (actual != key.sort)
      throw TypeError("image of '" + key.name + "@" + std::to_string(key.sort.depth) +
                      "' has sort " + std::to_string(actual.depth));
  }
  return subst_at(s, t);
}

TListTerm tlist_shift(const TListTerm& t, std::size_t n) {
  switch (t.kind()) {
    case TListTerm::Kind::var:
      return TListTerm::var(t.as_var().name, ListSort{t.as_var().sort.depth + n});
    case TListTerm::Kind::nil:
      return TListTerm::nil(ListSort{t.element_sort().depth + n});
    case TListTerm::Kind::cons:
      return TListTerm::cons(tlist_shift(t.head(), n), tlist_shift(t.tail(), n));
  }
  return t;
}

TListSubst tlist_shift_subst(const TListSubst& s, std::size_t n) {
  TListSubst out;
  for (const auto& [key, image] : s.images)
    out.images.emplace(SortedName{key.name, ListSort{key.sort.depth + n}}, tlist_shift(image, n));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TListTerm parse() {
    TListTerm t = term();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected input");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t sort_annotation() {
    expect('@');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected sort depth");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  TListTerm term() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (!is_identifier(word)) throw ParseError(start, "expected term");
    if (word == "cons") {
      expect('(');
      TListTerm h = term();
      expect(',');
      TListTerm t = term();
      expect(')');
      return TListTerm::cons(std::move(h), std::move(t));
    }
    const std::size_t depth = sort_annotation();
    if (word == "nil") return TListTerm::nil(ListSort{depth});
    return TListTerm::var(std::move(word), ListSort{depth});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TListTerm parse_tlist(std::string_view text) { return Parser(text).parse(); }

std::string format_tlist(const TListTerm& t) {
  switch (t.kind()) {
    case TListTerm::Kind::var:
      return t.as_var().name + "@" + std::to_string(t.as_var().sort.depth);
    case TListTerm::Kind::nil:
      return "nil@" + std::to_string(t.element_sort().depth);
    case TListTerm::Kind::cons:
      return "cons(" + format_tlist(t.head()) + ", " + format_tlist(t.tail()) + ")";
  }
  return {};
}

}  // namespace modmon::typed
