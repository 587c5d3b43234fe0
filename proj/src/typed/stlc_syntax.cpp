#include "modmon/typed/stlc_syntax.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "modmon/core/error.hpp"

namespace modmon::typed {

namespace {

constexpr std::string_view kLambda = "\xCE\xBB";

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  bool looking_at(std::string_view tok) {
    skip_space();
    return text_.substr(pos_, tok.size()) == tok;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw ParseError(pos_, "expected '" + std::string(tok) + "'");
  }
  bool peek_ident() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }
  std::string identifier() {
    if (!peek_ident()) throw ParseError(pos_, "expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_' || text_[pos_] == '\''))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

SimpleType type_expr(Cursor& c);

SimpleType type_atom(Cursor& c) {
  if (c.accept("*")) return SimpleType::base();
  if (c.accept("(")) {
    SimpleType t = type_expr(c);
    c.expect(")");
    return t;
  }
  throw ParseError(c.pos(), "expected type");
}

SimpleType type_expr(Cursor& c) {
  SimpleType dom = type_atom(c);
  if (c.accept("->")) return SimpleType::arrow(std::move(dom), type_expr(c));
  return dom;
}

class TermParser {
 public:
  TermParser(std::string_view text, const TypeContext& ctx) : cur_(text), ctx_(ctx) {}

  StlcTerm parse() {
    StlcTerm t = term();
    if (!cur_.at_end()) throw ParseError(cur_.pos(), "unexpected input");
    return t;
  }

 private:
  bool at_lambda() { return cur_.looking_at("\\") || cur_.looking_at(kLambda); }

  bool at_atom() {
    const char c = cur_.peek();
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  StlcTerm term() {
    if (at_lambda()) return abstraction();
    if (!at_atom()) throw ParseError(cur_.pos(), cur_.at_end() ? "unexpected end of input" : "expected term");
    StlcTerm t = atom();
    for (;;) {
      if (at_lambda()) return StlcTerm::app(t, abstraction());
      if (!at_atom()) return t;
      t = StlcTerm::app(t, atom());
    }
  }

  StlcTerm abstraction() {
    if (!cur_.accept("\\")) cur_.expect(kLambda);
    std::string name = cur_.identifier();
    cur_.expect(":");
    SimpleType ty = type_expr(cur_);
    cur_.expect(".");
    binders_.push_back(std::move(name));
    StlcTerm body = term();
    binders_.pop_back();
    return StlcTerm::abs(std::move(ty), std::move(body));
  }

  StlcTerm atom() {
    if (cur_.accept("(")) {
      StlcTerm t = term();
      cur_.expect(")");
      return t;
    }
    const std::size_t at = cur_.pos();
    std::string name = cur_.identifier();
    for (std::size_t i = binders_.size(); i-- > 0;)
      if (binders_[i] == name) return StlcTerm::bound(binders_.size() - 1 - i);
    auto it = ctx_.find(name);
    if (it == ctx_.end())
      throw TypeError("at " + std::to_string(at) + ": unbound free name '" + name + "'");
    return StlcTerm::free(std::move(name), it->second);
  }

  Cursor cur_;
  const TypeContext& ctx_;
  std::vector<std::string> binders_;
};

void collect_free(const StlcTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case StlcTerm::Kind::var:
      if (const auto* v = std::get_if<TypedName>(&t.as_var())) out.insert(v->name);
      return;
    case StlcTerm::Kind::app:
      collect_free(t.fun(), out);
      collect_free(t.arg(), out);
      return;
    case StlcTerm::Kind::abs:
      collect_free(t.body(), out);
      return;
  }
}

class Printer {
 public:
  explicit Printer(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

  void term(const StlcTerm& t, std::ostream& out) {
    switch (t.kind()) {
      case StlcTerm::Kind::var:
        if (const auto* v = std::get_if<TypedName>(&t.as_var())) {
          out << v->name;
        } else {
          const std::size_t k = std::get<Bound>(t.as_var()).index;
          if (k < binders_.size())
            out << binders_[binders_.size() - 1 - k];
          else
            out << k;
        }
        return;
      case StlcTerm::Kind::abs: {
        std::string name = fresh_name();
        out << '\\' << name << ':' << format_type(t.binder()) << ". ";
        binders_.push_back(std::move(name));
        term(t.body(), out);
        binders_.pop_back();
        return;
      }
      case StlcTerm::Kind::app:
        if (t.fun().is_abs()) {
          out << '(';
          term(t.fun(), out);
          out << ')';
        } else {
          term(t.fun(), out);
        }
        out << ' ';
        if (t.arg().is_var()) {
          term(t.arg(), out);
        } else {
          out << '(';
          term(t.arg(), out);
          out << ')';
        }
        return;
    }
  }

 private:
  std::string fresh_name() const {
    for (std::size_t k = 0;; ++k) {
      std::string candidate = "v" + std::to_string(k);
      if (avoid_.count(candidate)) continue;
      bool used = false;
      for (const auto& b : binders_) used = used || b == candidate;
      if (!used) return candidate;
    }
  }

  std::set<std::string> avoid_;
  std::vector<std::string> binders_;
};

}  // namespace

SimpleType parse_type(std::string_view text) {
  Cursor c(text);
  SimpleType t = type_expr(c);
  if (!c.at_end()) throw ParseError(c.pos(), "unexpected input after type");
  return t;
}

StlcTerm parse_stlc(std::string_view text, const TypeContext& ctx) {
  return TermParser(text, ctx).parse();
}

std::string format_stlc(const StlcTerm& t) {
  std::set<std::string> avoid;
  collect_free(t, avoid);
  std::ostringstream out;
  Printer(std::move(avoid)).term(t, out);
  return out.str();
}

}  // namespace modmon::typed
