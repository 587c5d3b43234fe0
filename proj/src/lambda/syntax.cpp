#include "modmon/lambda/syntax.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "modmon/core/error.hpp"

namespace modmon::lambda {

namespace {

constexpr std::string_view kLambda = "\xCE\xBB";  // λ

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LcTerm parse() {
    LcTerm t = term();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_lambda() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '\\') return true;
    return text_.substr(pos_, kLambda.size()) == kLambda;
  }

  bool at_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    }
    if (start == pos_) throw ParseError(start, "expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  LcTerm term() {
    if (at_lambda()) return abstraction();
    if (!at_atom()) {
      skip_space();
      throw ParseError(pos_, pos_ < text_.size() ? "expected term" : "unexpected end of input");
    }
    LcTerm t = atom();
    for (;;) {
      if (at_lambda()) return LcTerm::app(t, abstraction());
      if (!at_atom()) return t;
      t = LcTerm::app(t, atom());
    }
  }

  LcTerm abstraction() {
    pos_ += text_[pos_] == '\\' ? 1 : kLambda.size();
    std::string name = identifier();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '.') throw ParseError(pos_, "expected '.'");
    ++pos_;
    binders_.push_back(std::move(name));
    LcTerm body = term();
    binders_.pop_back();
    return LcTerm::abs(std::move(body));
  }

  LcTerm atom() {
    skip_space();
    if (text_[pos_] == '(') {
      const std::size_t open = pos_++;
      LcTerm t = term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError(pos_, "expected ')' to close '(' at " + std::to_string(open));
      ++pos_;
      return t;
    }
    std::string name = identifier();
    for (std::size_t i = binders_.size(); i-- > 0;)
      if (binders_[i] == name) return LcTerm::bound(binders_.size() - 1 - i);
    return LcTerm::free(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
};

class Printer {
 public:
  Printer(bool debruijn, std::set<std::string> avoid)
      : debruijn_(debruijn), avoid_(std::move(avoid)) {}

  void term(const LcTerm& t, std::ostream& out) {
    switch (t.kind()) {
      case LcTerm::Kind::var:
        variable(t, out);
        return;
      case LcTerm::Kind::abs:
        if (debruijn_) {
          out << kLambda << ". ";
          binders_.emplace_back();
        } else {
          std::string name = fresh_name();
          out << '\\' << name << ". ";
          binders_.push_back(std::move(name));
        }
        term(t.body(), out);
        binders_.pop_back();
        return;
      case LcTerm::Kind::app:
        if (t.fun().is_abs()) {
          parenthesized(t.fun(), out);
        } else {
          term(t.fun(), out);
        }
        out << ' ';
        if (t.arg().is_var()) {
          term(t.arg(), out);
        } else {
          parenthesized(t.arg(), out);
        }
        return;
    }
  }

 private:
  void parenthesized(const LcTerm& t, std::ostream& out) {
    out << '(';
    term(t, out);
    out << ')';
  }

  void variable(const LcTerm& t, std::ostream& out) {
    if (const auto* f = std::get_if<Free>(&t.as_var())) {
      out << f->name;
      return;
    }
    const std::size_t k = std::get<Bound>(t.as_var()).index;
    if (debruijn_ || k >= binders_.size()) {
      // Dangling indices only arise for open terms; print them numerically.
      out << k;
      return;
    }
    out << binders_[binders_.size() - 1 - k];
  }

  std::string fresh_name() const {
    for (std::size_t k = 0;; ++k) {
      std::string candidate = "v" + std::to_string(k);
      if (avoid_.count(candidate)) continue;
      bool used = false;
      for (const auto& b : binders_) used = used || b == candidate;
      if (!used) return candidate;
    }
  }

  bool debruijn_;
  std::set<std::string> avoid_;
  std::vector<std::string> binders_;
};

}  // namespace

LcTerm parse_lambda(std::string_view text) { return Parser(text).parse(); }

std::string format_lambda(const LcTerm& t) {
  std::ostringstream out;
  Printer(false, free_names(t)).term(t, out);
  return out.str();
}

std::string format_debruijn(const LcTerm& t) {
  std::ostringstream out;
  Printer(true, {}).term(t, out);
  return out.str();
}

}  // namespace modmon::lambda
