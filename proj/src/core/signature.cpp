#include "modmon/core/signature.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "modmon/core/error.hpp"
#include "modmon/core/var_ref.hpp"

namespace modmon {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && s[0] != '_') return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_' && c != '\'') return false;
  }
  return true;
}

}  // namespace modmon

namespace modmon::core {

Signature::Signature(std::vector<Operator> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (!is_identifier(op.name)) throw ConfigurationError("bad operator name '" + op.name + "'");
    if (!seen.insert(op.name).second)
      throw ConfigurationError("duplicate operator '" + op.name + "'");
  }
}

const Operator& Signature::at(std::size_t index) const {
  if (index >= ops_.size())
    throw MalformedTermError("operator index " + std::to_string(index) + " out of range");
  return ops_[index];
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return i;
  return std::nullopt;
}

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t base) : line_(line), base_(base) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c)
      throw ParseError(base_ + pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                   line_[pos_] == '_' || line_[pos_] == '\''))
      ++pos_;
    std::string id(line_.substr(start, pos_ - start));
    if (!is_identifier(id)) throw ParseError(base_ + start, "expected operator name");
    return id;
  }
  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(base_ + start, "expected nonnegative integer");
    return std::stoul(std::string(line_.substr(start, pos_ - start)));
  }
  std::size_t offset() const { return base_ + pos_; }

 private:
  std::string_view line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Signature parse_signature(std::string_view text) {
  std::vector<Operator> ops;
  std::size_t base = 0;
  while (base <= text.size()) {
    const std::size_t end = std::min(text.find('\n', base), text.size());
    const std::string_view line = text.substr(base, end - base);
    LineScanner scan(line, base);
    if (!scan.at_end() && !scan.accept('#')) {
      Operator op;
      op.name = scan.identifier();
      scan.expect(':');
      scan.expect('[');
      if (!scan.accept(']')) {
        do {
          op.arity.binders.push_back(scan.number());
        } while (scan.accept(','));
        scan.expect(']');
      }
      if (!scan.at_end()) throw ParseError(scan.offset(), "trailing characters");
      for (const auto& prev : ops)
        if (prev.name == op.name) throw ParseError(base, "duplicate operator '" + op.name + "'");
      ops.push_back(std::move(op));
    }
    if (end == text.size()) break;
    base = end + 1;
  }
  return Signature(std::move(ops));
}

std::string format_signature(const Signature& sig) {
  std::ostringstream out;
  for (const auto& op : sig.ops()) {
    out << op.name << ": [";
    for (std::size_t j = 0; j < op.arity.binders.size(); ++j)
      out << (j ? "," : "") << op.arity.binders[j];
    out << "]\n";
  }
  return out.str();
}

const Signature& lambda_signature() {
  static const Signature sig({{"app", Arity{{0, 0}}}, {"abs", Arity{{1}}}});
  return sig;
}

}  // namespace modmon::core
