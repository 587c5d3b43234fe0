#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modmon::core {

// Binder counts, one per argument. An empty arity is a constant.
struct Arity {
  std::vector<std::size_t> binders;

  std::size_t size() const { return binders.size(); }
  bool operator==(const Arity&) const = default;
};

struct Operator {
  std::string name;
  Arity arity;
  bool operator==(const Operator&) const = default;
};

// Ordered family of arities with pairwise distinct operator names.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Operator> ops);

  const std::vector<Operator>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const Operator& at(std::size_t index) const;
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Operator> ops_;
};

// Lines of the form `name: [n1,n2,...]`; `#` starts a comment line.
Signature parse_signature(std::string_view text);
std::string format_signature(const Signature& sig);

// app: [0,0], abs: [1]
const Signature& lambda_signature();

}  // namespace modmon::core
