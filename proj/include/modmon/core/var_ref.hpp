#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <variant>

namespace modmon {

// A free variable drawn from the flat name alphabet.
struct Free {
  std::string name;
  auto operator<=>(const Free&) const = default;
};

// A bound variable; de Bruijn index counted from the innermost binder.
struct Bound {
  std::size_t index = 0;
  auto operator<=>(const Bound&) const = default;
};

using VarRef = std::variant<Free, Bound>;

inline bool is_free(const VarRef& v) { return std::holds_alternative<Free>(v); }
inline bool is_bound(const VarRef& v) { return std::holds_alternative<Bound>(v); }

bool is_identifier(const std::string& s);

}  // namespace modmon
