#pragma once

#include <string>
#include <string_view>

#include "modmon/lambda/term.hpp"

namespace modmon::lambda {

// term ::= ident | term term | '\' ident '.' term | '(' term ')'
// with `λ` accepted for '\'. Throws ParseError.
LcTerm parse_lambda(std::string_view text);

// Binder names v0, v1, ... chosen to avoid free names.
std::string format_lambda(const LcTerm& t);

// `λ. 0 y` style with numeric indices.
std::string format_debruijn(const LcTerm& t);

}  // namespace modmon::lambda
