#pragma once

#include <string>
#include <string_view>

#include "modmon/typed/stlc.hpp"

namespace modmon::typed {

// T ::= '*' | T '->' T, arrows associate to the right.
SimpleType parse_type(std::string_view text);

// `\x:T. t` with application and parentheses as in the untyped grammar.
// Free identifiers take their type from `ctx`; an unknown one is a
// TypeError, malformed text a ParseError.
StlcTerm parse_stlc(std::string_view text, const TypeContext& ctx = {});

std::string format_stlc(const StlcTerm& t);

}  // namespace modmon::typed
