#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modmon/lambda/term.hpp"

namespace modmon::lambda {

// Every term reachable by contracting one beta or eta redex at any position.
std::vector<LcTerm> one_step_reducts(const LcTerm& t);

enum class PreorderResult { related, not_related_within_depth };

std::string to_string(PreorderResult r);

// Breadth-first search for a reduction path from `from` to `to` of at most
// `depth` steps. Only the oriented relation is explored.
PreorderResult preorder_leq(const LcTerm& from, const LcTerm& to, std::size_t depth);

}  // namespace modmon::lambda
