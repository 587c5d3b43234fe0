#pragma once

#include <cstddef>
#include <optional>

#include "modmon/core/fuel.hpp"
#include "modmon/lambda/term.hpp"

namespace modmon::lambda {

// Contracts the leftmost-outermost beta redex.
std::optional<LcTerm> beta_step(const LcTerm& t);

// Contracts the leftmost-outermost eta redex  \. (shift u) 0  ->  u.
std::optional<LcTerm> eta_step(const LcTerm& t);

bool is_beta_normal(const LcTerm& t);
bool is_eta_normal(const LcTerm& t);

}  // namespace modmon::lambda
