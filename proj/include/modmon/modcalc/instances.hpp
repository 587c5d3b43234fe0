#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "modmon/core/instances.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/lambda/instances.hpp"
#include "modmon/modcalc/combinators.hpp"
#include "modmon/modcalc/pt_term.hpp"

namespace modmon::modcalc {

using PtModule = core::ModuleInstance<std::string, PtTerm, PtTerm>;
using ListModule = core::ModuleInstance<std::int64_t, core::IntList, core::IntList>;
using ListPairModule =
    core::ModuleInstance<std::int64_t, core::IntList, std::pair<core::IntList, core::IntList>>;
using LcPairModule =
    core::ModuleInstance<std::string, lambda::LcTerm, std::pair<lambda::LcTerm, lambda::LcTerm>>;

PtModule pt_module();

// LC' and LC' x LC.
lambda::LcModule derived_lc_module();
LcPairModule product_lc_module();

// Linearity of n on the tautological pt module. A correct harness reports
// this law as failing.
core::LawReport n_linearity_report(std::size_t samples, std::uint64_t seed,
                                   const core::HarnessOptions& opts = {});

// The square at the term x and substitution x := x*x.
LinearitySquare n_witness();

// Concatenation L x L -> L.
core::LawReport concat_linearity_report(std::size_t samples, std::uint64_t seed,
                                        const core::HarnessOptions& opts = {});

// app : LC x LC -> LC and abs : LC' -> LC.
core::LawReport app_linearity_report(std::size_t samples, std::uint64_t seed,
                                     const core::HarnessOptions& opts = {});
core::LawReport abs_linearity_report(std::size_t samples, std::uint64_t seed,
                                     const core::HarnessOptions& opts = {});

// Both inclusions LC' -> LC'' and eval : LC' x LC -> LC.
core::LawReport inclusion_linearity_report(std::size_t samples, std::uint64_t seed,
                                           const core::HarnessOptions& opts = {});
core::LawReport eval_linearity_report(std::size_t samples, std::uint64_t seed,
                                      const core::HarnessOptions& opts = {});

}  // namespace modmon::modcalc
