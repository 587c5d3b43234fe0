#pragma once

#include <cstddef>
#include <string>

#include "modmon/core/instance.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/core/scoped_term.hpp"
#include "modmon/lambda/normal_form.hpp"
#include "modmon/lambda/term.hpp"

namespace modmon::lambda {

using LcMonad = core::MonadInstance<std::string, LcTerm>;
using NfMonad = core::MonadInstance<std::string, NfTerm>;
using LcModule = core::ModuleInstance<std::string, LcTerm, LcTerm>;
using NfModule = core::ModuleInstance<std::string, NfTerm, NfTerm>;

// Random well-scoped term with `depth` open slots.
LcTerm generate_lc(Rng& rng, std::size_t size, std::size_t depth);

// Random beta-eta normal form with `depth` open slots.
NfTerm generate_nf(Rng& rng, std::size_t size, std::size_t depth);

LcSubst generate_lc_subst(Rng& rng, std::size_t size);

// Syntactic terms with lc_subst as bind.
LcMonad lc_monad();

// Normal forms; bind renormalizes with `fuel_per_bind` steps and throws
// FuelExhausted beyond that.
NfMonad nf_monad(std::size_t fuel_per_bind);

// Tautological modules, with slot-0 substitution for the evaluation map.
LcModule lc_module();
NfModule nf_module(std::size_t fuel_per_bind);

// Normalization as a map of monads LC -> NF.
core::MonadMorphism<std::string, LcTerm, NfTerm> normalize_morphism(
    std::size_t fuel);

// The lambda signature represented in normal forms (app via exp_app1 and
// slot substitution, abs via exp_abs).
core::Representation<NfTerm> nf_representation(Fuel& fuel);

// Tests abs : LC' -> LC against the monad-morphism square. Expected to fail:
// flattening then abstracting binds every star under one abstraction, the
// other path does not.
core::LawReport abs_monad_morphism_report(std::size_t samples, std::uint64_t seed,
                                          const core::HarnessOptions& opts = {});

}  // namespace modmon::lambda
