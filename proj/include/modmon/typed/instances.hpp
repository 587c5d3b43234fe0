#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "modmon/core/instance.hpp"
#include "modmon/core/laws.hpp"
#include "modmon/core/rng.hpp"
#include "modmon/typed/stlc.hpp"
#include "modmon/typed/tlist.hpp"

namespace modmon::typed {

using StlcMonad = core::MonadInstance<TypedName, StlcTerm>;
using StlcModule = core::ModuleInstance<TypedName, StlcTerm, ScopedStlc>;
using TListMonad = core::MonadInstance<SortedName, TListTerm>;

// Types of arrow depth at most `depth`.
SimpleType generate_type(Rng& rng, std::size_t depth = 2);

// Random well-typed term of type `type` over the typed slots `slots`
// (slot 0 first). Free variables come from a fixed name pool, each at the
// type it is used at.
StlcTerm generate_stlc(Rng& rng, const SimpleType& type, std::size_t size,
                       const std::vector<SimpleType>& slots = {});

StlcSubst generate_stlc_subst(Rng& rng, std::size_t size);

// LC_tau with stlc_subst as bind.
StlcMonad stlc_monad();

// The fiber LC_t over a scope typed by `slots`, as a module over LC_tau.
StlcModule stlc_fiber_module(const SimpleType& t, std::vector<SimpleType> slots = {});

// delta_s of the fiber LC_t: the same fiber over one more slot, of type s.
StlcModule delta_module(const SimpleType& s, const SimpleType& t,
                        const std::vector<SimpleType>& slots = {});

// Typed app_{s,t} and abs_{s,t}, syntactic and after normalization.
core::LawReport stlc_linearity_suite(std::size_t samples, std::uint64_t seed,
                                     const core::HarnessOptions& opts = {});

TListTerm generate_tlist(Rng& rng, ListSort sort, std::size_t size);

TListMonad tlist_monad();

// nil, cons and the sort shift against substitution.
core::LawReport tlist_linearity_suite(std::size_t samples, std::uint64_t seed,
                                      const core::HarnessOptions& opts = {});

}  // namespace modmon::typed
