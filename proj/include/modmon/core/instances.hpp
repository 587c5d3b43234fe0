#pragma once

#include <cstdint>
#include <string>

#include "modmon/core/instance.hpp"
#include "modmon/core/list_monad.hpp"
#include "modmon/core/scoped_term.hpp"

namespace modmon::core {

using IntList = ListVal<std::int64_t>;
using ListMonad = MonadInstance<std::int64_t, IntList>;

std::string show_list(const IntList& xs);

// Finite lists over a small integer alphabet, bind = flattening.
ListMonad list_monad();

MonoidAlgebra<std::int64_t> sum_algebra();
MonoidAlgebra<std::int64_t> subtraction_algebra();
MonoidAlgebra<std::int64_t> one_point_algebra();

// Terms over `sig` with gen_subst as bind; free names from a fixed pool.
MonadInstance<std::string, ScopedTerm> scoped_monad(const Signature& sig);

// Random well-scoped term over `sig` with `depth` enclosing slots.
ScopedTerm generate_scoped(const Signature& sig, Rng& rng, std::size_t size, std::size_t depth);

const std::vector<std::string>& free_name_pool();

}  // namespace modmon::core
