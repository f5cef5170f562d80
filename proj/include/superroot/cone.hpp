#pragma once

#include "superroot/rational.hpp"
#include "superroot/roots.hpp"

#include <optional>
#include <vector>

namespace superroot {

/// Cap on LP variable count, from SUPERROOT_MAX_LP_VARS (default 4096).
std::size_t max_lp_vars();

/// Some x >= 0 with A x = b, or nullopt. A is rows x cols. Phase-one simplex
/// over Q with Bland's rule, so it terminates and is exact.
/// Throws ProblemTooLarge above max_lp_vars().
std::optional<std::vector<Rational>> solve_nonnegative(const RationalMatrix& a, const std::vector<Rational>& b);

/// target in Q_{>=0}-span of generators.
bool in_cone(const std::vector<RootVector>& generators, const RootVector& target);

/// gamma <= alpha in the preorder: alpha = a gamma + sum a_t t, a > 0, a_t >= 0,
/// t over `others`. Both roots must be positive.
bool precedes(const RootVector& gamma, const RootVector& alpha, const std::vector<RootVector>& others);

} // namespace superroot
