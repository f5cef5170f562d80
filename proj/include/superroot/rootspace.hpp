#pragma once

#include "superroot/cartan.hpp"
#include "superroot/roots.hpp"

namespace superroot {

/// beta(h) = sum_{i,j} h_i beta_j a_ij.
Rational pair(const RootVector& beta, const CorootVector& h, const CartanData& cartan);

/// (alpha_i, alpha_j) = d_i a_ij extended bilinearly. Throws NotSymmetrizable
/// when d does not symmetrize the matrix.
Rational bilinear(const RootVector& beta, const RootVector& gamma, const CartanData& cartan,
                  const std::vector<Rational>& d);

/// Additive parity sum beta_i p(i) mod 2.
int parity(const RootVector& beta, const CartanData& cartan);

} // namespace superroot
