#pragma once

#include "detstrat/laurent_poly.hpp"
#include "detstrat/space.hpp"

namespace detstrat {

enum class Method { Enumerate, Closed };

// sum_i dim(Omega^i_X (x) D_p)^G q^i, counted summand by summand: a summand
// of Omega^i pairs with a summand of D_p exactly when their highest weights
// match (Schur's lemma), and both sides are multiplicity free.
LaurentPoly inv_derham_gf_enum(const SpaceSpec& space, int p);

// The same generating function from the Gaussian-binomial closed forms:
//   General    [n choose p]_{q^2}       * q^{(m-p)(n-p)}
//   Symmetric  [m+eps choose s]_{q^4}   * q^{binom(n-p+1,2)},  m = n/2, s = p/2
//   Skew       [m choose p]_{q^4}       * q^{binom(n,2) - p(2n-2p-1)}
LaurentPoly inv_derham_gf_closed(const SpaceSpec& space, int p);

LaurentPoly inv_derham_gf(const SpaceSpec& space, int p, Method method);

// 1 iff p is even and n is odd.
int epsilon_symmetric(int n, int p);

// sum_i h^i(IC_{V_p}) q^i = q^{-dim X} * inv_derham_gf_closed(space, p).
LaurentPoly ic_poincare(const SpaceSpec& space, int p);

// IC local Euler characteristic of V_p at the origin:
// (-1)^{dim X} * gf(-1).
Integer euler_char_at_origin(const SpaceSpec& space, int p, Method method);

}  // namespace detstrat
