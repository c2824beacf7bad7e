#pragma once

#include "detstrat/derham.hpp"
#include "detstrat/space.hpp"
#include "detstrat/strata_matrix.hpp"

namespace detstrat {

// The three invariants of a rank stratification, as upper-triangular
// matrices indexed by strata:
//
//   chi(i,j)  IC local Euler characteristic of V_j at a point of X_i
//   e(i,j)    local Euler obstruction Eu_{V_j}(x_i)
//   m(i,j)    microlocal index: multiplicity of T*_{V_i}X in CC(D_j)
//
// tied together by Kashiwara's index formula
//
//   chi(i,j) = sum_k (-1)^{d_k} e(i,k) m(k,j),   i.e.   X = E * M
//
// where M(i,j) = (-1)^{d_i} m(i,j) is the signed microlocal matrix.

// Identity for General and Skew; for Symmetric also m(i-1,i) = 1 whenever
// n-i is odd. These are taken as known inputs, not computed.
StrataMatrix micro_indices(const SpaceSpec& space);
StrataMatrix signed_micro(const SpaceSpec& space);

StrataMatrix chi_closed(const SpaceSpec& space);
StrataMatrix euler_closed(const SpaceSpec& space);

// chi with no closed form: row 0 is the IC Euler characteristic at the
// origin from the enumerated de Rham generating function, and row i > 0 is
// reduced to row 0 of the transversal slice,
//
//   chi(i,j) = (-1)^{d_i} chi'(0, j-i),
//
// chi' taken on General(m-i,n-i), Symmetric(n-i) or Skew(n-2i).
StrataMatrix chi_from_enumeration(const SpaceSpec& space, Method method = Method::Enumerate);

// The unique E with chi = E * signed_micro, by back-substitution over the
// integers. signed_micro must have every diagonal entry equal to +1 or -1.
StrataMatrix solve_euler(const StrataMatrix& chi, const StrataMatrix& signed_micro);

// chi_closed == euler_closed * signed_micro, exactly.
bool verify_index_identity(const SpaceSpec& space);

}  // namespace detstrat
