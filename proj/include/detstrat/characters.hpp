#pragma once

#include "detstrat/partition.hpp"
#include "detstrat/space.hpp"

namespace detstrat {

// Character sets of the simple equivariant D-modules D_p.
//
// All membership tests read weight entries with 1-based indices and the
// boundary convention lambda_k = +infinity for k <= 0 and lambda_k = -infinity
// for k > n. With it, a lower bound at index 0 and an upper bound at index
// n+1 are vacuous, which is what makes D_n = S and D_0 the delta module
// come out right.

// lambda(s) = (lambda_1-(m-n), ..., lambda_s-(m-n), s^(m-n), lambda_{s+1}, ..., lambda_n)
// of length m. Throws std::invalid_argument if the result is not dominant.
IntegerWeight lambda_extension(const IntegerWeight& w, int s, int m);

// General(m,n), n = w.length(): the set A(p) of weights with
//   lambda_{n-p} >= m-p  and  lambda_{n-p+1} <= n-p.
bool member_general(const IntegerWeight& w, int m, int p);

// Symmetric(n), n = w.length().
//   n-p odd:  all entries even, lambda_{n-p} >= n-p+1 >= lambda_{n-p+2}
//   n-p even: entries at index <= n-p odd, the rest even,
//             lambda_{n-p} >= n-p+1, lambda_{n-p+1} <= n-p
bool member_symmetric(const IntegerWeight& w, int p);

// Skew(n), n = w.length(), 0 <= p <= floor(n/2).
bool member_skew(const IntegerWeight& w, int p);

// Multiplicity (0 or 1) of S_w F^v (General: S_{w(n-p)} F1^v (x) S_w F2^v) in
// D_p. w has length n for every family.
int multiplicity(const SpaceSpec& space, int p, const IntegerWeight& w);

}  // namespace detstrat
