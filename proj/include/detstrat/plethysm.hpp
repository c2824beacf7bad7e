#pragma once

#include "detstrat/laurent_poly.hpp"
#include "detstrat/partition.hpp"

#include <vector>

namespace detstrat {

// Summands of the exterior power Lambda^i(F1 (x) F2), dim F1 = m >= dim F2 = n >= 1.
//
// Each mu returned indexes the summand S_{mu'}F1 (x) S_mu F2; the surviving
// mu are those of size i with at most n parts and mu_1 <= m.
// Lexicographically decreasing.
std::vector<Partition> cauchy_exterior(int m, int n, int i);

// The index set Y(2i) of Lambda^i(Sym^2 F), dim F = n: every lambda built
// from a Durfee size r and a partition alpha in the r x (n-r) box as
//   lambda = (r+1+alpha_1, ..., r+1+alpha_r, alpha'_1, alpha'_2, ...).
// Lexicographically decreasing.
std::vector<Partition> symmetric_exterior_partitions(int n, int i);

// The index set Z(2i) of Lambda^i(Lambda^2 F), dim F = n: alpha in the
// r x (n-r-1) box and
//   lambda = (r+alpha_1, ..., r+alpha_r, r, alpha'_1, alpha'_2, ...).
// Lexicographically decreasing.
std::vector<Partition> skew_exterior_partitions(int n, int i);

// dim S_p(C^N) by the hook-content formula; 0 when p has more than N parts.
Integer schur_dimension(const Partition& p, int N);

}  // namespace detstrat
