#pragma once

#include <utility>
#include <vector>

#include "osr/bipartite.hpp"

namespace osr {

// Partition of the identity on C^dim into `parts` pairwise-orthogonal
// non-zero diagonal projectors over contiguous index ranges, sized as
// equally as possible (larger ranges first).
std::vector<cmat> partition_projectors(int dim, int parts);

// The two commuting controlled-shift unitaries whose product realizes rank
// k*l: V1 = sum_i P_i (x) S^m_i and V2 = sum_j S^n_j (x) Q_j, with shift
// offsets starting at 1.
std::pair<cmat, cmat> product_factors(int n, int m, int k, int l);

// V1 * V2 on C^n (x) C^m; unitary with operator Schmidt rank exactly k*l
// for any 1 <= k,l <= min(n,m).
BipartiteOperator product_unitary(int n, int m, int k, int l);

// Rank n+1 on C^n (x) C^n for odd n >= 3, via the factor split (2, (n+1)/2).
BipartiteOperator rank_n_plus_1_odd(int n);

// Rank n+1 on C^n (x) C^n for even n >= 4. Doubles the blocks of a rank-n
// unitary on C^{n/2} (x) C^{n/2} along the diagonal and appends n/2 copies
// of diag(V, W) with V != W, which lies outside the span of the doubled
// blocks.
BipartiteOperator rank_n_plus_1_even(int n);

}  // namespace osr
