#pragma once

#include <vector>

#include "osr/matrix_ops.hpp"
#include "osr/types.hpp"

namespace osr {

// A square matrix on C^dim_a (x) C^dim_b. Block (i,j), 0 <= i,j < dim_a, is
// the dim_b x dim_b submatrix at row offset i*dim_b, column offset j*dim_b,
// i.e. X = sum_ij e_i e_j* (x) block(i,j).
struct BipartiteOperator {
  int dim_a = 0;
  int dim_b = 0;
  cmat mat;

  BipartiteOperator() = default;
  BipartiteOperator(int dim_a, int dim_b, cmat m);

  int total_dim() const { return dim_a * dim_b; }
  cmat block(int i, int j) const;
};

// All dim_a^2 blocks in row-major (i,j) order.
std::vector<cmat> blocks(const BipartiteOperator& x);

// The dim_a^2 x dim_b^2 matrix whose row (i*dim_a + j) is flatten(block(i,j)),
// stored un-conjugated. Its ordinary rank equals the operator Schmidt rank
// of x; the flattening convention only affects the phases of decomposition
// factors, never the rank.
cmat realign(const BipartiteOperator& x);

// Inverse reshaping: unrealign(realign(x), x.dim_a, x.dim_b) == x entrywise.
BipartiteOperator unrealign(const cmat& r, int dim_a, int dim_b);

// Conjugation by the tensor-factor flip: result acts on C^dim_b (x) C^dim_a
// and has the same operator Schmidt rank.
BipartiteOperator swap_factors(const BipartiteOperator& x);

// Operator Schmidt rank: the numeric rank of the realignment. Throws for
// the zero operator, for which the invariant is undefined.
int schmidt_rank(const BipartiteOperator& x, double tol = default_rank_tol);

struct SchmidtTerm {
  double weight = 0.0;  // positive, terms sorted non-increasing
  cmat factor_a;        // dim_a x dim_a
  cmat factor_b;        // dim_b x dim_b
};

// x = sum_k weight_k * factor_a_k (x) factor_b_k with each factor family
// orthonormal in the Hilbert-Schmidt inner product.
struct SchmidtDecomposition {
  std::vector<SchmidtTerm> terms;

  int rank() const { return static_cast<int>(terms.size()); }
  cmat reconstruct() const;
};

SchmidtDecomposition schmidt_decompose(const BipartiteOperator& x,
                                       double tol = default_rank_tol);

}  // namespace osr
