#pragma once

#include <vector>

#include "osr/types.hpp"

namespace osr {

// Kronecker product, size (rows(a)*rows(b)) x (cols(a)*cols(b)).
cmat kron(const cmat& a, const cmat& b);

// Hilbert-Schmidt inner product tr(a* b). Throws on shape mismatch.
cplx hs_inner(const cmat& a, const cmat& b);

double hs_norm(const cmat& a);

// Row-major flattening: the (r,c) entry lands at index r*cols + c, so the
// matrix unit e_i e_j* maps to e_i (x) e_j.
cvec flatten(const cmat& m);
cmat unflatten(const cvec& v, int rows, int cols);

// Max-entry norm of U U* - I.
double unitarity_residual(const cmat& u);

struct UnitarityCheck {
  bool unitary = false;
  double residual = 0.0;
};

UnitarityCheck check_unitary(const cmat& u, double tol = default_unitary_tol);

// Permutation matrix sending basis vector i to (i + k) mod dim; k may be
// any integer.
cmat cyclic_shift(int dim, long k);

// Clock matrix diag(1, w, w^2, ...) with w = exp(2*pi*i/dim).
cmat clock(int dim);

// Weyl operator X^a Z^b (shift and clock powers), 0 <= a,b < dim. The dim^2
// of them are unitary and pairwise orthogonal in the Hilbert-Schmidt inner
// product, hence a basis of the dim x dim matrices.
cmat weyl(int dim, int a, int b);

// Singular values in non-increasing order. Throws std::runtime_error if the
// decomposition fails to converge.
std::vector<double> singular_values(const cmat& m);

// Number of singular values exceeding tol * sigma_max; 0 for the zero
// matrix. tol must be positive.
int numerical_rank(const cmat& m, double tol = default_rank_tol);

}  // namespace osr
