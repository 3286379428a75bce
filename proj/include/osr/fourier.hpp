#pragma once

#include <cstdint>
#include <vector>

#include "osr/bipartite.hpp"

namespace osr {

// n x n matrix of unit-modulus phases. The constructor rejects entries
// whose modulus differs from 1 by more than 1e-12.
struct PhaseMatrix {
  cmat lambda;

  explicit PhaseMatrix(cmat entries);
  int size() const { return static_cast<int>(lambda.rows()); }
};

// Distinct positive integer exponents attached to index pairs (i,j) with
// i > j.
class ExponentTable {
 public:
  ExponentTable(int n, std::vector<int> values);

  // Lexicographic enumeration of (i,j), i > j, with values 1,...,n(n-1)/2.
  static ExponentTable canonical(int n);

  int size() const { return n_; }
  int at(int i, int j) const;  // requires i > j

 private:
  int n_ = 0;
  std::vector<int> values_;  // flat index i*(i-1)/2 + j
};

// Unit vector n^{-1/2} sum_j w^{alpha*(j-beta)} e_{(j-beta) mod n} (x) e_j
// with w = exp(2*pi*i/n). The n^2 of them form an orthonormal basis of
// C^n (x) C^n.
cvec fourier_basis_vector(int n, int alpha, int beta);

// Two-dimensional discrete Fourier transform
//   out(a,b) = (1/n) sum_{alpha,beta} exp(2*pi*i*(a*alpha + b*beta)/n)
//              * lambda(alpha,beta)
// (positive sign, no conjugation).
cmat dft2(const cmat& lambda);

// The unitary sum_{alpha,beta} lambda(alpha,beta) v_{alpha,beta}
// v_{alpha,beta}* on C^n (x) C^n. Its operator Schmidt rank equals the
// number of non-zero entries of dft2(lambda).
BipartiteOperator d_lambda(const PhaseMatrix& lambda);

// Smallest prime p < n with n mod p != 0; exists for every n > 2.
int smallest_nondividing_prime(int n);

// One-parameter family of phase matrices whose 2-D DFT vanishes at (0,0)
// for every x and, for generic x, nowhere else. Diagonal entries are fixed
// n-th roots of unity; off-diagonal entries are signed powers of
// exp(2*pi*i*x/n) with the exponents of the pairs (1,p)/(0,1) swapped
// against their mirrors.
PhaseMatrix phase_family(int n, double x, const ExponentTable& exps, int p);

struct FourierWitness {
  double x = 0.0;
  int p = 0;
  double min_abs_dft = 0.0;  // smallest |dft2| over (a,b) != (0,0)
  int attempts = 0;
};

// Samples x from a seeded generator until dft2(phase_family(...)) has
// modulus > eps everywhere except (0,0) and modulus < eps there. The bad x
// form a finite set, so success is generic; throws std::runtime_error after
// max_attempts (a signal that eps is too aggressive, not a mathematical
// failure).
FourierWitness find_phase_parameter(int n, double eps, std::uint64_t seed,
                                    int max_attempts = 64);

struct FourierConstruction {
  BipartiteOperator op;
  FourierWitness witness;
};

// Full pipeline producing a unitary of operator Schmidt rank n^2 - 1 for
// any n > 2.
FourierConstruction rank_n2_minus_1(int n, double eps = default_dft_eps,
                                    std::uint64_t seed = 0,
                                    int max_attempts = 64);

}  // namespace osr
