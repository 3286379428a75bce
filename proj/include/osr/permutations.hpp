#pragma once

#include <vector>

#include "osr/bipartite.hpp"

namespace osr {

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // i -> (i + k) mod n.
  static Permutation cycle_power(int n, long k);
  // Fixes 0..l-1 and runs one cycle on the remaining n-l indices. Requires
  // l != n-1 (no permutation has exactly n-1 fixed points).
  static Permutation with_fixed_points(int n, int l);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  int fixed_point_count() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// An n-tuple of permutations of {0,...,n-1}.
class PermTuple {
 public:
  explicit PermTuple(std::vector<Permutation> components);

  static PermTuple identities(int n);

  int size() const { return static_cast<int>(components_.size()); }
  const Permutation& operator[](int i) const { return components_[i]; }
  const std::vector<Permutation>& components() const { return components_; }

  bool operator==(const PermTuple&) const = default;

 private:
  std::vector<Permutation> components_;
};

struct TuplePair {
  PermTuple alpha;
  PermTuple beta;
};

// The unitary on C^n (x) C^n whose block (i,j) is the matrix unit
// e_{alpha_i(j)} e_{beta_j(i)}*. Always a permutation matrix on C^{n^2}.
BipartiteOperator perm_unitary(const PermTuple& alpha, const PermTuple& beta);

// Number of distinct pairs (alpha_i(j), beta_j(i)) over all i,j. Exact
// integer arithmetic; equals the operator Schmidt rank of
// perm_unitary(alpha, beta).
int count_pairs(const PermTuple& alpha, const PermTuple& beta);

// Tuple pair with count_pairs == r for r in {n,...,2n} \ {n+1}:
// alpha = (pi, c^1, ..., c^{n-1}), beta = (id, c^1, ..., c^{n-1}) where pi
// has 2n - r fixed points.
TuplePair low_rank_tuples(int n, int r);

// Tuple pair with count_pairs == r for n > 3 and r in {2n,...,3n-1}:
// alpha = (c^1, c^1, c^2, ..., c^{n-1}) (the repeated first component is
// deliberate), beta = (pi, c^1, ..., c^{n-1}) with pi selected per target.
TuplePair mid_rank_tuples(int n, int r);

// Grows both tuples from size n-1 to size n: every component is extended to
// fix the new top index, and the extra permutations (also extended) become
// the new last components. count_pairs increases by exactly 2n - 1.
TuplePair extend_tuples(const TuplePair& pair, const Permutation& extra_alpha,
                        const Permutation& extra_beta);

// Tuple pair with count_pairs == r for any n >= 3 and
// r in {n,...,n^2} \ {n+1, n^2-1}. Recursive: explicit families cover
// r <= 3n-1, larger targets extend a size-(n-1) pair by identity components.
TuplePair tuples_with_rank(int n, int r);

}  // namespace osr
