#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osr/bipartite.hpp"

namespace osr {

struct NumericPolicy {
  double rank_tol = default_rank_tol;
  double unitary_tol = default_unitary_tol;
  double dft_eps = default_dft_eps;
  std::uint64_t seed = 0;
  int max_attempts = 64;
};

struct SynthesisRequest {
  int dim_a = 0;
  int dim_b = 0;
  int rank = 0;
  NumericPolicy policy{};
};

// Verification record tying a constructed matrix to its claimed rank and
// construction provenance.
struct Certificate {
  std::string construction;
  int requested_rank = 0;
  int numeric_rank = 0;
  std::optional<int> exact_rank;  // permutation path only
  double unitarity_residual = 0.0;
  std::string parameters;
  bool pass = false;
};

// Rank 3 on C^2 (x) C^2 does not exist: only ranks {1,2,4} are possible
// there.
class RankThreeImpossible : public std::domain_error {
 public:
  RankThreeImpossible();
};

class RankOutOfRange : public std::domain_error {
 public:
  explicit RankOutOfRange(const std::string& what);
};

// Block-diagonal unitary on C^n (x) C^n whose diagonal blocks are the first
// r Weyl operators in lexicographic (a,b) order, the last one repeated to
// fill; operator Schmidt rank exactly r for 1 <= r <= n.
BipartiteOperator diag_block_unitary(int n, int r);

// First Weyl operator (lexicographic) with a projection residual outside
// span(block_list) above threshold. Requires the span to be a proper
// subspace of the full matrix space.
cmat find_independent_unitary(const std::vector<cmat>& block_list);

// Direct sum of a rank-(r-1) unitary on C^small (x) C^small and
// (large-small) copies of a unitary outside its block span; acts on
// C^large (x) C^small with operator Schmidt rank r. For small == 2 the
// target r == 4 is reached by the product construction instead.
BipartiteOperator embed_direct_sum(int small, int large, int r,
                                   const NumericPolicy& policy);

// Same operator with the tensor factors in the caller's (n, m) order,
// n < m.
BipartiteOperator embed_unbalanced(int n, int m, int r,
                                   const NumericPolicy& policy);

struct SynthesisResult {
  BipartiteOperator op;
  Certificate cert;
};

// Constructs a unitary on C^dim_a (x) C^dim_b of operator Schmidt rank
// exactly `rank`, for any dimensions >= 2 and any rank in
// {1,...,min(dim_a,dim_b)^2} except the impossible (2,2) rank 3. The
// certificate re-verifies the output numerically and is always populated.
//
// Dispatch for dim_a == dim_b == d: r <= d diagonal blocks; r == d+1
// product (odd/even); r == d^2-1 Fourier; everything else permutation
// tuples. For dim_a != dim_b: r == 1 tensor of shifts, otherwise the
// direct-sum embedding.
SynthesisResult synthesize(const SynthesisRequest& req);

// {1,2,4} for (2,2), else {1,...,min(n,m)^2}.
std::vector<int> achievable_ranks(int n, int m);

}  // namespace osr
