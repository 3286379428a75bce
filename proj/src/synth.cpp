#include "osr/synth.hpp"

#include <sstream>

#include <Eigen/SVD>

#include "osr/fourier.hpp"
#include "osr/permutations.hpp"
#include "osr/product.hpp"

namespace osr {

RankThreeImpossible::RankThreeImpossible()
    : std::domain_error(
          "no unitary on C^2 (x) C^2 has operator Schmidt rank 3; only ranks "
          "{1,2,4} are possible there") {}

RankOutOfRange::RankOutOfRange(const std::string& what)
    : std::domain_error(what) {}

BipartiteOperator diag_block_unitary(int n, int r) {
  if (n < 1) throw std::invalid_argument("diag_block_unitary: n must be >= 1");
  if (r < 1 || r > n)
    throw std::invalid_argument("diag_block_unitary: r must lie in {1,...,n}");
  const Eigen::Index total = static_cast<Eigen::Index>(n) * n;
  cmat u = cmat::Zero(total, total);
  for (int i = 0; i < n; ++i) {
    const int t = std::min(i, r - 1);  // lexicographic Weyl index, last repeated
    u.block(static_cast<Eigen::Index>(i) * n, static_cast<Eigen::Index>(i) * n,
            n, n) = weyl(n, t / n, t % n);
  }
  return {n, n, std::move(u)};
}

namespace {

// Index (a,b) of the first Weyl operator whose projection residual outside
// span(block_list) exceeds threshold.
std::pair<int, int> independent_weyl_index(const std::vector<cmat>& block_list) {
  if (block_list.empty())
    throw std::invalid_argument("find_independent_unitary: no blocks given");
  const int n = static_cast<int>(block_list.front().rows());
  for (const cmat& b : block_list)
    if (b.rows() != n || b.cols() != n)
      throw std::invalid_argument("find_independent_unitary: ragged block sizes");

  cmat span(static_cast<Eigen::Index>(n) * n, block_list.size());
  for (size_t t = 0; t < block_list.size(); ++t)
    span.col(static_cast<Eigen::Index>(t)) = flatten(block_list[t]);
  Eigen::JacobiSVD<cmat> svd(span, Eigen::ComputeThinU);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("find_independent_unitary: SVD failed");
  const auto& sigma = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index t = 0; t < sigma.size(); ++t)
    if (sigma(t) > default_rank_tol * sigma(0)) ++rank;
  if (rank >= static_cast<Eigen::Index>(n) * n)
    throw std::invalid_argument(
        "find_independent_unitary: blocks already span the full matrix space");

  const cmat basis = svd.matrixU().leftCols(rank);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const cvec w = flatten(weyl(n, a, b));
      const double residual = (w - basis * (basis.adjoint() * w)).norm() / w.norm();
      if (residual > 1e-6) return {a, b};
    }
  // The Weyl operators form a basis, so a proper subspace always misses one.
  throw std::logic_error("find_independent_unitary: no Weyl operator found");
}

}  // namespace

cmat find_independent_unitary(const std::vector<cmat>& block_list) {
  const auto [a, b] = independent_weyl_index(block_list);
  return weyl(static_cast<int>(block_list.front().rows()), a, b);
}

BipartiteOperator embed_direct_sum(int small, int large, int r,
                                   const NumericPolicy& policy) {
  if (small < 2 || large <= small)
    throw std::invalid_argument("embed_direct_sum: requires 2 <= small < large");
  if (r < 2 || r > small * small)
    throw std::invalid_argument(
        "embed_direct_sum: r must lie in {2,...,small^2}");
  // A rank-3 inner unitary does not exist on C^2 (x) C^2, so the full rank 4
  // comes from the product construction instead of the direct sum.
  if (small == 2 && r == 4) return product_unitary(large, small, 2, 2);

  SynthesisRequest sub_req{small, small, r - 1, policy};
  const SynthesisResult sub = synthesize(sub_req);
  const auto [wa, wb] = independent_weyl_index(blocks(sub.op));
  const cmat v = weyl(small, wa, wb);

  const Eigen::Index total = static_cast<Eigen::Index>(large) * small;
  cmat u = cmat::Zero(total, total);
  u.topLeftCorner(sub.op.mat.rows(), sub.op.mat.cols()) = sub.op.mat;
  for (int i = small; i < large; ++i)
    u.block(static_cast<Eigen::Index>(i) * small,
            static_cast<Eigen::Index>(i) * small, small, small) = v;
  return {large, small, std::move(u)};
}

BipartiteOperator embed_unbalanced(int n, int m, int r,
                                   const NumericPolicy& policy) {
  if (n >= m)
    throw std::invalid_argument("embed_unbalanced: requires n < m");
  if (n == 2 && r == 4) return product_unitary(n, m, 2, 2);
  return swap_factors(embed_direct_sum(n, m, r, policy));
}

std::vector<int> achievable_ranks(int n, int m) {
  if (n < 2 || m < 2)
    throw std::invalid_argument("achievable_ranks: dimensions must be >= 2");
  if (n == 2 && m == 2) return {1, 2, 4};
  const int cap = std::min(n, m) * std::min(n, m);
  std::vector<int> out(cap);
  for (int r = 1; r <= cap; ++r) out[r - 1] = r;
  return out;
}

namespace {

std::string tuple_to_string(const PermTuple& t) {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < t.size(); ++k) {
    if (k > 0) os << ",";
    os << "[";
    for (int i = 0; i < t.size(); ++i) {
      if (i > 0) os << ",";
      os << t[k](i);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

struct Construction {
  BipartiteOperator op;
  std::string tag;
  std::string parameters;
  std::optional<int> exact_rank;
};

Construction construct_balanced(int d, int r, const NumericPolicy& policy) {
  if (d == 2) {
    if (r == 3) throw RankThreeImpossible();
    if (r == 4)
      return {product_unitary(2, 2, 2, 2), "product", "k=2 l=2", std::nullopt};
    return {diag_block_unitary(2, r), "diag-blocks",
            "weyl_blocks=" + std::to_string(r), std::nullopt};
  }
  if (r <= d) {
    return {diag_block_unitary(d, r), "diag-blocks",
            "weyl_blocks=" + std::to_string(r), std::nullopt};
  }
  if (r == d + 1) {
    if (d % 2 == 1) {
      std::ostringstream params;
      params << "k=2 l=" << (d + 1) / 2;
      return {rank_n_plus_1_odd(d), "product-odd", params.str(), std::nullopt};
    }
    std::ostringstream params;
    params << "half=" << d / 2 << " inner=product(2," << d / 2 << ")";
    return {rank_n_plus_1_even(d), "product-even", params.str(), std::nullopt};
  }
  if (r == d * d - 1) {
    const FourierConstruction fc =
        rank_n2_minus_1(d, policy.dft_eps, policy.seed, policy.max_attempts);
    std::ostringstream params;
    params << "p=" << fc.witness.p << " x=" << fc.witness.x
           << " attempts=" << fc.witness.attempts
           << " min_abs_dft=" << fc.witness.min_abs_dft;
    return {fc.op, "fourier", params.str(), std::nullopt};
  }
  const TuplePair pair = tuples_with_rank(d, r);
  std::string params = "alpha=" + tuple_to_string(pair.alpha) +
                       " beta=" + tuple_to_string(pair.beta);
  return {perm_unitary(pair.alpha, pair.beta), "permutation", std::move(params),
          count_pairs(pair.alpha, pair.beta)};
}

Construction construct(const SynthesisRequest& req) {
  const int n = req.dim_a;
  const int m = req.dim_b;
  const int r = req.rank;
  if (n == m) return construct_balanced(n, r, req.policy);
  if (r == 1) {
    return {{n, m, kron(cyclic_shift(n, 1), cyclic_shift(m, 1))},
            "tensor",
            "shift(1) (x) shift(1)",
            std::nullopt};
  }
  const int small = std::min(n, m);
  if (small == 2 && r == 4) {
    return {product_unitary(n, m, 2, 2), "product", "k=2 l=2", std::nullopt};
  }
  std::ostringstream params;
  params << "inner_rank=" << r - 1 << " copies=" << std::max(n, m) - small;
  if (n < m) {
    return {embed_unbalanced(n, m, r, req.policy), "embedding", params.str(),
            std::nullopt};
  }
  return {embed_direct_sum(m, n, r, req.policy), "embedding", params.str(),
          std::nullopt};
}

}  // namespace

SynthesisResult synthesize(const SynthesisRequest& req) {
  if (req.dim_a < 2 || req.dim_b < 2)
    throw std::invalid_argument("synthesize: dimensions must be >= 2");
  const int cap = std::min(req.dim_a, req.dim_b);
  if (req.rank < 1 || req.rank > cap * cap) {
    std::ostringstream msg;
    msg << "synthesize: rank " << req.rank << " outside {1,...," << cap * cap
        << "} for dimensions (" << req.dim_a << "," << req.dim_b << ")";
    throw RankOutOfRange(msg.str());
  }

  Construction c = construct(req);
  Certificate cert;
  cert.construction = c.tag;
  cert.requested_rank = req.rank;
  cert.numeric_rank = schmidt_rank(c.op, req.policy.rank_tol);
  cert.exact_rank = c.exact_rank;
  cert.unitarity_residual = unitarity_residual(c.op.mat);
  cert.parameters = std::move(c.parameters);
  cert.pass = cert.numeric_rank == cert.requested_rank &&
              cert.unitarity_residual < req.policy.unitary_tol &&
              (!cert.exact_rank || *cert.exact_rank == cert.numeric_rank);
  return {std::move(c.op), std::move(cert)};
}

}  // namespace osr
