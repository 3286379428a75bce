#include "osr/product.hpp"

#include <stdexcept>

#include "osr/matrix_ops.hpp"

namespace osr {

std::vector<cmat> partition_projectors(int dim, int parts) {
  if (parts < 1 || parts > dim)
    throw std::invalid_argument(
        "partition_projectors: parts must lie in {1,...,dim}");
  std::vector<cmat> out;
  out.reserve(parts);
  const int base = dim / parts;
  const int remainder = dim % parts;
  int offset = 0;
  for (int t = 0; t < parts; ++t) {
    const int size = base + (t < remainder ? 1 : 0);
    cmat p = cmat::Zero(dim, dim);
    for (int i = offset; i < offset + size; ++i) p(i, i) = 1.0;
    out.push_back(std::move(p));
    offset += size;
  }
  return out;
}

std::pair<cmat, cmat> product_factors(int n, int m, int k, int l) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("product_factors: dimensions must be >= 1");
  const int cap = std::min(n, m);
  if (k < 1 || k > cap || l < 1 || l > cap)
    throw std::invalid_argument(
        "product_factors: k and l must lie in {1,...,min(n,m)}");
  const std::vector<cmat> p = partition_projectors(n, k);
  const std::vector<cmat> q = partition_projectors(m, l);
  const Eigen::Index total = static_cast<Eigen::Index>(n) * m;
  cmat v1 = cmat::Zero(total, total);
  cmat v2 = cmat::Zero(total, total);
  // Shift offsets start at 1 so no summand degenerates to a projector
  // against the identity shift.
  for (int i = 1; i <= k; ++i) v1 += kron(p[i - 1], cyclic_shift(m, i));
  for (int j = 1; j <= l; ++j) v2 += kron(cyclic_shift(n, j), q[j - 1]);
  return {std::move(v1), std::move(v2)};
}

BipartiteOperator product_unitary(int n, int m, int k, int l) {
  auto [v1, v2] = product_factors(n, m, k, l);
  return {n, m, v1 * v2};
}

BipartiteOperator rank_n_plus_1_odd(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("rank_n_plus_1_odd: n must be odd and >= 3");
  return product_unitary(n, n, 2, (n + 1) / 2);
}

BipartiteOperator rank_n_plus_1_even(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("rank_n_plus_1_even: n must be even and >= 4");
  const int k = n / 2;
  // Rank-2k unitary on C^k (x) C^k; 2k <= k^2 holds for k >= 2.
  const BipartiteOperator inner = product_unitary(k, k, 2, k);

  const cmat v = cmat::Identity(k, k);
  cmat w = cmat::Identity(k, k);
  w(k - 1, k - 1) = -1.0;

  const Eigen::Index total = static_cast<Eigen::Index>(n) * n;
  cmat u = cmat::Zero(total, total);
  auto put_block = [&](int grid_i, int grid_j, const cmat& top, const cmat& bottom) {
    const Eigen::Index r0 = static_cast<Eigen::Index>(grid_i) * n;
    const Eigen::Index c0 = static_cast<Eigen::Index>(grid_j) * n;
    u.block(r0, c0, k, k) = top;
    u.block(r0 + k, c0 + k, k, k) = bottom;
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const cmat a = inner.block(i, j);
      put_block(i, j, a, a);
    }
  for (int i = k; i < n; ++i) put_block(i, i, v, w);
  return {n, n, std::move(u)};
}

}  // namespace osr
