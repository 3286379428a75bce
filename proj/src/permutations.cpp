#include "osr/permutations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace osr {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  require(n >= 1, "Permutation: empty image list");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    require(v >= 0 && v < n, "Permutation: image out of range");
    require(!seen[v], "Permutation: images not distinct");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::cycle_power(int n, long k) {
  require(n >= 1, "cycle_power: n must be >= 1");
  const long kk = ((k % n) + n) % n;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<int>((i + kk) % n);
  return Permutation(std::move(img));
}

Permutation Permutation::with_fixed_points(int n, int l) {
  require(n >= 1 && l >= 0 && l <= n, "with_fixed_points: l out of range");
  require(l != n - 1, "with_fixed_points: no permutation has exactly n-1 fixed points");
  std::vector<int> img(n);
  for (int i = 0; i < l; ++i) img[i] = i;
  for (int i = l; i < n; ++i) img[i] = (i + 1 < n) ? i + 1 : l;
  return Permutation(std::move(img));
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    if (images_[i] == i) ++count;
  return count;
}

PermTuple::PermTuple(std::vector<Permutation> components)
    : components_(std::move(components)) {
  const int n = static_cast<int>(components_.size());
  require(n >= 1, "PermTuple: empty tuple");
  for (const auto& p : components_)
    require(p.size() == n, "PermTuple: component size must equal tuple length");
}

PermTuple PermTuple::identities(int n) {
  return PermTuple(std::vector<Permutation>(n, Permutation::identity(n)));
}

BipartiteOperator perm_unitary(const PermTuple& alpha, const PermTuple& beta) {
  require(alpha.size() == beta.size(), "perm_unitary: tuple size mismatch");
  const int n = alpha.size();
  cmat u = cmat::Zero(static_cast<Eigen::Index>(n) * n,
                      static_cast<Eigen::Index>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      u(static_cast<Eigen::Index>(i) * n + alpha[i](j),
        static_cast<Eigen::Index>(j) * n + beta[j](i)) = 1.0;
  return {n, n, std::move(u)};
}

int count_pairs(const PermTuple& alpha, const PermTuple& beta) {
  require(alpha.size() == beta.size(), "count_pairs: tuple size mismatch");
  const int n = alpha.size();
  std::vector<bool> seen(static_cast<size_t>(n) * n, false);
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const size_t key = static_cast<size_t>(alpha[i](j)) * n + beta[j](i);
      if (!seen[key]) {
        seen[key] = true;
        ++count;
      }
    }
  return count;
}

TuplePair low_rank_tuples(int n, int r) {
  require(n >= 2, "low_rank_tuples: n must be >= 2");
  require(r >= n && r <= 2 * n && r != n + 1,
          "low_rank_tuples: r must lie in {n,...,2n} minus n+1");
  const int fixed = 2 * n - r;  // r = 2n - l
  std::vector<Permutation> a, b;
  a.push_back(Permutation::with_fixed_points(n, fixed));
  b.push_back(Permutation::identity(n));
  for (int k = 1; k < n; ++k) {
    a.push_back(Permutation::cycle_power(n, k));
    b.push_back(Permutation::cycle_power(n, k));
  }
  return {PermTuple(std::move(a)), PermTuple(std::move(b))};
}

namespace {

// The four explicit permutations pi used by mid_rank_tuples, keyed by the
// target pair count r = count.
Permutation mid_range_pi(int n, int r) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  if (r == 3 * n - 1) return Permutation::cycle_power(n, 2);
  if (r == 2 * n) {
    img[0] = 1;
    img[1] = 0;
    return Permutation(std::move(img));
  }
  if (r == 2 * n + 1) {
    img[0] = 1;
    img[1] = 2;
    img[2] = 0;
    return Permutation(std::move(img));
  }
  const int k = 3 * n - 1 - r;  // 0 < k < n-2
  img[0] = 1;
  img[1] = k + 1;
  img[n - 1] = 0;
  for (int i = k + 1; i <= n - 2; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

}  // namespace

TuplePair mid_rank_tuples(int n, int r) {
  require(n > 3, "mid_rank_tuples: n must be > 3");
  require(r >= 2 * n && r <= 3 * n - 1,
          "mid_rank_tuples: r must lie in {2n,...,3n-1}");
  std::vector<Permutation> a, b;
  a.push_back(Permutation::cycle_power(n, 1));  // the repeated c^1
  b.push_back(mid_range_pi(n, r));
  for (int k = 1; k < n; ++k) {
    a.push_back(Permutation::cycle_power(n, k));
    b.push_back(Permutation::cycle_power(n, k));
  }
  return {PermTuple(std::move(a)), PermTuple(std::move(b))};
}

namespace {

Permutation extend_to_fix_top(const Permutation& p) {
  std::vector<int> img = p.images();
  img.push_back(p.size());
  return Permutation(std::move(img));
}

}  // namespace

TuplePair extend_tuples(const TuplePair& pair, const Permutation& extra_alpha,
                        const Permutation& extra_beta) {
  const int old_n = pair.alpha.size();
  require(pair.beta.size() == old_n, "extend_tuples: tuple size mismatch");
  require(extra_alpha.size() == old_n && extra_beta.size() == old_n,
          "extend_tuples: extras must match the original size");
  std::vector<Permutation> a, b;
  for (int k = 0; k < old_n; ++k) {
    a.push_back(extend_to_fix_top(pair.alpha[k]));
    b.push_back(extend_to_fix_top(pair.beta[k]));
  }
  a.push_back(extend_to_fix_top(extra_alpha));
  b.push_back(extend_to_fix_top(extra_beta));
  return {PermTuple(std::move(a)), PermTuple(std::move(b))};
}

TuplePair tuples_with_rank(int n, int r) {
  require(n >= 3, "tuples_with_rank: n must be >= 3");
  require(r >= n && r <= n * n, "tuples_with_rank: r must lie in {n,...,n^2}");
  require(r != n + 1 && r != n * n - 1,
          "tuples_with_rank: ranks n+1 and n^2-1 are not covered by the "
          "permutation family");
  if (n == 3) {
    if (r == 9) {
      return {PermTuple::identities(3), PermTuple::identities(3)};
    }
    if (r == 7) {
      std::vector<Permutation> comps{Permutation::identity(3),
                                     Permutation::identity(3),
                                     Permutation::cycle_power(3, 1)};
      PermTuple t(comps);
      return {t, t};
    }
    return low_rank_tuples(3, r);  // r in {3,5,6}
  }
  if (r <= 2 * n) return low_rank_tuples(n, r);
  if (r <= 3 * n - 1) return mid_rank_tuples(n, r);
  TuplePair sub = tuples_with_rank(n - 1, r - 2 * n + 1);
  const Permutation extra = Permutation::identity(n - 1);
  return extend_tuples(sub, extra, extra);
}

}  // namespace osr
