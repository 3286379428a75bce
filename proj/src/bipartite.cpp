#include "osr/bipartite.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace osr {

BipartiteOperator::BipartiteOperator(int dim_a_, int dim_b_, cmat m)
    : dim_a(dim_a_), dim_b(dim_b_), mat(std::move(m)) {
  if (dim_a < 1 || dim_b < 1)
    throw std::invalid_argument("BipartiteOperator: dimensions must be >= 1");
  const Eigen::Index total = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (mat.rows() != total || mat.cols() != total)
    throw std::invalid_argument(
        "BipartiteOperator: matrix size does not match dim_a * dim_b");
  if (!mat.allFinite())
    throw std::invalid_argument("BipartiteOperator: entries must be finite");
}

cmat BipartiteOperator::block(int i, int j) const {
  if (i < 0 || i >= dim_a || j < 0 || j >= dim_a)
    throw std::invalid_argument("block: index out of range");
  return mat.block(static_cast<Eigen::Index>(i) * dim_b,
                   static_cast<Eigen::Index>(j) * dim_b, dim_b, dim_b);
}

std::vector<cmat> blocks(const BipartiteOperator& x) {
  std::vector<cmat> out;
  out.reserve(static_cast<size_t>(x.dim_a) * x.dim_a);
  for (int i = 0; i < x.dim_a; ++i)
    for (int j = 0; j < x.dim_a; ++j) out.push_back(x.block(i, j));
  return out;
}

cmat realign(const BipartiteOperator& x) {
  const int n = x.dim_a;
  const int m = x.dim_b;
  cmat r(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(m) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.row(static_cast<Eigen::Index>(i) * n + j) =
          flatten(x.block(i, j)).transpose();
  return r;
}

BipartiteOperator unrealign(const cmat& r, int dim_a, int dim_b) {
  if (r.rows() != static_cast<Eigen::Index>(dim_a) * dim_a ||
      r.cols() != static_cast<Eigen::Index>(dim_b) * dim_b)
    throw std::invalid_argument("unrealign: shape does not match dimensions");
  cmat m(static_cast<Eigen::Index>(dim_a) * dim_b,
         static_cast<Eigen::Index>(dim_a) * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      m.block(static_cast<Eigen::Index>(i) * dim_b,
              static_cast<Eigen::Index>(j) * dim_b, dim_b, dim_b) =
          unflatten(r.row(static_cast<Eigen::Index>(i) * dim_a + j).transpose(),
                    dim_b, dim_b);
  return {dim_a, dim_b, std::move(m)};
}

BipartiteOperator swap_factors(const BipartiteOperator& x) {
  const int n = x.dim_a;
  const int m = x.dim_b;
  cmat y(x.mat.rows(), x.mat.cols());
  // y = F x F* with F(e_i (x) e_j) = e_j (x) e_i.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l)
          y(static_cast<Eigen::Index>(j) * n + i,
            static_cast<Eigen::Index>(l) * n + k) =
              x.mat(static_cast<Eigen::Index>(i) * m + j,
                    static_cast<Eigen::Index>(k) * m + l);
  return {m, n, std::move(y)};
}

int schmidt_rank(const BipartiteOperator& x, double tol) {
  if (x.mat.norm() == 0.0)
    throw std::invalid_argument(
        "schmidt_rank: undefined for the zero operator");
  return numerical_rank(realign(x), tol);
}

cmat SchmidtDecomposition::reconstruct() const {
  if (terms.empty()) throw std::logic_error("reconstruct: empty decomposition");
  cmat sum = terms.front().weight *
             kron(terms.front().factor_a, terms.front().factor_b);
  for (size_t t = 1; t < terms.size(); ++t)
    sum += terms[t].weight * kron(terms[t].factor_a, terms[t].factor_b);
  return sum;
}

SchmidtDecomposition schmidt_decompose(const BipartiteOperator& x, double tol) {
  if (x.mat.norm() == 0.0)
    throw std::invalid_argument(
        "schmidt_decompose: undefined for the zero operator");
  const cmat r = realign(x);
  Eigen::JacobiSVD<cmat> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("schmidt_decompose: SVD failed to converge");

  const auto& sigma = svd.singularValues();
  const double cutoff = tol * sigma(0);
  SchmidtDecomposition dec;
  for (Eigen::Index t = 0; t < sigma.size(); ++t) {
    if (sigma(t) <= cutoff) break;
    SchmidtTerm term;
    term.weight = sigma(t);
    term.factor_a = unflatten(svd.matrixU().col(t), x.dim_a, x.dim_a);
    // Rows of the realignment store blocks un-conjugated, so the B-factor
    // is the unflattened conjugate of the right singular vector.
    term.factor_b = unflatten(svd.matrixV().col(t).conjugate(), x.dim_b, x.dim_b);
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

}  // namespace osr
