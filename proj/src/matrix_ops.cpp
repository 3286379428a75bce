#include "osr/matrix_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

namespace osr {

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

cplx hs_inner(const cmat& a, const cmat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  return (a.adjoint() * b).trace();
}

double hs_norm(const cmat& a) { return a.norm(); }

cvec flatten(const cmat& m) {
  cvec v(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
  return v;
}

cmat unflatten(const cvec& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("unflatten: size mismatch");
  cmat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = v(r * static_cast<Eigen::Index>(cols) + c);
  return m;
}

double unitarity_residual(const cmat& u) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("unitarity_residual: matrix not square");
  cmat defect = u * u.adjoint() - cmat::Identity(u.rows(), u.cols());
  return defect.cwiseAbs().maxCoeff();
}

UnitarityCheck check_unitary(const cmat& u, double tol) {
  const double residual = unitarity_residual(u);
  return {residual < tol, residual};
}

cmat cyclic_shift(int dim, long k) {
  if (dim < 1) throw std::invalid_argument("cyclic_shift: dim must be >= 1");
  const long kk = ((k % dim) + dim) % dim;
  cmat s = cmat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) s((i + kk) % dim, i) = 1.0;
  return s;
}

cmat clock(int dim) {
  if (dim < 1) throw std::invalid_argument("clock: dim must be >= 1");
  cmat z = cmat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j)
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / dim);
  return z;
}

cmat weyl(int dim, int a, int b) {
  if (dim < 1) throw std::invalid_argument("weyl: dim must be >= 1");
  if (a < 0 || a >= dim || b < 0 || b >= dim)
    throw std::invalid_argument("weyl: indices must lie in {0,...,dim-1}");
  // X^a Z^b maps e_j to w^{b j} e_{(j+a) mod dim}.
  cmat w = cmat::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const int phase = static_cast<int>((static_cast<long>(b) * j) % dim);
    w((j + a) % dim, j) = std::polar(1.0, 2.0 * std::numbers::pi * phase / dim);
  }
  return w;
}

std::vector<double> singular_values(const cmat& m) {
  Eigen::JacobiSVD<cmat> svd(m);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("singular_values: SVD failed to converge");
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

int numerical_rank(const cmat& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("numerical_rank: tol must be positive");
  if (m.size() == 0) return 0;
  const std::vector<double> sv = singular_values(m);
  const double sigma_max = sv.empty() ? 0.0 : sv.front();
  if (sigma_max == 0.0) return 0;
  int rank = 0;
  for (double s : sv)
    if (s > tol * sigma_max) ++rank;
  return rank;
}

}  // namespace osr
