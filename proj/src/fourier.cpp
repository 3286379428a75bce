#include "osr/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace osr {

namespace {

// Unit-modulus exp(2*pi*i*num/den) built with polar so the invariant
// |entry| == 1 holds exactly.
cplx unit_phase(double num, double den) {
  return std::polar(1.0, 2.0 * std::numbers::pi * num / den);
}

}  // namespace

PhaseMatrix::PhaseMatrix(cmat entries) : lambda(std::move(entries)) {
  if (lambda.rows() != lambda.cols() || lambda.rows() < 1)
    throw std::invalid_argument("PhaseMatrix: entries must form a square matrix");
  for (Eigen::Index i = 0; i < lambda.rows(); ++i)
    for (Eigen::Index j = 0; j < lambda.cols(); ++j)
      if (std::abs(std::abs(lambda(i, j)) - 1.0) > 1e-12)
        throw std::invalid_argument("PhaseMatrix: entries must have modulus 1");
}

ExponentTable::ExponentTable(int n, std::vector<int> values)
    : n_(n), values_(std::move(values)) {
  const size_t expected = static_cast<size_t>(n) * (n - 1) / 2;
  if (n < 1 || values_.size() != expected)
    throw std::invalid_argument("ExponentTable: wrong number of values");
  std::vector<int> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t] <= 0)
      throw std::invalid_argument("ExponentTable: values must be positive");
    if (t > 0 && sorted[t] == sorted[t - 1])
      throw std::invalid_argument("ExponentTable: values must be distinct");
  }
}

ExponentTable ExponentTable::canonical(int n) {
  std::vector<int> values(static_cast<size_t>(n) * (n - 1) / 2);
  for (size_t t = 0; t < values.size(); ++t) values[t] = static_cast<int>(t) + 1;
  return {n, std::move(values)};
}

int ExponentTable::at(int i, int j) const {
  if (i <= j || i >= n_ || j < 0)
    throw std::invalid_argument("ExponentTable::at: requires n > i > j >= 0");
  return values_[static_cast<size_t>(i) * (i - 1) / 2 + j];
}

cvec fourier_basis_vector(int n, int alpha, int beta) {
  if (n < 1 || alpha < 0 || alpha >= n || beta < 0 || beta >= n)
    throw std::invalid_argument("fourier_basis_vector: indices out of range");
  cvec v = cvec::Zero(static_cast<Eigen::Index>(n) * n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    const int shifted = ((j - beta) % n + n) % n;
    v(static_cast<Eigen::Index>(shifted) * n + j) =
        scale * unit_phase(static_cast<double>(alpha) * shifted, n);
  }
  return v;
}

cmat dft2(const cmat& lambda) {
  const int n = static_cast<int>(lambda.rows());
  if (lambda.cols() != n || n < 1)
    throw std::invalid_argument("dft2: matrix must be square");
  cmat out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx sum = 0.0;
      for (int alpha = 0; alpha < n; ++alpha)
        for (int beta = 0; beta < n; ++beta)
          sum += unit_phase(static_cast<double>(a) * alpha +
                                static_cast<double>(b) * beta,
                            n) *
                 lambda(alpha, beta);
      out(a, b) = sum / static_cast<double>(n);
    }
  return out;
}

BipartiteOperator d_lambda(const PhaseMatrix& lambda) {
  const int n = lambda.size();
  const Eigen::Index total = static_cast<Eigen::Index>(n) * n;
  cmat d = cmat::Zero(total, total);
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta) {
      const cvec v = fourier_basis_vector(n, alpha, beta);
      d += lambda.lambda(alpha, beta) * (v * v.adjoint());
    }
  return {n, n, std::move(d)};
}

int smallest_nondividing_prime(int n) {
  if (n <= 2)
    throw std::invalid_argument("smallest_nondividing_prime: requires n > 2");
  auto is_prime = [](int p) {
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return p >= 2;
  };
  for (int p = 2; p < n; ++p)
    if (is_prime(p) && n % p != 0) return p;
  throw std::logic_error("smallest_nondividing_prime: none found");
}

PhaseMatrix phase_family(int n, double x, const ExponentTable& exps, int p) {
  if (n <= 2) throw std::invalid_argument("phase_family: requires n > 2");
  if (p <= 1 || p >= n || n % p == 0)
    throw std::invalid_argument(
        "phase_family: p must be a non-divisor of n in {2,...,n-1}");
  if (exps.size() != n)
    throw std::invalid_argument("phase_family: exponent table size mismatch");
  auto power_of_z = [&](int exponent) { return unit_phase(x * exponent, n); };
  cmat lambda(n, n);
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta) {
      if (alpha == beta) {
        lambda(alpha, beta) = unit_phase(alpha, n);
      } else if (alpha > beta) {
        lambda(alpha, beta) = power_of_z(exps.at(alpha, beta));
      } else if (alpha == 1 && beta == p) {
        lambda(alpha, beta) = -power_of_z(exps.at(1, 0));
      } else if (alpha == 0 && beta == 1) {
        lambda(alpha, beta) = -power_of_z(exps.at(p, 1));
      } else {
        lambda(alpha, beta) = -power_of_z(exps.at(beta, alpha));
      }
    }
  return PhaseMatrix(std::move(lambda));
}

namespace {

double unit_open_interval(std::mt19937_64& rng) {
  for (;;) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

}  // namespace

FourierWitness find_phase_parameter(int n, double eps, std::uint64_t seed,
                                    int max_attempts) {
  if (n <= 2) throw std::invalid_argument("find_phase_parameter: requires n > 2");
  if (eps <= 0.0)
    throw std::invalid_argument("find_phase_parameter: eps must be positive");
  const int p = smallest_nondividing_prime(n);
  const ExponentTable exps = ExponentTable::canonical(n);
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    // Scale by n so exp(2*pi*i*x/n) sweeps the whole unit circle.
    const double x = n * unit_open_interval(rng);
    const cmat hat = dft2(phase_family(n, x, exps, p).lambda);
    double min_off_origin = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == 0 && b == 0) continue;
        min_off_origin = std::min(min_off_origin, std::abs(hat(a, b)));
      }
    if (std::abs(hat(0, 0)) < eps && min_off_origin > eps)
      return {x, p, min_off_origin, attempt};
  }
  throw std::runtime_error(
      "find_phase_parameter: exhausted attempts; eps is too aggressive for "
      "this n");
}

FourierConstruction rank_n2_minus_1(int n, double eps, std::uint64_t seed,
                                    int max_attempts) {
  const FourierWitness witness = find_phase_parameter(n, eps, seed, max_attempts);
  const PhaseMatrix lambda =
      phase_family(n, witness.x, ExponentTable::canonical(n), witness.p);
  return {d_lambda(lambda), witness};
}

}  // namespace osr
