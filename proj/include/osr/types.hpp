#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace osr {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

// Relative singular-value threshold for numeric rank decisions. All
// constructions in this library produce matrices with entries of modulus
// <= 1 and singular-value gaps no smaller than O(1/n^2), so 1e-8 separates
// genuine singular values from double-precision noise (~1e-13) with wide
// margin on both sides.
inline constexpr double default_rank_tol = 1e-8;

// Max-entry bound on |U U* - I| for accepting a matrix as unitary.
inline constexpr double default_unitary_tol = 1e-10;

// Construction-time threshold for counting a 2-D DFT coefficient as
// non-zero. Stricter than default_rank_tol so that a matrix built to have
// k non-zero coefficients verifies at rank k with margin.
inline constexpr double default_dft_eps = 1e-6;

}  // namespace osr
