#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace tenfold {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kDefaultTol = 1e-10;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct GapClosed : Error { using Error::Error; };
struct SizeExceeded : Error { using Error::Error; };
struct RelationFailure : Error { using Error::Error; };
struct NotIQPV : Error { using Error::Error; };
struct MissingGrading : Error { using Error::Error; };
struct PositiveGeneratorsPresent : Error { using Error::Error; };
struct NoReference : Error { using Error::Error; };
struct NotChiral : Error { using Error::Error; };
struct NotSkew : Error { using Error::Error; };
struct NotAntiCommuting : Error { using Error::Error; };
struct InvalidClass : Error { using Error::Error; };
struct InconsistentSquares : Error { using Error::Error; };
struct DimensionNotDivisible : Error { using Error::Error; };
struct SlabTooThin : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Operator (spectral) norm. Exact SVD up to moderate size, power iteration
// on A*A above that; residual checks only need a couple of digits.
inline double op_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  if (a.rows() <= 512 && a.cols() <= 512)
    return a.jacobiSvd().singularValues()(0);
  Matrix aa = a.adjoint() * a;
  Vector v = Vector::Ones(aa.rows()).normalized();
  double lam = 0.0;
  for (int it = 0; it < 60; ++it) {
    Vector w = aa * v;
    double nl = w.norm();
    if (nl == 0.0) return 0.0;
    v = w / nl;
    if (std::abs(nl - lam) < 1e-14 * std::max(1.0, nl)) { lam = nl; break; }
    lam = nl;
  }
  return std::sqrt(lam);
}

inline Matrix identity(Index n) { return Matrix::Identity(n, n); }

// Pauli matrices and common 2x2 blocks.
inline Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline bool approx_zero(const Matrix& a, double tol) { return op_norm(a) < tol; }

}  // namespace tenfold
