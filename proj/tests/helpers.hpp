#pragma once

// Test-only generators: random structured matrices, random IQPV in a given
// pseudo-symmetry background, and reference vacua built from one spare
// negative Clifford generator.

#include <random>

#include "tenfold/clifford.hpp"
#include "tenfold/structured.hpp"

namespace tenfold::testing {

inline Matrix random_matrix(Index n, std::mt19937_64& gen) {
  std::normal_distribution<double> d;
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(d(gen), d(gen));
  return m;
}

inline Matrix random_hermitian(Index n, std::mt19937_64& gen) {
  Matrix m = random_matrix(n, gen);
  return 0.5 * (m + m.adjoint());
}

// A Clifford background with one vacancy: the rep carries the first r
// positive and s negative generators of Cl_{r,s+1}; the spare negative
// generator is a canonical element of F^{r,s}.
struct RepWithVacancy {
  CliffordRep rep;   // Cl_{r,s} background on the carrier space
  Matrix J_ref;      // the spare generator, a valid IQPV of index (r,s)
};

inline RepWithVacancy rep_with_vacancy(int r, int s) {
  CliffordRep big = detail::ungraded_rep(r, s + 1);
  RepWithVacancy out;
  out.J_ref = big.J.back();
  big.J.pop_back();
  big.s -= 1;
  out.rep = std::move(big);
  return out;
}

// Exact projection onto the commutant of the generator monomials, by
// averaging Ad over all subset products.
inline Matrix project_commutant(const Matrix& A, const std::vector<const Matrix*>& gens) {
  Matrix acc = Matrix::Zero(A.rows(), A.cols());
  const size_t n = gens.size();
  const size_t total = size_t(1) << n;
  for (size_t mask = 0; mask < total; ++mask) {
    Matrix m = identity(A.rows());
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) m = m * (*gens[i]);
    acc += m * A * m.inverse();
  }
  return acc / static_cast<double>(total);
}

// Random real unitary commuting with the background generators: exp(A) for
// A real, skew-Hermitian, in the commutant.
inline Matrix random_commuting_real_unitary(const CliffordRep& rep,
                                            std::mt19937_64& gen) {
  const Index n = rep.dim();
  Matrix A = random_matrix(n, gen);
  A = 0.5 * (A + rep.ctx->conj_op(A));   // real part
  A = 0.5 * (A - A.adjoint());           // skew-Hermitian part
  A = project_commutant(A, rep.generators());
  // the averaging preserves reality and skewness; exponentiate
  Eigen::ComplexEigenSolver<Matrix> es(A);
  Vector expv = es.eigenvalues().array().exp();
  return es.eigenvectors() * expv.asDiagonal() * es.eigenvectors().inverse();
}

// Random valid IQPV of index (r,s): conjugate the reference vacuum by a
// random real unitary from the commutant of the background.
inline Matrix random_iqpv(const RepWithVacancy& rv, std::mt19937_64& gen) {
  Matrix u = random_commuting_real_unitary(rv.rep, gen);
  return u * rv.J_ref * u.inverse();
}

}  // namespace tenfold::testing
