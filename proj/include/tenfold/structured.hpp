#pragma once

#include <memory>
#include <utility>

#include "tenfold/linalg.hpp"

namespace tenfold {

// Anti-unitary gamma = G o (entrywise conjugation). G unitary with
// G conj(G) = +1 (real structure, gamma^2 = 1) or -1 (quaternionic, T^2 = -1).
struct RealStructure {
  enum class Kind { Real, Quaternionic };

  Matrix G;
  Kind kind = Kind::Real;

  Index dim() const { return G.rows(); }

  // gamma applied to a vector.
  Vector apply(const Vector& v) const { return G * v.conjugate(); }

  // Conjugate of an operator, L |-> gamma o L o gamma (as a linear map this
  // is G conj(L) G^{-1}; for the quaternionic case the two minus signs from
  // -T L T cancel, so the same formula applies).
  Matrix conj_op(const Matrix& L) const {
    return G * L.conjugate() * G.inverse();
  }

  static RealStructure trivial(Index n) {
    return RealStructure{Matrix::Identity(n, n), Kind::Real};
  }

  // Deduce the kind from G conj(G) = +-1; throws if neither.
  static RealStructure make(Matrix G, double tol = 1e-12) {
    const Index n = G.rows();
    if (!approx_zero(G * G.adjoint() - identity(n), tol))
      throw RelationFailure("real structure: G is not unitary");
    Matrix gg = G * G.conjugate();
    if (approx_zero(gg - identity(n), tol))
      return RealStructure{std::move(G), Kind::Real};
    if (approx_zero(gg + identity(n), tol))
      return RealStructure{std::move(G), Kind::Quaternionic};
    throw RelationFailure("real structure: G conj(G) is not +-1");
  }
};

using RealStructurePtr = std::shared_ptr<const RealStructure>;

inline RealStructurePtr trivial_structure(Index n) {
  return std::make_shared<const RealStructure>(RealStructure::trivial(n));
}

inline RealStructurePtr make_structure(Matrix G) {
  return std::make_shared<const RealStructure>(RealStructure::make(std::move(G)));
}

// Tensor product of structures; kinds multiply (quat x quat = real).
inline RealStructurePtr tensor_structure(const RealStructurePtr& a,
                                         const RealStructurePtr& b) {
  return make_structure(kron(a->G, b->G));
}

// Dense complex matrix together with the real structure of its carrier space.
struct StructuredMatrix {
  Matrix M;
  RealStructurePtr ctx;

  Index dim() const { return M.rows(); }
};

inline StructuredMatrix structured(Matrix m, RealStructurePtr ctx) {
  if (m.rows() != m.cols() || m.rows() != ctx->dim())
    throw DimensionMismatch("structured matrix: dimension mismatch with context");
  return StructuredMatrix{std::move(m), std::move(ctx)};
}

// Nambu space W = V + V* with gamma = block swap o conjugation and the
// charge operator Q = diag(+1, -1).
struct NambuContext {
  Index n_V = 0;
  RealStructurePtr gamma;
  Matrix Q;

  Index dim() const { return 2 * n_V; }

  static NambuContext make(Index n_V) {
    const Index n = 2 * n_V;
    Matrix G = Matrix::Zero(n, n);
    G.block(0, n_V, n_V, n_V) = identity(n_V);
    G.block(n_V, 0, n_V, n_V) = identity(n_V);
    Matrix Q = Matrix::Zero(n, n);
    Q.block(0, 0, n_V, n_V) = identity(n_V);
    Q.block(n_V, n_V, n_V, n_V) = -identity(n_V);
    return NambuContext{n_V, make_structure(std::move(G)), std::move(Q)};
  }
};

// L |-> gamma o L o gamma. Involutive anti-linear *-automorphism.
inline StructuredMatrix conjugate(const StructuredMatrix& L) {
  if (L.M.rows() != L.M.cols() || L.M.rows() != L.ctx->dim())
    throw DimensionMismatch("conjugate: dimension mismatch");
  return StructuredMatrix{L.ctx->conj_op(L.M), L.ctx};
}

// CAR transpose, L^T = conj(L^*) = conj(adjoint). Anti-multiplicative.
inline StructuredMatrix car_transpose(const StructuredMatrix& L) {
  if (L.M.rows() != L.M.cols() || L.M.rows() != L.ctx->dim())
    throw DimensionMismatch("car_transpose: dimension mismatch");
  return StructuredMatrix{L.ctx->conj_op(L.M.adjoint()), L.ctx};
}

// sign(H) = H |H|^{-1} through the eigendecomposition. Requires a spectral
// gap: any eigenvalue inside (-gap_tol, gap_tol) throws GapClosed.
inline StructuredMatrix operator_sign(const StructuredMatrix& H,
                                      double gap_tol = 1e-8) {
  if (!approx_zero(H.M - H.M.adjoint(), 1e-10))
    throw NotHermitian("operator_sign: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(H.M);
  const RealVector& ev = es.eigenvalues();
  if (ev.cwiseAbs().minCoeff() < gap_tol)
    throw GapClosed("operator_sign: eigenvalue below gap tolerance " +
                    std::to_string(ev.cwiseAbs().minCoeff()));
  RealVector s = ev.unaryExpr([](double x) { return x >= 0.0 ? 1.0 : -1.0; });
  Matrix out = es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
  return StructuredMatrix{std::move(out), H.ctx};
}

// Smallest |eigenvalue| of a Hermitian operator.
inline double spectral_gap(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().minCoeff();
}

struct PredicateReport {
  bool is_real = false, is_imaginary = false, is_hermitian = false,
       is_skew = false, is_unitary = false;
  double r_real = 0, r_imaginary = 0, r_hermitian = 0, r_skew = 0, r_unitary = 0;
};

inline PredicateReport check_predicates(const StructuredMatrix& L,
                                        double tol = kDefaultTol) {
  PredicateReport rep;
  Matrix Lbar = L.ctx->conj_op(L.M);
  const Index n = L.dim();
  rep.r_real = op_norm(Lbar - L.M);
  rep.r_imaginary = op_norm(Lbar + L.M);
  rep.r_hermitian = op_norm(L.M - L.M.adjoint());
  rep.r_skew = op_norm(L.M + L.M.adjoint());
  rep.r_unitary = op_norm(L.M * L.M.adjoint() - identity(n));
  rep.is_real = rep.r_real < tol;
  rep.is_imaginary = rep.r_imaginary < tol;
  rep.is_hermitian = rep.r_hermitian < tol;
  rep.is_skew = rep.r_skew < tol;
  rep.is_unitary = rep.r_unitary < tol;
  return rep;
}

}  // namespace tenfold
