#pragma once

#include <bit>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tenfold/structured.hpp"

namespace tenfold {

// Matrix representation of Cl_{r,s}: r positive generators K_a (K^2 = +1),
// s negative generators J_alpha (J^2 = -1), all real unitaries that pairwise
// anti-commute. An optional grading operator anti-commutes with every
// generator and squares to one.
struct CliffordRep {
  int r = 0, s = 0;
  std::vector<Matrix> K, J;
  RealStructurePtr ctx;
  std::optional<Matrix> grading;

  Index dim() const { return ctx->dim(); }

  std::vector<const Matrix*> generators() const {
    std::vector<const Matrix*> g;
    for (const auto& k : K) g.push_back(&k);
    for (const auto& j : J) g.push_back(&j);
    return g;
  }
};

namespace detail {

// Ungraded representation of Cl_{R,S}, built from the Cl_{1,1} seed
// (k = sigma_x, j = -i sigma_y) by (1,1)-periodicity, and from the
// Atiyah-Bott-Shapiro shift for pure signatures. Real structures:
// entrywise conjugation except for the quaternionic Cl_{0,2} block.
inline CliffordRep ungraded_rep(int R, int S) {
  CliffordRep rep;
  rep.r = R;
  rep.s = S;
  if (R >= 1 && S >= 1) {
    CliffordRep inner = ungraded_rep(R - 1, S - 1);
    const Matrix I_in = identity(inner.dim());
    rep.K.push_back(kron(sigma_x(), I_in));
    rep.J.push_back(kron(-Complex(0, 1) * sigma_y(), I_in));
    for (const auto& k : inner.K) rep.K.push_back(kron(sigma_z(), k));
    for (const auto& j : inner.J) rep.J.push_back(kron(sigma_z(), j));
    rep.ctx = tensor_structure(trivial_structure(2), inner.ctx);
    return rep;
  }
  if (R == 0 && S == 0) {
    rep.ctx = trivial_structure(1);
    return rep;
  }
  if (S == 0) {
    if (R == 1) {
      rep.K.push_back(Matrix::Identity(1, 1));
      rep.ctx = trivial_structure(1);
      return rep;
    }
    if (R == 2) {
      rep.K.push_back(sigma_z());
      rep.K.push_back(sigma_x());
      rep.ctx = trivial_structure(2);
      return rep;
    }
    // Cl_{R,0} = Cl_{2,0} (x) Cl_{0,R-2}, twist element k1 k2 = i sigma_y.
    CliffordRep inner = ungraded_rep(0, R - 2);
    const Matrix I_in = identity(inner.dim());
    rep.K.push_back(kron(sigma_z(), I_in));
    rep.K.push_back(kron(sigma_x(), I_in));
    const Matrix twist = Complex(0, 1) * sigma_y();
    for (const auto& j : inner.J) rep.K.push_back(kron(twist, j));
    rep.ctx = tensor_structure(trivial_structure(2), inner.ctx);
    return rep;
  }
  // R == 0
  if (S == 1) {
    rep.J.push_back(-Complex(0, 1) * sigma_y());
    rep.ctx = trivial_structure(2);
    return rep;
  }
  Matrix Gq(2, 2);  // quaternionic structure on C^2, G conj(G) = -1
  Gq << 0, 1, -1, 0;
  if (S == 2) {
    rep.J.push_back(Complex(0, 1) * sigma_x());
    rep.J.push_back(Complex(0, 1) * sigma_y());
    rep.ctx = make_structure(Gq);
    return rep;
  }
  // Cl_{0,S} = Cl_{0,2} (x) Cl_{S-2,0}, twist element j1 j2 = -i sigma_z.
  CliffordRep inner = ungraded_rep(S - 2, 0);
  const Matrix I_in = identity(inner.dim());
  rep.J.push_back(kron(Complex(0, 1) * sigma_x(), I_in));
  rep.J.push_back(kron(Complex(0, 1) * sigma_y(), I_in));
  const Matrix twist = -Complex(0, 1) * sigma_z();
  for (const auto& k : inner.K) rep.J.push_back(kron(twist, k));
  rep.ctx = tensor_structure(make_structure(Gq), inner.ctx);
  return rep;
}

}  // namespace detail

// Standard graded representation of Cl_{r,s}. A grading operator is one
// further positive generator, so this is the ungraded Cl_{r+1,s} rep with
// its last positive generator promoted to the grading. For Cl_{1,1} this
// reproduces k1 = sigma_x, j1 = -i sigma_y, grading sigma_z exactly.
inline CliffordRep standard_rep(int r, int s) {
  if (r < 0 || s < 0) throw RelationFailure("standard_rep: negative signature");
  if (r + s > 12)
    throw SizeExceeded("standard_rep: r + s = " + std::to_string(r + s) +
                       " exceeds the desk-scale limit 12");
  CliffordRep big = detail::ungraded_rep(r + 1, s);
  CliffordRep rep;
  rep.r = r;
  rep.s = s;
  rep.ctx = big.ctx;
  rep.grading = big.K.back();
  big.K.pop_back();
  rep.K = std::move(big.K);
  rep.J = std::move(big.J);
  return rep;
}

struct RepReport {
  double max_residual = 0;
  bool pass = false;
  std::string worst;
};

// Check all Clifford relations, reality, unitarity, and (if present) the
// grading relations. Reports the largest residual in operator norm.
inline RepReport verify_rep(const CliffordRep& rep, double tol = kDefaultTol) {
  RepReport out;
  auto note = [&](double res, const std::string& what) {
    if (res > out.max_residual) {
      out.max_residual = res;
      out.worst = what;
    }
  };
  const Index n = rep.dim();
  const Matrix I = identity(n);
  auto gens = rep.generators();
  const int r = static_cast<int>(rep.K.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    const Matrix& g = *gens[i];
    const double sq = (static_cast<int>(i) < r) ? 1.0 : -1.0;
    note(op_norm(g * g - sq * I), "square of generator " + std::to_string(i));
    note(op_norm(g * g.adjoint() - I), "unitarity of generator " + std::to_string(i));
    note(op_norm(rep.ctx->conj_op(g) - g), "reality of generator " + std::to_string(i));
    for (size_t j = i + 1; j < gens.size(); ++j)
      note(op_norm(g * (*gens[j]) + (*gens[j]) * g),
           "anti-commutator " + std::to_string(i) + "," + std::to_string(j));
  }
  if (rep.grading) {
    const Matrix& G = *rep.grading;
    note(op_norm(G * G - I), "grading square");
    note(op_norm(rep.ctx->conj_op(G) - G), "grading reality");
    note(op_norm(G - G.adjoint()), "grading hermiticity");
    for (size_t i = 0; i < gens.size(); ++i)
      note(op_norm(G * (*gens[i]) + (*gens[i]) * G),
           "grading anti-commutator " + std::to_string(i));
  }
  out.pass = out.max_residual < tol;
  return out;
}

// omega = J_1 ... J_s. Central with omega^2 = +1 exactly when s = 3 mod 4.
inline Matrix volume_element(const CliffordRep& rep) {
  if (rep.r != 0)
    throw PositiveGeneratorsPresent("volume_element: rep has positive generators");
  Matrix w = identity(rep.dim());
  for (const auto& j : rep.J) w = w * j;
  return w;
}

struct ExtendResult {
  std::optional<Matrix> J_next;   // on the original space, when extendable
  Index mult_plus = 0, mult_minus = 0;
};

namespace detail {

// Orthonormal eigenbasis columns of a Hermitian involution for eigenvalue sgn.
inline Matrix involution_eigenbasis(const Matrix& w, double sgn) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  std::vector<Index> idx;
  for (Index i = 0; i < w.rows(); ++i)
    if (es.eigenvalues()(i) * sgn > 0.5) idx.push_back(i);
  Matrix B(w.rows(), static_cast<Index>(idx.size()));
  for (size_t c = 0; c < idx.size(); ++c) B.col(c) = es.eigenvectors().col(idx[c]);
  return B;
}

}  // namespace detail

// For r = 0, s = 3 mod 4: extends the representation by J_{s+1} when the
// +-1 eigenvalues of omega have equal multiplicity; otherwise reports the
// two multiplicities. The intertwiner is taken from the nullspace of the
// stacked intertwining equations, projected to the real form and made
// unitary by polar decomposition.
inline ExtendResult extend_rep(const CliffordRep& rep) {
  if (rep.r != 0) throw PositiveGeneratorsPresent("extend_rep: r > 0");
  if (rep.s % 4 != 3) throw RelationFailure("extend_rep: s is not 3 mod 4");
  const Matrix w = volume_element(rep);
  Matrix Bp = detail::involution_eigenbasis(w, +1.0);
  Matrix Bm = detail::involution_eigenbasis(w, -1.0);
  ExtendResult res;
  res.mult_plus = Bp.cols();
  res.mult_minus = Bm.cols();
  if (res.mult_plus != res.mult_minus) return res;
  const Index m = Bp.cols();

  std::vector<Matrix> A, C;
  for (const auto& j : rep.J) {
    A.push_back(Bp.adjoint() * j * Bp);
    C.push_back(Bm.adjoint() * j * Bm);
  }
  // u A_alpha = -C_alpha u, stacked as a nullspace problem in vec(u).
  const Index m2 = m * m;
  Matrix L(static_cast<Index>(A.size()) * m2, m2);
  const Matrix Im = identity(m);
  for (size_t a = 0; a < A.size(); ++a)
    L.block(static_cast<Index>(a) * m2, 0, m2, m2) =
        kron(A[a].transpose(), Im) + kron(Im, C[a]);
  Eigen::JacobiSVD<Matrix> svd(L, Eigen::ComputeFullV);
  Index null_dim = 0;
  const double cut = 1e-8 * std::max(1.0, svd.singularValues()(0));
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) < cut) ++null_dim;
  if (null_dim == 0) return res;

  const Matrix Gp = Bp.adjoint() * rep.ctx->G * Bp.conjugate();
  const Matrix Gm = Bm.adjoint() * rep.ctx->G * Bm.conjugate();
  const Matrix Gp_inv = Gp.inverse();
  auto sigma = [&](const Matrix& U) -> Matrix { return Gm * U.conjugate() * Gp_inv; };

  std::mt19937_64 gen(0x7e28a1);
  std::normal_distribution<double> dist;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix N = Matrix::Zero(m, m);
    for (Index i = 0; i < null_dim; ++i) {
      Vector v = svd.matrixV().col(m2 - 1 - i);
      Matrix Ni = Eigen::Map<const Matrix>(v.data(), m, m);
      N += dist(gen) * Ni + Complex(0, dist(gen)) * Ni;
    }
    Matrix R = 0.5 * (N + sigma(N));
    if (op_norm(R) < 1e-8) R = 0.5 * (Complex(0, 1) * N + sigma(Complex(0, 1) * N));
    if (op_norm(R) < 1e-8) continue;
    Eigen::JacobiSVD<Matrix> pol(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (pol.singularValues().minCoeff() < 1e-8 * pol.singularValues().maxCoeff())
      continue;
    Matrix u = pol.matrixU() * pol.matrixV().adjoint();
    Matrix block = Matrix::Zero(2 * m, 2 * m);
    block.block(0, m, m, m) = -u.adjoint();
    block.block(m, 0, m, m) = u;
    Matrix B(rep.dim(), 2 * m);
    B.leftCols(m) = Bp;
    B.rightCols(m) = Bm;
    Matrix Jn = B * block * B.adjoint();
    CliffordRep ext = rep;
    ext.s += 1;
    ext.J.push_back(Jn);
    if (verify_rep(ext).pass) {
      res.J_next = Jn;
      return res;
    }
  }
  return res;  // nullspace present but no valid unitary found
}

// Graded tensor product realized by the grading twist: A's generators act
// as g (x) 1, B's as Gamma_A (x) g, making mixed generators anti-commute.
inline CliffordRep graded_tensor(const CliffordRep& A, const CliffordRep& B) {
  if (!A.grading || !B.grading)
    throw MissingGrading("graded_tensor: both factors need a grading operator");
  CliffordRep out;
  out.r = A.r + B.r;
  out.s = A.s + B.s;
  const Matrix Ib = identity(B.dim());
  for (const auto& k : A.K) out.K.push_back(kron(k, Ib));
  for (const auto& k : B.K) out.K.push_back(kron(*A.grading, k));
  for (const auto& j : A.J) out.J.push_back(kron(j, Ib));
  for (const auto& j : B.J) out.J.push_back(kron(*A.grading, j));
  out.ctx = tensor_structure(A.ctx, B.ctx);
  out.grading = kron(*A.grading, *B.grading);
  return out;
}

// Commuting projections from pseudo-symmetry data, inside B (x) Cl_{r,s+1}:
//   2Q_a - 1 = (-1)^s K_a (x) k_a j_1,  2P_alpha - 1 = J_alpha (x) j_1 j_{alpha+1},
//   P^{r,s} = Q_1 ... Q_r P_1 ... P_s.
struct PseudoProjection {
  Matrix P;
  std::vector<Matrix> Q_list, P_list;
  RealStructurePtr ctx;   // structure of B (x) Cl_{r,s+1}
  Matrix grading;         // 1 (x) Gamma_amb
};

inline PseudoProjection pseudo_projection(const CliffordRep& rep,
                                          const CliffordRep& amb) {
  if (amb.r != rep.r || amb.s != rep.s + 1)
    throw RelationFailure("pseudo_projection: ambient rep must be Cl_{r,s+1}");
  if (!amb.grading)
    throw MissingGrading("pseudo_projection: ambient rep lacks a grading");
  const Index nB = rep.dim(), nC = amb.dim();
  const Matrix I = identity(nB * nC);
  const double sgn = (rep.s % 2 == 0) ? 1.0 : -1.0;
  PseudoProjection out;
  for (int a = 0; a < rep.r; ++a) {
    Matrix X = sgn * kron(rep.K[a], amb.K[a] * amb.J[0]);
    if (!approx_zero(X * X - I, 1e-9) || !approx_zero(X - X.adjoint(), 1e-9))
      throw RelationFailure("pseudo_projection: invalid positive input " +
                            std::to_string(a));
    out.Q_list.push_back(0.5 * (I + X));
  }
  for (int al = 0; al < rep.s; ++al) {
    Matrix X = kron(rep.J[al], amb.J[0] * amb.J[al + 1]);
    if (!approx_zero(X * X - I, 1e-9) || !approx_zero(X - X.adjoint(), 1e-9))
      throw RelationFailure("pseudo_projection: invalid negative input " +
                            std::to_string(al));
    out.P_list.push_back(0.5 * (I + X));
  }
  Matrix P = I;
  for (const auto& q : out.Q_list) P = P * q;
  for (const auto& p : out.P_list) P = P * p;
  out.P = std::move(P);
  out.ctx = tensor_structure(rep.ctx, amb.ctx);
  out.grading = kron(identity(nB), *amb.grading);
  return out;
}

// Check the F^{r,s} relations of a candidate IQPV against a Clifford rep.
// Throws NotIQPV naming the first failing relation.
inline void require_iqpv(const Matrix& J, const CliffordRep& rep,
                         double tol = kDefaultTol) {
  const Index n = rep.dim();
  if (J.rows() != n || J.cols() != n)
    throw DimensionMismatch("iqpv: dimension mismatch with rep");
  if (!approx_zero(rep.ctx->conj_op(J) - J, tol))
    throw NotIQPV("iqpv: J is not real");
  if (!approx_zero(J + J.adjoint(), tol))
    throw NotIQPV("iqpv: J is not skew-Hermitian");
  if (!approx_zero(J * J + identity(n), tol))
    throw NotIQPV("iqpv: J^2 != -1");
  for (size_t a = 0; a < rep.K.size(); ++a)
    if (!approx_zero(J * rep.K[a] + rep.K[a] * J, tol))
      throw NotIQPV("iqpv: J does not anti-commute with K_" + std::to_string(a + 1));
  for (size_t al = 0; al < rep.J.size(); ++al)
    if (!approx_zero(J * rep.J[al] + rep.J[al] * J, tol))
      throw NotIQPV("iqpv: J does not anti-commute with J_" + std::to_string(al + 1));
}

// Odd real Hermitian unitary in the corner P (B (x) Cl_{r,s+1}) P.
struct ORHUElement {
  Matrix X, P;
  Matrix grading;
  RealStructurePtr ctx;
};

struct ORHUReport {
  double r_corner = 0, r_hermitian = 0, r_real = 0, r_square = 0, r_odd = 0;
  double max_residual = 0;
  bool pass = false;
};

inline ORHUReport verify_orhu(const ORHUElement& e, double tol = kDefaultTol) {
  ORHUReport rep;
  rep.r_corner = op_norm(e.P * e.X * e.P - e.X);
  rep.r_hermitian = op_norm(e.X - e.X.adjoint());
  rep.r_real = op_norm(e.ctx->conj_op(e.X) - e.X);
  rep.r_square = op_norm(e.X * e.X - e.P);
  rep.r_odd = op_norm(e.grading * e.X + e.X * e.grading);
  rep.max_residual = std::max({rep.r_corner, rep.r_hermitian, rep.r_real,
                               rep.r_square, rep.r_odd});
  rep.pass = rep.max_residual < tol;
  return rep;
}

// Van Daele map J |-> (J (x) j_1) P^{r,s}: a bijection from IQPV of index
// (r,s) onto the ORHU of the corner.
inline ORHUElement orhu_map(const Matrix& J, const CliffordRep& rep,
                            const CliffordRep& amb, const PseudoProjection& pp) {
  require_iqpv(J, rep);
  ORHUElement out;
  out.X = kron(J, amb.J[0]) * pp.P;
  out.P = pp.P;
  out.grading = pp.grading;
  out.ctx = pp.ctx;
  return out;
}

inline ORHUElement orhu_map(const Matrix& J, const CliffordRep& rep,
                            const CliffordRep& amb) {
  return orhu_map(J, rep, amb, pseudo_projection(rep, amb));
}

// Recover J from X = (J (x) j_1) P^{r,s}. The representative is unique;
// the extraction reads off the (.) (x) j_1 component by a partial trace,
// with a dense least-squares fallback for safety.
inline Matrix orhu_inverse(const ORHUElement& e, const CliffordRep& rep,
                           const CliffordRep& amb, const PseudoProjection& pp) {
  const Index nB = rep.dim(), nC = amb.dim();
  const Matrix Y = e.X * kron(identity(nB), -amb.J[0]);
  Matrix Z = Matrix::Zero(nB, nB);
  for (Index i = 0; i < nB; ++i)
    for (Index j = 0; j < nB; ++j) {
      Complex t = 0;
      for (Index c = 0; c < nC; ++c) t += Y(i * nC + c, j * nC + c);
      Z(i, j) = t;
    }
  const double scale = std::pow(2.0, rep.r + rep.s) / static_cast<double>(nC);
  Matrix J = scale * Z;
  if (approx_zero(kron(J, amb.J[0]) * pp.P - e.X, 1e-8)) return J;
  // Fallback: solve the linear system column by column.
  Matrix T(nB * nC * nB * nC, nB * nB);
  for (Index j = 0; j < nB; ++j)
    for (Index i = 0; i < nB; ++i) {
      Matrix E = Matrix::Zero(nB, nB);
      E(i, j) = 1.0;
      Matrix col = kron(E, amb.J[0]) * pp.P;
      T.col(j * nB + i) = Eigen::Map<const Vector>(col.data(), col.size());
    }
  Vector x = Eigen::Map<const Vector>(e.X.data(), e.X.size());
  Vector sol = T.colPivHouseholderQr().solve(x);
  return Eigen::Map<const Matrix>(sol.data(), nB, nB);
}

// Explicit representative of the bulk class in the full algebra:
// (J (x) j_1) P^{r,s} + (J_ref (x) j_1)(1 - P^{r,s}).
inline Matrix bulk_representative(const Matrix& J, const Matrix& J_ref,
                                  const CliffordRep& rep, const CliffordRep& amb,
                                  const PseudoProjection& pp) {
  require_iqpv(J, rep);
  require_iqpv(J_ref, rep);
  const Matrix I = identity(pp.P.rows());
  return kron(J, amb.J[0]) * pp.P + kron(J_ref, amb.J[0]) * (I - pp.P);
}

inline Matrix bulk_representative(const Matrix& J, const Matrix& J_ref,
                                  const CliffordRep& rep, const CliffordRep& amb) {
  return bulk_representative(J, J_ref, rep, amb, pseudo_projection(rep, amb));
}

// Corner isomorphism Psi: B (x) Cl_{r,s+1} -> M_{2^{r+s}} (corner), built
// from the sign-indexed projections P_eps and the unitaries u_eps formed
// from products of K_a J_ref (x) 1 and J_alpha J_ref (x) 1. Epsilon indices
// run lexicographically over {+,-}^{r+s} with + first.
struct CornerIso {
  std::vector<Matrix> P_eps, u_eps;
  Matrix P;
  Matrix e_ref;        // (J_ref (x) j_1) P^{r,s}
  RealStructurePtr ctx;
  int n_signs = 0;     // r + s

  Index block_dim() const { return P.rows(); }
  Index out_dim() const { return (Index(1) << n_signs) * P.rows(); }

  // Psi(x) as a dense matrix over the full (uncompressed) corner blocks.
  Matrix apply(const Matrix& x) const {
    const Index nb = block_dim();
    const Index m = Index(1) << n_signs;
    Matrix out = Matrix::Zero(m * nb, m * nb);
    for (Index e1 = 0; e1 < m; ++e1) {
      for (Index e2 = 0; e2 < m; ++e2) {
        out.block(e1 * nb, e2 * nb, nb, nb) =
            u_eps[e1].adjoint() * P_eps[e1] * x * P_eps[e2] * u_eps[e2];
      }
    }
    return out;
  }

  // Psi(J_ref (x) j_1) = e_n = sum_eps eps E_{eps,eps} (x) (J_ref (x) j_1) P.
  Matrix e_n() const {
    const Index nb = block_dim();
    const Index m = Index(1) << n_signs;
    Matrix out = Matrix::Zero(m * nb, m * nb);
    for (Index e1 = 0; e1 < m; ++e1) {
      const double sign = (std::popcount(static_cast<unsigned>(e1)) % 2 == 0) ? 1.0 : -1.0;
      out.block(e1 * nb, e1 * nb, nb, nb) = sign * e_ref;
    }
    return out;
  }
};

inline CornerIso corner_iso(const CliffordRep& rep, const CliffordRep& amb,
                            const Matrix& J_ref, const PseudoProjection& pp) {
  if (rep.r + rep.s < 1) throw NoReference("corner_iso: needs r + s >= 1");
  try {
    require_iqpv(J_ref, rep);
  } catch (const NotIQPV& e) {
    throw NoReference(std::string("corner_iso: invalid reference: ") + e.what());
  }
  const int n = rep.r + rep.s;
  const Index m = Index(1) << n;
  const Index nC = amb.dim();
  const Matrix Ic = identity(nC);
  const Matrix I = identity(rep.dim() * nC);
  CornerIso iso;
  iso.n_signs = n;
  iso.P = pp.P;
  iso.ctx = pp.ctx;
  iso.e_ref = kron(J_ref, amb.J[0]) * pp.P;
  for (Index code = 0; code < m; ++code) {
    Matrix Pe = I;
    Matrix ue = I;
    for (int pos = 0; pos < n; ++pos) {
      const bool minus = (code >> (n - 1 - pos)) & 1;  // lexicographic, + first
      const Matrix& proj = (pos < rep.r) ? pp.Q_list[pos] : pp.P_list[pos - rep.r];
      Pe = Pe * (minus ? Matrix(I - proj) : proj);
      if (minus) {
        const Matrix& g = (pos < rep.r) ? rep.K[pos] : rep.J[pos - rep.r];
        ue = ue * kron(Matrix(g * J_ref), Ic);
      }
    }
    iso.P_eps.push_back(std::move(Pe));
    iso.u_eps.push_back(std::move(ue));
  }
  return iso;
}

inline CornerIso corner_iso(const CliffordRep& rep, const CliffordRep& amb,
                            const Matrix& J_ref) {
  return corner_iso(rep, amb, J_ref, pseudo_projection(rep, amb));
}

}  // namespace tenfold
