#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tenfold/structured.hpp"

using namespace tenfold;

TEST_CASE("conjugate on the identity and on Q") {
  auto nambu = NambuContext::make(1);
  StructuredMatrix id = structured(identity(2), nambu.gamma);
  CHECK(op_norm(conjugate(id).M - identity(2)) < 1e-14);

  // Q = diag(1,-1) with block-swap gamma is imaginary: Q-bar = -Q.
  StructuredMatrix Q = structured(nambu.Q, nambu.gamma);
  CHECK(op_norm(conjugate(Q).M + nambu.Q) < 1e-14);
}

TEST_CASE("conjugate is an involutive anti-linear *-automorphism") {
  std::mt19937_64 gen(11);
  auto nambu = NambuContext::make(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix A = testing::random_matrix(6, gen);
    Matrix B = testing::random_matrix(6, gen);
    StructuredMatrix sa = structured(A, nambu.gamma);
    StructuredMatrix sb = structured(B, nambu.gamma);
    CHECK(op_norm(conjugate(conjugate(sa)).M - A) < 1e-12);
    Complex a(0.3, -1.7);
    Matrix lhs = conjugate(structured(a * A + B, nambu.gamma)).M;
    Matrix rhs = std::conj(a) * conjugate(sa).M + conjugate(sb).M;
    CHECK(op_norm(lhs - rhs) < 1e-12);
    CHECK(op_norm(conjugate(structured(A * B, nambu.gamma)).M -
                  conjugate(sa).M * conjugate(sb).M) < 1e-11);
  }
}

TEST_CASE("quaternionic conjugation equals -T L T") {
  Matrix Gq(2, 2);
  Gq << 0, 1, -1, 0;
  auto ctx = make_structure(Gq);
  REQUIRE(ctx->kind == RealStructure::Kind::Quaternionic);
  std::mt19937_64 gen(5);
  Matrix L = testing::random_matrix(2, gen);
  // T L T as linear maps: G conj(L) conj(G); quaternionic sign flips twice.
  Matrix TLT = Gq * L.conjugate() * Gq.conjugate();
  CHECK(op_norm(ctx->conj_op(L) + TLT) < 1e-13);
  // the real elements of H_C: 1, i sigma_x, i sigma_y, i sigma_z
  for (const Matrix& m : {identity(2), Matrix(Complex(0, 1) * sigma_x()),
                          Matrix(Complex(0, 1) * sigma_y()),
                          Matrix(Complex(0, 1) * sigma_z())}) {
    CHECK(op_norm(ctx->conj_op(m) - m) < 1e-14);
  }
}

TEST_CASE("car_transpose basics") {
  auto nambu = NambuContext::make(2);
  StructuredMatrix id = structured(identity(4), nambu.gamma);
  CHECK(op_norm(car_transpose(id).M - identity(4)) < 1e-14);

  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix A = testing::random_matrix(4, gen);
    Matrix B = testing::random_matrix(4, gen);
    // anti-multiplicative
    Matrix lhs = car_transpose(structured(A * B, nambu.gamma)).M;
    Matrix rhs = car_transpose(structured(B, nambu.gamma)).M *
                 car_transpose(structured(A, nambu.gamma)).M;
    CHECK(op_norm(lhs - rhs) < 1e-11);
    // involutive
    Matrix tw = car_transpose(car_transpose(structured(A, nambu.gamma))).M;
    CHECK(op_norm(tw - A) < 1e-12);
    // for real L: transpose = adjoint
    Matrix R = 0.5 * (A + nambu.gamma->conj_op(A));
    CHECK(op_norm(car_transpose(structured(R, nambu.gamma)).M - R.adjoint()) < 1e-11);
  }
}

TEST_CASE("operator_sign on diagonal and sigma_x") {
  auto ctx = trivial_structure(2);
  Matrix d(2, 2);
  d << 2, 0, 0, -3;
  CHECK(op_norm(operator_sign(structured(d, ctx)).M - sigma_z()) < 1e-13);
  CHECK(op_norm(operator_sign(structured(sigma_x(), ctx)).M - sigma_x()) < 1e-13);
}

TEST_CASE("operator_sign properties on random gapped Hermitian") {
  std::mt19937_64 gen(23);
  auto ctx = trivial_structure(12);
  int accepted = 0;
  while (accepted < 10) {
    Matrix H = testing::random_hermitian(12, gen);
    if (spectral_gap(H) < 0.05) continue;
    ++accepted;
    StructuredMatrix sh = structured(H, ctx);
    Matrix S = operator_sign(sh, 0.05).M;
    CHECK(op_norm(S * S - identity(12)) < 1e-10);
    CHECK(op_norm(S - S.adjoint()) < 1e-10);
    CHECK(op_norm(S * H - H * S) < 1e-10);
    // idempotent under repetition
    Matrix S2 = operator_sign(structured(S, ctx), 0.5).M;
    CHECK(op_norm(S2 - S) < 1e-10);
  }
}

TEST_CASE("operator_sign error paths") {
  auto ctx = trivial_structure(2);
  Matrix notherm(2, 2);
  notherm << 0, 1, 0, 0;
  CHECK_THROWS_AS(operator_sign(structured(notherm, ctx)), NotHermitian);
  Matrix gapless(2, 2);
  gapless << 1e-12, 0, 0, 1;
  CHECK_THROWS_AS(operator_sign(structured(gapless, ctx), 1e-6), GapClosed);
}

TEST_CASE("check_predicates flags") {
  auto nambu = NambuContext::make(1);
  auto rep = check_predicates(structured(identity(2), nambu.gamma));
  CHECK(rep.is_real);
  CHECK(rep.is_hermitian);
  CHECK(rep.is_unitary);
  CHECK_FALSE(rep.is_skew);

  // iQ is real, skew and unitary in the Nambu context
  auto riq = check_predicates(structured(Complex(0, 1) * nambu.Q, nambu.gamma));
  CHECK(riq.is_real);
  CHECK(riq.is_skew);
  CHECK(riq.is_unitary);
  CHECK_FALSE(riq.is_hermitian);

  // sigma_y with trivial gamma is imaginary and Hermitian
  auto rsy = check_predicates(structured(sigma_y(), trivial_structure(2)));
  CHECK(rsy.is_imaginary);
  CHECK(rsy.is_hermitian);
  CHECK_FALSE(rsy.is_real);
}

TEST_CASE("nambu context invariants") {
  auto nambu = NambuContext::make(3);
  CHECK(nambu.dim() == 6);
  CHECK(nambu.gamma->kind == RealStructure::Kind::Real);
  CHECK(op_norm(nambu.Q * nambu.Q - identity(6)) < 1e-14);
  CHECK(op_norm(nambu.gamma->conj_op(nambu.Q) + nambu.Q) < 1e-14);
}
