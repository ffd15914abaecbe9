#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace dqeig;
using dqeig::testing::random_dqmatrix;
using dqeig::testing::random_dqvector;
using dqeig::testing::random_unitary;

namespace {
constexpr int kMatrixCases = 100;
}

TEST_SUITE("dq_matrix") {
  TEST_CASE("identity, adjoint and product") {
    Rng rng(41);
    const DQMatrix a = random_dqmatrix(3, 3, rng);
    const DQMatrix b = random_dqmatrix(3, 3, rng);
    CHECK(DQMatrix::identity(3) * a == a);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(norm_fr(adjoint(a * b) - adjoint(b) * adjoint(a)) <= 1e-12 * norm_fr(a) * norm_fr(b));
    CHECK_THROWS_AS(mat_mul(DQMatrix(2, 3), DQMatrix(2, 3)), Error);
  }

  TEST_CASE("vector norms") {
    DQVector e1(3);
    e1[0] = DualQuaternion::identity();
    VectorNorms n = vec_norms(e1);
    CHECK(n.two == DualNumber{1, 0});
    CHECK(n.two_r == 1.0);

    DQVector d(3);
    d[0] = {{}, Quaternion::identity()};
    n = vec_norms(d);
    CHECK(n.two == DualNumber{0, 1});
    CHECK(n.two_r == 1.0);

    Rng rng(42);
    const DQVector x = random_dqvector(5, rng);
    double st = 0, du = 0;
    for (const auto& e : x.entries) {
      st += e.st.norm_sq();
      du += e.du.norm_sq();
    }
    CHECK(vec_norms(x).two_r * vec_norms(x).two_r == doctest::Approx(st + du).epsilon(1e-14));
  }

  TEST_CASE("matrix norms") {
    const MatrixNorms id = mat_norms(DQMatrix::identity(4));
    CHECK(id.frobenius.st == doctest::Approx(2.0));
    CHECK(id.frobenius.du == 0.0);
    CHECK(id.frobenius_r == doctest::Approx(2.0));

    Rng rng(43);
    DQMatrix q(3);
    q.du = dqeig::testing::random_qmatrix(3, 3, rng);
    const MatrixNorms m = mat_norms(q);
    CHECK(m.frobenius.st == 0.0);
    CHECK(m.frobenius.du == doctest::Approx(q.du.frobenius()));
    CHECK(m.frobenius_r == doctest::Approx(q.du.frobenius()));
  }

  TEST_CASE("off-diagonal measure") {
    DQMatrix d(3);
    for (std::size_t i = 0; i < 3; ++i) d.set(i, i, {Quaternion(double(i)), Quaternion(1.0)});
    CHECK(offdiag_measure(d).st == 0.0);
    CHECK(offdiag_measure(d).du == 0.0);

    DQMatrix two(2);
    const Quaternion c{1, 2, 0, -1};
    two.st(0, 1) = c;
    two.st(1, 0) = c.conj();
    CHECK(offdiag_measure(two).st == doctest::Approx(2.0 * c.norm_sq()));
    CHECK_THROWS_AS(offdiag_measure(DQMatrix(2, 3)), Error);
  }

  TEST_CASE("Hermitian matrices have real diagonals and nonnegative measure") {
    for (int t = 0; t < kMatrixCases; ++t) {
      const DQMatrix h = gen_random_hermitian(2 + t % 7, 500 + t);
      REQUIRE(h.is_hermitian());
      for (std::size_t i = 0; i < h.rows(); ++i) {
        REQUIRE(h.st(i, i).vector_part().norm() <= 1e-14);
        REQUIRE(h.du(i, i).vector_part().norm() <= 1e-14);
      }
      const OffdiagMeasure m = offdiag_measure(h);
      REQUIRE(m.st >= 0.0);
      REQUIRE(m.du >= 0.0);
    }
  }

  TEST_CASE("unitary similarity preserves the F-norm") {
    Rng rng(44);
    for (int t = 0; t < kMatrixCases; ++t) {
      const std::size_t n = 2 + t % 6;
      const DQMatrix q = gen_random_hermitian(n, 700 + t);
      const DQMatrix u = random_unitary(n, rng);
      REQUIRE(u.is_unitary(1e-10));
      const DQMatrix r = u * q * adjoint(u);
      const DualNumber a = frobenius_sq_dual(q);
      const DualNumber b = frobenius_sq_dual(r);
      const double tol = 1e-9 * norm_fr(q) * norm_fr(q);
      REQUIRE(std::fabs(a.st - b.st) <= tol);
      REQUIRE(std::fabs(a.du - b.du) <= tol);
      // Quaternion unitary: each part is preserved on its own.
      const QMatrix& v = u.st;
      REQUIRE(std::fabs((v * q.st * v.adjoint()).frobenius() - q.st.frobenius()) <= 1e-10 * q.st.frobenius());
      REQUIRE(std::fabs((v * q.du * v.adjoint()).frobenius() - q.du.frobenius()) <= 1e-10 * q.du.frobenius());
    }
  }

  TEST_CASE("Hoffman-Wielandt on standard parts") {
    const DQMatrix q = gen_random_hermitian(4, 9);
    CHECK(hw_check(q, q));
    DQMatrix shifted = q;
    for (std::size_t i = 0; i < 4; ++i) shifted.st(i, i).w += 0.25;
    CHECK(hw_check(q, shifted));
    const auto a = oracle::standard_eigs_oracle(q.st);
    const auto b = oracle::standard_eigs_oracle(shifted.st);
    double lhs = 0;
    for (std::size_t i = 0; i < 4; ++i) lhs += (a[i] - b[i]) * (a[i] - b[i]);
    CHECK(std::sqrt(lhs) == doctest::Approx(0.5).epsilon(1e-10));

    for (int t = 0; t < kMatrixCases; ++t) {
      REQUIRE(hw_check(gen_random_hermitian(4, 2000 + t), gen_random_hermitian(4, 3000 + t)));
    }
    DQMatrix bad = q;
    bad.st(0, 1) = bad.st(0, 1) + Quaternion{0, 1, 0, 0};
    CHECK_THROWS_AS(hw_check(bad, q), Error);
  }
}
