#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace dqeig;
using namespace dqeig::oracle;

TEST_SUITE("oracle") {
  TEST_CASE("embedding of small cases") {
    QMatrix one(1);
    one(0, 0) = Quaternion(3.5);
    const ComplexMatrix c = complex_adjoint(one);
    CHECK(c(0, 0) == Complex(3.5, 0));
    CHECK(c(1, 1) == Complex(3.5, 0));
    CHECK(c(0, 1) == Complex(0, 0));
    CHECK(c(1, 0) == Complex(0, 0));

    const ComplexMatrix id = complex_adjoint(QMatrix::identity(3));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK(id(i, j) == Complex(i == j ? 1.0 : 0.0, 0.0));

    QMatrix nh(2);
    nh(0, 1) = {0, 1, 0, 0};
    CHECK_THROWS_AS(complex_adjoint(nh), Error);
  }

  TEST_CASE("embedding is multiplicative") {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
      const QMatrix p = dqeig::testing::random_qmatrix(3, 3, rng);
      const QMatrix q = dqeig::testing::random_qmatrix(3, 3, rng);
      const ComplexMatrix lhs = embed(p * q);
      const ComplexMatrix rhs = embed(p) * embed(q);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) REQUIRE(std::abs(lhs(i, j) - rhs(i, j)) <= 1e-12 * 10.0);
      const ComplexMatrix pa = embed(p.adjoint());
      const ComplexMatrix ep = embed(p);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) REQUIRE(pa(i, j) == std::conj(ep(j, i)));
    }
  }

  TEST_CASE("embedded spectrum comes in pairs") {
    for (int t = 0; t < 20; ++t) {
      const DQMatrix h = gen_random_hermitian(3, 60 + t);
      const ComplexEigen e = hermitian_eigen(complex_adjoint(h.st));
      for (std::size_t k = 0; k < 6; k += 2) REQUIRE(std::fabs(e.values[k] - e.values[k + 1]) <= 1e-10);
    }
  }

  TEST_CASE("standard eigenvalues") {
    QMatrix d(2);
    d(0, 0) = Quaternion(1.0);
    d(1, 1) = Quaternion(3.0);
    const auto v = standard_eigs_oracle(d);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == doctest::Approx(3.0));
    CHECK(v[1] == doctest::Approx(1.0));

    const double a = 0.7, b = -1.3;
    const Quaternion c{0.2, -0.5, 1.1, 0.4};
    QMatrix m(2);
    m(0, 0) = Quaternion(a);
    m(1, 1) = Quaternion(b);
    m(0, 1) = c;
    m(1, 0) = c.conj();
    const double disc = std::sqrt((a - b) * (a - b) + 4.0 * c.norm_sq());
    const auto r = standard_eigs_oracle(m);
    CHECK(r[0] == doctest::Approx((a + b + disc) / 2).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx((a + b - disc) / 2).epsilon(1e-12));
  }

  TEST_CASE("standard eigenvalues of the demo matrix") {
    const auto v = standard_eigs_oracle(demo_p5().st);
    const double expect[5] = {2.0, 0.6180, 0.6180, -1.6180, -1.6180};
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(v[i] - expect[i]) <= 1e-3);
  }

  TEST_CASE("quaternion eigenvectors satisfy Qv = v mu and are deterministic") {
    for (int t = 0; t < 20; ++t) {
      const DQMatrix h = gen_random_hermitian(5, 80 + t);
      const QuaternionEigen e1 = quaternion_eigen(h.st);
      const QuaternionEigen e2 = quaternion_eigen(h.st);
      REQUIRE(e1.vectors == e2.vectors);
      REQUIRE(e1.vectors.is_unitary(1e-10));
      const QMatrix lhs = h.st * e1.vectors;
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t i = 0; i < 5; ++i)
          REQUIRE((lhs(i, j) - e1.vectors(i, j) * e1.values[j]).norm() <= 1e-10 * h.st.frobenius());
    }
  }

  TEST_CASE("dual eigenvalues") {
    DQMatrix d(3);
    for (std::size_t i = 0; i < 3; ++i) d.set(i, i, {Quaternion(double(i)), Quaternion(10.0 - double(i))});
    const auto v = dual_eigs_oracle(d);
    CHECK(v[0].st == doctest::Approx(2.0));
    CHECK(v[0].du == doctest::Approx(8.0));
    CHECK(v[2].st == doctest::Approx(0.0));
    CHECK(v[2].du == doctest::Approx(10.0));

    CHECK_THROWS_AS(dual_eigs_oracle(demo_p5()), Error);
  }

  TEST_CASE("dual eigenvalues match the 2x2 closed form") {
    DQMatrix q(2);
    q.st(0, 1) = Quaternion(1.0);
    q.st(1, 0) = Quaternion(1.0);
    q.du(0, 0) = Quaternion(1.0);
    q.du(1, 1) = Quaternion(2.0);
    const auto v = dual_eigs_oracle(q);
    CHECK(v[0].st == doctest::Approx(1.0));
    CHECK(v[0].du == doctest::Approx(1.5));
    CHECK(v[1].st == doctest::Approx(-1.0));
    CHECK(v[1].du == doctest::Approx(1.5));
  }
}
