#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace dqeig;

namespace {

QMatrix block(double a, double b, const Quaternion& c) {
  QMatrix m(2);
  m(0, 0) = Quaternion(a);
  m(1, 1) = Quaternion(b);
  m(0, 1) = c;
  m(1, 0) = c.conj();
  return m;
}

QMatrix as_matrix(const Unitary2& u) {
  QMatrix m(2);
  m(0, 0) = u.u00;
  m(0, 1) = u.u01;
  m(1, 0) = u.u10;
  m(1, 1) = u.u11;
  return m;
}

std::pair<std::size_t, std::size_t> random_pair(std::size_t n, Rng& rng) {
  std::size_t k = rng.below(n), l = rng.below(n - 1);
  if (l >= k) ++l;
  return {std::min(k, l), std::max(k, l)};
}

}  // namespace

TEST_SUITE("givens") {
  TEST_CASE("2x2 standard closed forms") {
    GivensPlan p = diag2_standard(0, 0, Quaternion(1.0));
    CHECK(p.lambda1 == doctest::Approx(1.0));
    CHECK(p.lambda2 == doctest::Approx(-1.0));

    p = diag2_standard(3, 1, {0, 2, 0, 0});
    CHECK(p.lambda1 == doctest::Approx(2.0 + std::sqrt(5.0)).epsilon(1e-14));
    CHECK(p.lambda2 == doctest::Approx(2.0 - std::sqrt(5.0)).epsilon(1e-14));

    CHECK_THROWS_AS(diag2_standard(1, 2, Quaternion{0, 1e-15, 0, 0}), Error);
  }

  TEST_CASE("2x2 standard kernel diagonalizes random blocks") {
    Rng rng(61);
    for (int t = 0; t < 1000; ++t) {
      const double a = rng.normal(), b = t % 10 == 0 ? a : rng.normal();
      const Quaternion c = dqeig::testing::random_quaternion(rng) * (t % 7 == 0 ? 1e-6 : 1.0);
      const GivensPlan p = diag2_standard(a, b, c);
      const QMatrix u = as_matrix(p.U);
      REQUIRE(u.is_unitary(1e-12));
      const QMatrix d = u.adjoint() * block(a, b, c) * u;
      const double scale = std::max(1.0, std::fabs(a) + std::fabs(b) + c.norm());
      REQUIRE(d(0, 1).norm() <= 1e-12 * scale);
      REQUIRE(std::fabs(d(0, 0).w - p.lambda1) <= 1e-12 * scale);
      REQUIRE(std::fabs(d(1, 1).w - p.lambda2) <= 1e-12 * scale);
      REQUIRE(p.lambda1 > p.lambda2);
      REQUIRE(std::fabs(p.lambda1 + p.lambda2 - (a + b)) <= 1e-12 * scale);
      REQUIRE(std::fabs(p.lambda1 * p.lambda2 - (a * b - c.norm_sq())) <= 1e-12 * scale * scale);
    }
  }

  TEST_CASE("2x2 dual kernel") {
    DQMatrix q(2);
    q.st = block(0.5, -0.2, {0.1, 0.3, 0, 0});
    GivensPlan p = diag2_dual(q);
    REQUIRE(p.correction);
    CHECK(p.correction->w_kl.norm() == 0.0);
    CHECK(p.x == doctest::Approx(0.0));

    q.st = block(0, 0, Quaternion(1.0));
    q.du = block(1, 2, {});
    p = diag2_dual(q);
    CHECK(p.lambda1 == doctest::Approx(1.0));
    CHECK(p.x == doctest::Approx(1.5));
    CHECK(p.lambda2 == doctest::Approx(-1.0));
    CHECK(p.y == doctest::Approx(1.5));
    const DQMatrix j = embed_plan(p, 2);
    const DQMatrix d = adjoint(j) * q * j;
    CHECK(d.at(0, 1).st.norm() <= 1e-14);
    CHECK(d.at(0, 1).du.norm() <= 1e-14);
  }

  TEST_CASE("2x2 dual kernel reassembles random matrices") {
    for (int t = 0; t < 200; ++t) {
      const DQMatrix q = gen_random_hermitian(2, 100 + t);
      const GivensPlan p = diag2_dual(q);
      const DQMatrix j = embed_plan(p, 2);
      REQUIRE(j.is_unitary(1e-12));
      DQMatrix diag(2);
      diag.set(0, 0, DualQuaternion(DualNumber{p.lambda1, p.x}));
      diag.set(1, 1, DualQuaternion(DualNumber{p.lambda2, p.y}));
      REQUIRE(norm_fr(j * diag * adjoint(j) - q) <= 1e-10 * norm_fr(q));
      const DQMatrix d = adjoint(j) * q * j;
      REQUIRE(d.at(0, 1).st.norm() <= 1e-12 * norm_fr(q));
      REQUIRE(d.at(0, 1).du.norm() <= 1e-12 * norm_fr(q) * (1.0 + 1.0 / (p.lambda1 - p.lambda2)));
      REQUIRE(std::fabs(p.x + p.y - (q.du(0, 0).w + q.du(1, 1).w)) <= 1e-12 * norm_fr(q));
    }
  }

  TEST_CASE("restricted standard rotation equals the full product") {
    Rng rng(62);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 3 + t % 5;
      DQMatrix q = gen_random_hermitian(n, 200 + t);
      const auto [k, l] = random_pair(n, rng);
      const GivensPlan p = plan_standard_at(q, k, l);
      const DQMatrix j = embed_plan(p, n);
      const DQMatrix full = adjoint(j) * q * j;
      const double before = offdiag_measure(q.st);
      const double c2 = q.st(k, l).norm_sq();
      DQMatrix acc = DQMatrix::identity(n);
      apply_standard_rotation(q, p, &acc);
      REQUIRE(norm_fr(q - full) <= 1e-12 * norm_fr(full));
      REQUIRE(norm_fr(acc - j) <= 1e-14);
      REQUIRE(std::fabs(before - 2.0 * c2 - offdiag_measure(q.st)) <= 1e-10 * before);
      REQUIRE(q.st(k, l).norm() <= 1e-12 * norm_fr(full));
    }
  }

  TEST_CASE("dual rotation eliminates both parts and keeps the spectrum") {
    Rng rng(63);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 3 + t % 5;
      DQMatrix q = gen_random_hermitian(n, 300 + t);
      const auto before = oracle::standard_eigs_oracle(q.st);
      const auto [k, l] = random_pair(n, rng);
      const GivensPlan p = plan_dual_at(q, k, l);
      const DQMatrix j = embed_plan(p, n);
      const DQMatrix full = adjoint(j) * q * j;
      apply_dual_givens(q, p);
      REQUIRE(norm_fr(q - full) <= 1e-11 * norm_fr(full));
      REQUIRE(q.st(k, l).norm() <= 1e-12 * norm_fr(full));
      REQUIRE(q.du(k, l).norm() <= 1e-12 * norm_fr(full));
      const auto after = oracle::standard_eigs_oracle(q.st);
      for (std::size_t i = 0; i < n; ++i) REQUIRE(std::fabs(before[i] - after[i]) <= 1e-10 * norm_fr(full));
    }
  }

  TEST_CASE("accumulated rotations stay unitary") {
    Rng rng(64);
    const std::size_t n = 6;
    DQMatrix q = gen_random_hermitian(n, 400);
    DQMatrix acc = DQMatrix::identity(n);
    for (int t = 0; t < 100; ++t) {
      const auto [k, l] = random_pair(n, rng);
      if (q.st(k, l).norm() <= 1e-8) continue;
      apply_dual_givens(q, plan_dual_at(q, k, l), &acc);
    }
    const DQMatrix id = DQMatrix::identity(n);
    CHECK(norm_fr(adjoint(acc) * acc - id) <= 1e-9);
  }

  TEST_CASE("dual decoupling removes the dual entry only") {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 4;
      DQMatrix q = gen_random_hermitian(n, 500 + t);
      // Standard part near-diagonal with distinct entries.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          q.st(i, j) = i == j ? Quaternion(double(i) * 1.5) : q.st(i, j) * 1e-8;
      const DQMatrix before = q;
      DQMatrix acc = DQMatrix::identity(n);
      apply_dual_decoupling(q, 1, 3, &acc);
      REQUIRE(q.st == before.st);
      REQUIRE(q.du(1, 3).norm() <= 1e-7);
      REQUIRE(acc.is_unitary(1e-12));
      REQUIRE(norm_fr(adjoint(acc) * before * acc - q) <= 1e-12 * norm_fr(q));
    }
  }

  TEST_CASE("index checks") {
    DQMatrix q = gen_random_hermitian(3, 1);
    GivensPlan p = plan_standard_at(q, 0, 1);
    p.l = 3;
    CHECK_THROWS_AS(apply_standard_rotation(q, p), Error);
    CHECK_THROWS_AS(plan_dual_at(q, 1, 1), Error);
    CHECK_THROWS_AS(apply_dual_decoupling(q, 0, 5), Error);
    GivensPlan no_corr = plan_standard_at(q, 0, 2);
    CHECK_THROWS_AS(apply_dual_givens(q, no_corr), Error);
  }
}
