#include <random>

#include <gtest/gtest.h>

#include "tev/closed_forms.hpp"
#include "tev/errors.hpp"
#include "tev/quantum_proj.hpp"

using namespace tev;

namespace {

QPolyClass random_class(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> q(0, 3), h(0, r), c(-4, 4), len(0, 4);
  QPolyClass x(r);
  for (int k = len(rng); k > 0; --k) x.add(QMonomial{q(rng), h(rng)}, c(rng));
  return x;
}

}  // namespace

TEST(QuantumProduct, HyperplaneWrapsToQ) {
  const int r = 3;
  const QPolyClass h = QPolyClass::hyperplane(r);
  EXPECT_EQ(qmul(h, QPolyClass::point(r)), QPolyClass::basis(r, 1, 0));
  EXPECT_EQ(qpow(h, 4), QPolyClass::basis(r, 1, 0));
  EXPECT_EQ(qpow(h, 9), QPolyClass::basis(r, 2, 1));
  EXPECT_EQ(qmul(QPolyClass::point(r), QPolyClass::point(r)), QPolyClass::basis(r, 1, 2));
}

TEST(QuantumProduct, MismatchedDimensionThrows) {
  EXPECT_THROW(qmul(QPolyClass::one(2), QPolyClass::one(3)), InvalidInput);
  EXPECT_THROW(QPolyClass::basis(2, 0, 3), InvalidInput);
}

TEST(QuantumProduct, CommutativeAssociativeDistributive) {
  std::mt19937_64 rng(3);
  for (int r = 1; r <= 5; ++r) {
    for (int trial = 0; trial < 60; ++trial) {
      const QPolyClass a = random_class(r, rng), b = random_class(r, rng), c = random_class(r, rng);
      ASSERT_EQ(qmul(a, b), qmul(b, a));
      ASSERT_EQ(qmul(qmul(a, b), c), qmul(a, qmul(b, c)));
      ASSERT_EQ(qmul(a, b + c), qmul(a, b) + qmul(a, c));
    }
  }
}

TEST(QuantumProduct, PreservesGradingWithQInDegreeRPlusOne) {
  std::mt19937_64 rng(5);
  for (int r = 1; r <= 6; ++r) {
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= r; ++j) {
        std::uniform_int_distribution<int> qd(0, 3);
        const int qa = qd(rng), qb = qd(rng);
        const QPolyClass p = qmul(QPolyClass::basis(r, qa, i), QPolyClass::basis(r, qb, j));
        ASSERT_EQ(p.terms().size(), 1u);
        const auto& m = p.terms().begin()->first;
        ASSERT_EQ(m.qexp * (r + 1) + m.hexp, (qa + qb) * (r + 1) + i + j);
      }
    }
  }
}

TEST(QuantumEuler, IsRPlusOneTimesPoint) {
  for (int r = 1; r <= 12; ++r) {
    ASSERT_EQ(quantum_euler(r), QPolyClass::basis(r, 0, r, ExactInt(r + 1))) << r;
  }
}

TEST(VirtualTevelevProjective, MatchesPowerOfRPlusOne) {
  for (int r = 1; r <= 5; ++r) {
    for (int g = 0; g <= 5; ++g) {
      for (int d = r; d <= 3 * r; d += r) {
        const int n = (r + 1) * d / r - g + 1;
        if (n < 1 || 2 * g - 2 + n <= 0) continue;
        ASSERT_EQ(vtev_projective_qh(g, d, r, n), vtev_projective_closed(g, r));
      }
    }
  }
}

TEST(VirtualTevelevProjective, VanishesOffTheDimensionCondition) {
  for (int r = 1; r <= 4; ++r) {
    for (int g = 0; g <= 3; ++g) {
      for (int d = 1; d <= 8; ++d) {
        for (int n = 1; n <= 12; ++n) {
          if (2 * g - 2 + n <= 0) continue;
          if (r * (n + g - 1) == (r + 1) * d) continue;
          ASSERT_EQ(vtev_projective_qh(g, d, r, n), 0) << g << " " << d << " " << r << " " << n;
        }
      }
    }
  }
}

TEST(VirtualTevelevProjective, Examples) {
  EXPECT_EQ(vtev_projective_qh(2, 2, 2, 2), 9);
  EXPECT_EQ(vtev_projective_qh(0, 1, 1, 3), 1);
  EXPECT_EQ(vtev_projective_qh(3, 4, 1, 6), 8);
  EXPECT_THROW(vtev_projective_qh(0, 1, 1, 0), InvalidInput);
  EXPECT_THROW(vtev_projective_qh(0, 1, 1, 2), InvalidInput);
}
