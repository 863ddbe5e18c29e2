#include <map>
#include <utility>

#include <gtest/gtest.h>

#include "tev/closed_forms.hpp"
#include "tev/errors.hpp"
#include "tev/schubert.hpp"

using namespace tev;

namespace {

/// Independent model of H*(Gr(2, box+2)): symmetric polynomials in x, y
/// modulo Schur functions with first row above box. Products are done on
/// explicit monomials and re-expanded in the Schur basis by peeling off
/// leading terms.
class SchurOracle {
 public:
  using Poly = std::map<std::pair<int, int>, ExactInt>;  // x^i y^j -> coeff

  explicit SchurOracle(int box) : box_(box) {}

  static Poly schur(int a, int b) {
    // s_{a,b}(x,y) = (xy)^b h_{a-b}(x,y)
    Poly p;
    for (int i = 0; i <= a - b; ++i) p[{b + i, b + (a - b - i)}] += 1;
    return p;
  }

  static Poly mul(const Poly& u, const Poly& v) {
    Poly out;
    for (const auto& [mu, cu] : u)
      for (const auto& [mv, cv] : v) out[{mu.first + mv.first, mu.second + mv.second}] += cu * cv;
    return out;
  }

  /// Schur expansion, dropping s_{a,b} with a > box.
  std::map<std::pair<int, int>, ExactInt> expand(Poly p) const {
    std::map<std::pair<int, int>, ExactInt> out;
    while (true) {
      std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
      if (p.empty()) break;
      const auto [lead, c] = *p.rbegin();  // largest x-exponent first
      const auto [a, b] = lead;
      EXPECT_GE(a, b);
      if (a <= box_) out[{a, b}] += c;
      for (const auto& [m, k] : schur(a, b)) p[m] -= c * k;
    }
    return out;
  }

 private:
  int box_;
};

SchubertCombo to_combo(int box, const std::map<std::pair<int, int>, ExactInt>& m) {
  SchubertCombo c(box);
  for (const auto& [ab, k] : m) c.add(TwoRowPartition{ab.first, ab.second}, k);
  return c;
}

ExactInt castelnuovo(int g, int d) {
  return factorial(g) / (factorial(g - d + 1) * factorial(g - d + 2));
}

ExactInt catalan(int k) { return binom(2 * k, k) / (k + 1); }

}  // namespace

TEST(Pieri, SmallProducts) {
  const SchubertCombo s1 = SchubertCombo::schubert(3, 1, 0);
  const SchubertCombo sq = pieri_special(s1, 1);
  EXPECT_EQ(sq.coefficient(2, 0), 1);
  EXPECT_EQ(sq.coefficient(1, 1), 1);

  // In Gr(2,4): sigma_1^4 = 2 points.
  SchubertCombo acc = SchubertCombo::unit(2);
  for (int k = 0; k < 4; ++k) acc = pieri_special(acc, 1);
  EXPECT_EQ(grassmann_integral(acc), 2);

  EXPECT_TRUE(pieri_special(SchubertCombo::unit(2), 3).is_zero());
  EXPECT_THROW(pieri_special(s1, -1), InvalidInput);
}

TEST(Pieri, MatchesSchurOracle) {
  for (int box = 1; box <= 6; ++box) {
    const SchurOracle oracle(box);
    for (int a = 0; a <= box; ++a) {
      for (int b = 0; b <= a; ++b) {
        for (int i = 0; i <= box; ++i) {
          const auto expect =
              to_combo(box, oracle.expand(SchurOracle::mul(SchurOracle::schur(a, b), SchurOracle::schur(i, 0))));
          ASSERT_EQ(pieri_special(SchubertCombo::schubert(box, a, b), i), expect)
              << "box=" << box << " (" << a << "," << b << ") * " << i;
        }
      }
    }
  }
}

TEST(Pieri, IntegralsOfMonomialsMatchOracle) {
  for (int box = 1; box <= 5; ++box) {
    const SchurOracle oracle(box);
    const int top = 2 * box;
    for (int i = 0; i <= box; ++i) {
      for (int j = 0; i + j <= top && j <= box; ++j) {
        const int k = top - i - j;
        SchurOracle::Poly p = SchurOracle::schur(0, 0);
        for (int m = 0; m < k; ++m) p = SchurOracle::mul(p, SchurOracle::schur(1, 0));
        p = SchurOracle::mul(SchurOracle::mul(p, SchurOracle::schur(i, 0)), SchurOracle::schur(j, 0));
        const auto expanded = oracle.expand(p);
        const auto it = expanded.find({box, box});
        const ExactInt expect = it == expanded.end() ? ExactInt(0) : it->second;

        SchubertCombo c = SchubertCombo::unit(box);
        for (int m = 0; m < k; ++m) c = pieri_special(c, 1);
        ASSERT_EQ(grassmann_integral(pieri_special(pieri_special(c, i), j)), expect);
      }
    }
  }
}

TEST(Schubert, PoincareDualityThroughGiambelli) {
  // sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}
  for (int box = 1; box <= 5; ++box) {
    auto giambelli = [&](int a, int b) {
      SchubertCombo c = pieri_special(pieri_special(SchubertCombo::unit(box), a), b);
      if (b >= 1 && a + 1 <= box) {
        SchubertCombo sub = pieri_special(pieri_special(SchubertCombo::unit(box), a + 1), b - 1);
        SchubertCombo neg(box);
        for (const auto& [p, k] : sub.terms()) neg.add(p, -k);
        c += neg;
      }
      return c;
    };
    for (int a = 0; a <= box; ++a) {
      for (int b = 0; b <= a; ++b) {
        ASSERT_EQ(giambelli(a, b), SchubertCombo::schubert(box, a, b));
        for (int a2 = 0; a2 <= box; ++a2) {
          for (int b2 = 0; b2 <= a2; ++b2) {
            if (a + b + a2 + b2 != 2 * box) continue;
            // multiply sigma_{a,b} by sigma_{a2,b2} via Giambelli on the second factor
            SchubertCombo lhs = pieri_special(pieri_special(SchubertCombo::schubert(box, a, b), a2), b2);
            if (b2 >= 1 && a2 + 1 <= box) {
              const SchubertCombo sub =
                  pieri_special(pieri_special(SchubertCombo::schubert(box, a, b), a2 + 1), b2 - 1);
              for (const auto& [p, k] : sub.terms()) lhs.add(p, -k);
            }
            const bool dual = a2 == box - b && b2 == box - a;
            ASSERT_EQ(grassmann_integral(lhs), dual ? 1 : 0);
          }
        }
      }
    }
  }
}

TEST(Schubert, SigmaOnePowerIsCatalan) {
  for (int box = 0; box <= 12; ++box) {
    SchubertCombo acc = SchubertCombo::unit(box);
    for (int k = 0; k < 2 * box; ++k) acc = pieri_special(acc, 1);
    ASSERT_EQ(grassmann_integral(acc), catalan(box)) << box;
  }
}

TEST(TevP1Schubert, Fixtures) {
  EXPECT_EQ(tev_p1_schubert(4, 3), 2);
  EXPECT_EQ(tev_p1_schubert(6, 4), 5);
  EXPECT_EQ(tev_p1_schubert(5, 3), 0);
  EXPECT_EQ(tev_p1_schubert(0, 1), 1);
}

TEST(TevP1Schubert, GenusZeroIsOne) {
  for (int d = 1; d <= 20; ++d) ASSERT_EQ(tev_p1_schubert(0, d), 1) << d;
}

TEST(TevP1Schubert, LargeDegreeIsTwoToTheGenus) {
  for (int g = 0; g <= 10; ++g) {
    for (int d = g + 1; d <= g + 5; ++d) ASSERT_EQ(tev_p1_schubert(g, d), ipow(2, g)) << g << " " << d;
  }
}

TEST(TevP1Schubert, CastelnuovoCountWhenBrillNoetherNumberVanishes) {
  // g = 2d-2 forces n = 3 and rho = 0.
  for (int d = 2; d <= 10; ++d) {
    const int g = 2 * d - 2;
    ASSERT_EQ(tev_p1_schubert(g, d), castelnuovo(g, d)) << g << " " << d;
  }
}

TEST(TevP1Schubert, AgreesWithCpsFormulaWhenDegreeAtLeastGenus) {
  for (int g = 0; g <= 12; ++g) {
    for (int d = std::max(g, 1); d <= g + 4; ++d) ASSERT_EQ(tev_p1_schubert(g, d), tev_p1_cps(g, d));
  }
}

TEST(TevP1Schubert, RejectsInvalidInput) {
  EXPECT_THROW(tev_p1_schubert(-1, 3), InvalidInput);
  EXPECT_THROW(tev_p1_schubert(2, 0), InvalidInput);
  EXPECT_THROW(tev_p1_schubert(9, 3), InvalidInput);  // n < 0
}
