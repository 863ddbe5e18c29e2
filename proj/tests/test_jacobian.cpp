#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "tev/closed_forms.hpp"
#include "tev/errors.hpp"
#include "tev/jacobian.hpp"

using namespace tev;

namespace {

/// Multiplies every class in one ring Q[H, H_1..H_n, theta] without the
/// per-point shortcut, then extracts prod H_i^{r+1}, pushes forward and
/// integrates with formulas written out here.
ExactRat naive_deg_T(int g, int d, int e, int r, const std::vector<int>& ell) {
  const int n = static_cast<int>(ell.size());
  std::vector<Variable> vars{Variable{"H", std::nullopt}};
  for (int i = 1; i <= n; ++i) vars.push_back(Variable{"H" + std::to_string(i), r + 1});
  vars.push_back(Variable{"theta", g});
  const auto R = make_roster(vars);
  using P = TruncPoly<ExactRat>;
  const std::size_t th = static_cast<std::size_t>(n) + 1;

  P total = P::constant(R, 1);
  for (int i = 1; i <= n; ++i) {
    const std::string hi = "H" + std::to_string(i);
    P incidence(R);
    for (int b = 0; b <= r + 1; ++b) incidence += P::variable(R, "H", r + 1 - b) * P::variable(R, hi, b);
    total = total * incidence;
    for (int k = 1; k <= e; ++k) {
      total = total * (P::variable(R, "H", 1, ExactRat(k - 1)) + P::variable(R, hi, 1, ExactRat(e + 1 - k)));
    }
    total = total * P::variable(R, hi, r + 1 - ell[i - 1]);
  }

  const long t = long(e) * (d - n) - g + 1;
  P chern(R);
  for (int m = 0; m <= g; ++m) {
    std::vector<int> ex(R->size(), 0);
    ex[0] = static_cast<int>(t - m);
    ex[th] = m;
    chern += P::monomial(R, ex, ExactRat(ipow(ExactInt(e), t) * ipow(ExactInt(-e), m)) / ExactRat(factorial(m)));
  }
  total = total * chern;
  for (int i = 1; i <= n; ++i) total = coeff_extract(total, "H" + std::to_string(i), r + 1);

  const long N = long(r + 2) * (d - g + 1);
  ExactRat top = 0;
  for (const auto& [ex, c] : total.terms()) {
    const long k = ex[0] - (N - 1);
    if (k < 0 || ex[th] + k != g) continue;
    top += c * ExactRat(ipow(ExactInt(r + 2), k)) / ExactRat(factorial(k));
  }
  return top * ExactRat(factorial(g));
}

struct Case {
  int g, d, e, r;
  std::vector<int> ell;
};

}  // namespace

TEST(PointFactor, IsAlphaTimesPowerOfH) {
  EXPECT_EQ(point_factor(3, 1, 1), UniPoly<ExactInt>::monomial(6, 4));
  EXPECT_EQ(point_factor(3, 1, 2), UniPoly<ExactInt>::monomial(21, 3));
  EXPECT_EQ(point_factor(3, 2, 3), UniPoly<ExactInt>::monomial(27, 3));
  for (int e = 3; e <= 5; ++e) {
    for (int r = 1; r <= 6; ++r) {
      const AlphaList a = alpha_coefficients(e, r);
      for (int l = 1; l <= r + 1; ++l) {
        ASSERT_EQ(point_factor(e, r, l), UniPoly<ExactInt>::monomial(a.at(l), std::size_t(r + 1 + e - l)));
      }
    }
  }
}

TEST(PointFactor, RejectsOutOfRangeInput) {
  EXPECT_THROW(point_factor(2, 3, 1), InvalidInput);
  EXPECT_THROW(point_factor(3, 0, 1), InvalidInput);
  EXPECT_THROW(point_factor(3, 3, 0), InvalidInput);
  EXPECT_THROW(point_factor(3, 3, 5), InvalidInput);
}

TEST(Stages, Step3ClassCoefficients) {
  const HypParams p = HypParams::make(1, 3, 3, 3);
  ASSERT_EQ(p.t, 3);
  const JacClass c = step3_class(p);
  EXPECT_EQ(c.coefficient({3, 0}), 27);
  EXPECT_EQ(c.coefficient({2, 1}), -81);
  EXPECT_EQ(c.term_count(), 2u);
}

TEST(Stages, Step3RejectsRankBelowGenus) {
  HypParams p;
  p.g = 2;
  p.d = 4;
  p.e = 3;
  p.r = 3;
  p.n = 3;
  p.t = 1;
  p.N = 15;
  EXPECT_THROW(step3_class(p), InvalidInput);
}

TEST(Stages, PushforwardUsesSegreClasses) {
  const HypParams p = HypParams::make(1, 3, 3, 3);
  ASSERT_EQ(p.N, 15);
  JacClass c(jacobian_roster(p.g));
  c.add_term({13, 0}, 7);  // below the fiber dimension
  c.add_term({14, 0}, 2);
  c.add_term({15, 0}, 3);
  c.add_term({14, 1}, 4);
  const JacClass out = pushforward_theta(c, p);
  EXPECT_EQ(out.coefficient({0, 0}), 2);
  EXPECT_EQ(out.coefficient({0, 1}), 3 * 5 + 4);
  EXPECT_EQ(out.term_count(), 2u);
}

TEST(Stages, IntegrateThetaScalesByFactorial) {
  JacClass c(jacobian_roster(3));
  c.add_term({0, 3}, ExactRat(1, 6));
  c.add_term({0, 1}, 9);
  EXPECT_EQ(integrate_theta(c, 3), 1);
  c.add_term({1, 0}, 1);
  EXPECT_THROW(integrate_theta(c, 3), InvalidInput);
}

TEST(DegT, PointInsertionExamples) {
  EXPECT_EQ(deg_T(HypParams::make(0, 3, 3, 3), InsertionProfile::points(3)), 648);
  EXPECT_EQ(deg_T(HypParams::make(1, 3, 3, 3), InsertionProfile::points(2)), 1944);
  EXPECT_EQ(deg_T(HypParams::make(2, 6, 3, 3), InsertionProfile::points(3)), 6 * 6 * 6 * 4 * 6561);
}

TEST(DegT, MatchesNaiveExpansion) {
  const std::vector<Case> cases{
      {0, 3, 3, 3, {1, 1, 1}},    {1, 3, 3, 3, {1, 1}},    {1, 4, 3, 4, {1, 1, 1}},
      {2, 6, 3, 3, {1, 1, 1}},    {0, 4, 3, 2, {3, 1, 1, 1}}, {0, 4, 3, 2, {2, 2, 1, 1}},
      {1, 4, 3, 2, {3, 1, 1}},    {1, 4, 3, 2, {2, 2, 1}},    {1, 2, 3, 2, {1}},
      {0, 5, 4, 5, {1, 1, 1, 1}},
  };
  for (const auto& c : cases) {
    const InsertionProfile prof{c.ell};
    const HypParams p = HypParams::for_profile(c.g, c.d, c.e, c.r, prof);
    ASSERT_EQ(ExactRat(deg_T(p, prof)), naive_deg_T(c.g, c.d, c.e, c.r, c.ell))
        << c.g << " " << c.d << " " << c.e << " " << c.r;
  }
}

TEST(DegT, RejectsMismatchedProfiles) {
  const HypParams p = HypParams::make(0, 3, 3, 3);
  EXPECT_THROW(deg_T(p, InsertionProfile::points(2)), InvalidInput);
  EXPECT_THROW(deg_T(p, InsertionProfile{{2, 1, 1}}), InvalidInput);
  EXPECT_THROW(deg_T(p, InsertionProfile{{5, 1, 1}}), InvalidInput);
}

TEST(Engine, Examples) {
  EXPECT_EQ(tev_hypersurface_engine(HypParams::make(0, 3, 3, 3)), 24);
  EXPECT_EQ(tev_hypersurface_engine(HypParams::make(1, 3, 3, 3)), 216);
  EXPECT_EQ(tev_hypersurface_engine(HypParams::make(0, 8, 3, 8)), 768);
}

TEST(Engine, AgreesWithClosedFormOnAGrid) {
  for (int e = 3; e <= 5; ++e) {
    for (int r = 2 * e - 3; r <= 9; ++r) {
      for (int g = 0; g <= 2; ++g) {
        for (int d = 1; d <= 16; ++d) {
          std::optional<HypParams> p;
          try {
            p = HypParams::make(g, d, e, r);
          } catch (const InvalidInput&) {
            continue;
          }
          ASSERT_EQ(tev_hypersurface_engine(*p), vtev_hypersurface_closed(g, d, e, r).value)
              << g << " " << d << " " << e << " " << r;
        }
      }
    }
  }
}

TEST(Engine, RejectsDegreeBelowTwiceGenus) { EXPECT_THROW(HypParams::make(2, 3, 3, 3), InvalidInput); }
