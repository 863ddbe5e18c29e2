#pragma once

// Degree of the zero-cycle T cut out on P(V^{+(r+2)}) x (P^{r+1})^n over
// Jac^d(C), by multiplying the four classes of the construction:
//
//   (1) incidence:   prod_i (H^{r+1} + H^r H_i + ... + H_i^{r+1})
//   (2) hypersurface: prod_i prod_{k=1}^{e} ((k-1) H + (e+1-k) H_i)
//   (3) Jacobian:    e^t sum_{m=0}^{g} ((-e)^m / m!) theta^m H^{t-m}
//   (4) insertions:  prod_i H_i^{r+1-ell_i}
//
// then keeping the coefficient of prod_i H_i^{r+1}, pushing H forward to
// the Jacobian through its Segre classes and integrating theta^g.
//
// Factors (1), (2), (4) for point i involve only H and H_i, so the
// H_i^{r+1} coefficient is extracted point by point and the n-point
// product collapses to a univariate product in H.

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "tev/errors.hpp"
#include "tev/exact.hpp"
#include "tev/params.hpp"
#include "tev/trunc_poly.hpp"
#include "tev/uni_poly.hpp"

namespace tev {

/// Classes in H (uncapped) and theta (theta^{g+1} = 0).
using JacClass = TruncPoly<ExactRat>;

inline constexpr const char* kH = "H";
inline constexpr const char* kTheta = "theta";

inline std::shared_ptr<const Roster> jacobian_roster(int g) {
  return make_roster({Variable{kH, std::nullopt}, Variable{kTheta, g}});
}

/// H_i^{r+1} coefficient of factors (1), (2), (4) for one marked point,
/// expanded honestly in Z[H, H_i]/(H_i^{r+2}). The result is the monomial
/// alpha_ell H^{r+1+e-ell}.
inline UniPoly<ExactInt> point_factor(int e, int r, int ell) {
  if (e < 3) throw InvalidInput("point_factor: requires e >= 3");
  if (r < 1) throw InvalidInput("point_factor: requires r >= 1");
  if (ell < 1 || ell > r + 1) {
    throw InvalidInput("point_factor: ell=" + std::to_string(ell) + " outside [1, r+1]");
  }
  using Bi = TruncPoly<ExactInt>;
  const auto roster = make_roster({Variable{"H", std::nullopt}, Variable{"Hi", r + 1}});

  Bi incidence(roster);
  for (int b = 0; b <= r + 1; ++b) incidence.add_term({r + 1 - b, b}, 1);

  Bi hyper = Bi::constant(roster, 1);
  for (int k = 1; k <= e; ++k) {
    Bi lin(roster);
    lin.add_term({1, 0}, k - 1);
    lin.add_term({0, 1}, e + 1 - k);
    hyper = trunc_mul(hyper, lin);
  }

  const Bi linear_space = Bi::variable(roster, "Hi", r + 1 - ell);
  const Bi full = trunc_mul(trunc_mul(incidence, hyper), linear_space);
  const Bi top = coeff_extract(full, "Hi", r + 1);

  std::vector<ExactInt> coeffs;
  for (const auto& [exps, c] : top.terms()) {
    const auto k = static_cast<std::size_t>(exps[0]);
    if (coeffs.size() <= k) coeffs.resize(k + 1, ExactInt(0));
    coeffs[k] += c;
  }
  UniPoly<ExactInt> out(std::move(coeffs));
  const auto deg = out.monomial_degree();
  if (!deg || static_cast<long>(*deg) != r + 1 + e - ell) {
    throw InvariantBreach("point_factor: extraction is not a single monomial of H-degree r+1+e-ell");
  }
  return out;
}

/// Top Chern class contribution e^t sum_{m=0}^{g} ((-e)^m/m!) theta^m H^{t-m}.
inline JacClass step3_class(const HypParams& p) {
  if (p.t < p.g) {
    throw InvalidInput("step3_class: rank t=" + std::to_string(p.t) + " < g=" + std::to_string(p.g) +
                       " is outside the model (negative H power)");
  }
  JacClass c(jacobian_roster(p.g));
  const ExactInt et = ipow(ExactInt(p.e), p.t);
  for (int m = 0; m <= p.g; ++m) {
    ExactRat coeff = ExactRat(et * ipow(ExactInt(-p.e), m)) / ExactRat(factorial(m));
    c.add_term({static_cast<int>(p.t - m), m}, std::move(coeff));
  }
  return c;
}

/// Pushforward along P(V^{+(r+2)}) -> Jac^d(C):
///   H^{N-1+k} -> s_k = (r+2)^k theta^k / k!,  H^j -> 0 for j < N-1.
inline JacClass pushforward_theta(const JacClass& c, const HypParams& p) {
  JacClass out(c.roster_ptr());
  const std::int64_t fiber = p.N - 1;
  for (const auto& [exps, coeff] : c.terms()) {
    const std::int64_t k = exps[0] - fiber;
    if (k < 0) continue;
    if (exps[1] + k > p.g) continue;  // theta^{g+1} = 0
    ExactRat segre = ExactRat(ipow(ExactInt(p.r + 2), k)) / ExactRat(factorial(k));
    out.add_term({0, static_cast<int>(exps[1] + k)}, coeff * segre);
  }
  return out;
}

/// g! times the theta^g coefficient (deg theta^g = g!).
inline ExactRat integrate_theta(const JacClass& c, int g) {
  for (const auto& [exps, coeff] : c.terms()) {
    if (exps[0] != 0) throw InvalidInput("integrate_theta: class still involves H");
  }
  return c.coefficient({0, g}) * ExactRat(factorial(g));
}

/// Product of the per-point factors, as a class in H alone.
inline JacClass insertion_class(const HypParams& p, const InsertionProfile& prof) {
  require_profile_shape(p.r, prof);
  if (prof.size() != p.n) {
    throw InvalidInput("deg_T: profile has " + std::to_string(prof.size()) + " entries, expected n=" +
                       std::to_string(p.n));
  }
  if (!insertion_dimension_ok(p.g, p.d, p.e, p.r, prof)) {
    throw InvalidInput("deg_T: dimension condition r(n+g-1) = (r+2-e)d + sum(ell_i-1) fails");
  }

  std::map<int, UniPoly<ExactInt>> per_ell;
  UniPoly<ExactInt> points({ExactInt(1)});
  for (int ell : prof.ell) {
    auto it = per_ell.find(ell);
    if (it == per_ell.end()) it = per_ell.emplace(ell, point_factor(p.e, p.r, ell)).first;
    points = points * it->second;
  }

  JacClass out(jacobian_roster(p.g));
  const auto& pc = points.coeffs();
  for (std::size_t k = 0; k < pc.size(); ++k) {
    if (pc[k] != 0) out.add_term({static_cast<int>(k), 0}, ExactRat(pc[k]));
  }
  return out;
}

/// Full class before pushforward. Every term H^j theta^m must sit in total
/// degree N-1+g, i.e. j in [N-1, N-1+g]; anything else is a breach.
inline JacClass pipeline_class(const HypParams& p, const InsertionProfile& prof) {
  JacClass full = trunc_mul(insertion_class(p, prof), step3_class(p));
  for (const auto& [exps, coeff] : full.terms()) {
    if (exps[0] + exps[1] != p.N - 1 + p.g) {
      throw InvariantBreach("deg_T: term H^" + std::to_string(exps[0]) + " theta^" + std::to_string(exps[1]) +
                            " lies outside total degree N-1+g = " + std::to_string(p.N - 1 + p.g));
    }
  }
  return full;
}

/// deg(T) before the integrality check.
inline ExactRat deg_T_rational(const HypParams& p, const InsertionProfile& prof) {
  return integrate_theta(pushforward_theta(pipeline_class(p, prof), p), p.g);
}

inline ExactInt deg_T(const HypParams& p, const InsertionProfile& prof) {
  const ExactInt value = require_integral(deg_T_rational(p, prof), "deg_T");
  if (value < 0) throw InvariantBreach("deg_T: negative degree " + to_decimal(value));
  return value;
}

/// Tevelev degree from the pipeline: deg(T) with point insertions divided
/// by the e^n choices of x_i'' in L_i cap X.
inline ExactInt tev_hypersurface_engine(const HypParams& p) {
  const ExactInt deg = deg_T(p, InsertionProfile::points(p.n));
  const ExactInt en = ipow(ExactInt(p.e), p.n);
  if (deg % en != 0) {
    throw InvariantBreach("tev_hypersurface_engine: e^n = " + to_decimal(en) + " does not divide deg(T) = " +
                          to_decimal(deg));
  }
  return deg / en;
}

}  // namespace tev
