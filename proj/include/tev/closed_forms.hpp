#pragma once

// Closed-form Tevelev degrees, evaluated literally. These are the
// reference values the Schubert, quantum and Jacobian routes are checked
// against.

#include <cstdint>
#include <string>
#include <vector>

#include "tev/enumerativity.hpp"
#include "tev/errors.hpp"
#include "tev/exact.hpp"
#include "tev/params.hpp"
#include "tev/uni_poly.hpp"

namespace tev {

/// Closed formula ("cps" method) for P^1 with n = 2d - g + 1:
///   2^g - sum_{i=0}^{g-d-1} C(g,i) + (g-d-1) C(g,g-d) + (d-g-1) C(g,g-d+1).
/// Agrees with tev_p1_schubert for d >= g; see README for the d < g table.
inline ExactInt tev_p1_cps(int g, int d) {
  if (g < 0) throw InvalidInput("tev_p1_cps: genus must be nonnegative");
  if (d < 1) throw InvalidInput("tev_p1_cps: degree must be positive");
  const int n = 2 * d - g + 1;
  if (n < 0) throw InvalidInput("tev_p1_cps: n = 2d-g+1 is negative");
  if (2 * g - 2 + n <= 0) throw InvalidInput("tev_p1_cps: 2g-2+n must be positive");

  ExactInt value = ipow(2, g);
  for (int i = 0; i <= g - d - 1; ++i) value -= binom(g, i);
  value += ExactInt(g - d - 1) * binom(g, g - d);
  value += ExactInt(d - g - 1) * binom(g, g - d + 1);
  return value;
}

struct HypersurfaceClosed {
  ExactInt value;
  int n = 0;
  bool virtual_range = false;  // 3 <= e <= (r+3)/2
  bool bound_ok = false;       // r > (e+1)(e-2) and d above the enumerativity bound
};

inline bool in_virtual_range(int e, int r) { return e >= 3 && 2 * e <= r + 3; }

inline bool enumerativity_bound_holds(int g, int d, int e, int r) {
  return closed_bound_applies(e, r) && enum_bound_closed(g, e, r).admits(d);
}

/// ((e-1)!)^n (r+2-e)^g e^{(d-n)e-g+1}, always reported with its range flags.
inline HypersurfaceClosed vtev_hypersurface_closed(int g, int d, int e, int r) {
  HypersurfaceClosed out;
  out.n = dims_check(g, d, e, r);
  const std::int64_t exponent = std::int64_t(d - out.n) * e - g + 1;
  if (exponent < 0) {
    throw InvariantBreach("vtev_hypersurface_closed: negative exponent (d-n)e-g+1 = " + std::to_string(exponent));
  }
  out.value = ipow(factorial(e - 1), out.n) * ipow(ExactInt(r + 2 - e), g) * ipow(ExactInt(e), exponent);
  out.virtual_range = in_virtual_range(e, r);
  out.bound_ok = enumerativity_bound_holds(g, d, e, r);
  return out;
}

/// Virtual Tevelev degree of P^r: (r+1)^g.
inline ExactInt vtev_projective_closed(int g, int r) {
  if (g < 0) throw InvalidInput("vtev_projective_closed: genus must be nonnegative");
  if (r < 1) throw InvalidInput("vtev_projective_closed: r must be positive");
  return ipow(ExactInt(r + 1), g);
}

/// Coefficients alpha_1 .. alpha_{e+r+1} of
///   (1 + z + ... + z^{r+1}) * prod_{j=0}^{e-1} (j + (e-j) z).
struct AlphaList {
  int e = 0;
  int r = 0;
  std::vector<ExactInt> values;  // values[k] = alpha_{k+1}

  int size() const { return static_cast<int>(values.size()); }

  const ExactInt& at(int ell) const {
    if (ell < 1 || ell > size()) {
      throw InvalidInput("alpha index " + std::to_string(ell) + " outside [1, " + std::to_string(size()) + "]");
    }
    return values[static_cast<std::size_t>(ell - 1)];
  }
};

inline AlphaList alpha_coefficients(int e, int r) {
  if (e < 3) throw InvalidInput("alpha_coefficients: requires e >= 3");
  if (r < 1) throw InvalidInput("alpha_coefficients: requires r >= 1");
  UniPoly<ExactInt> p(std::vector<ExactInt>(static_cast<std::size_t>(r + 2), ExactInt(1)));
  for (int j = 0; j < e; ++j) p = p * UniPoly<ExactInt>({ExactInt(j), ExactInt(e - j)});
  if (p[0] != 0) throw InvariantBreach("alpha_coefficients: constant term must vanish");
  if (p.degree() != e + r + 1) throw InvariantBreach("alpha_coefficients: unexpected degree");

  AlphaList out;
  out.e = e;
  out.r = r;
  out.values.assign(p.coeffs().begin() + 1, p.coeffs().end());
  return out;
}

/// (r+2-e)^g e^{(d-n)e-g+1} prod alpha_{ell_i}, under the dimension
/// condition r(n+g-1) = (r+2-e)d + sum(ell_i - 1).
inline ExactInt deg_T_insertions_closed(int g, int d, int e, int r, const InsertionProfile& prof) {
  detail::require_basic(g, d, e, r);
  require_profile_shape(r, prof);
  if (!insertion_dimension_ok(g, d, e, r, prof)) {
    throw InvalidInput("deg_T_insertions_closed: dimension condition fails " + detail::tuple_str(g, d, e, r));
  }
  const int n = prof.size();
  if (2 * g - 2 + n <= 0) throw InvalidInput("deg_T_insertions_closed: unstable (2g-2+n <= 0)");
  const std::int64_t exponent = std::int64_t(d - n) * e - g + 1;
  if (exponent < 0) {
    throw InvalidInput("deg_T_insertions_closed: exponent (d-n)e-g+1 = " + std::to_string(exponent) +
                       " is negative");
  }
  const AlphaList alpha = alpha_coefficients(e, r);
  ExactInt value = ipow(ExactInt(r + 2 - e), g) * ipow(ExactInt(e), exponent);
  for (int l : prof.ell) value *= alpha.at(l);
  return value;
}

}  // namespace tev
