#pragma once

// Parameter tuples (g, d, e, r) for degree-d maps from a genus-g curve to a
// degree-e hypersurface of dimension r, with the derived marked-point count n.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tev/errors.hpp"

namespace tev {

namespace detail {

inline std::string tuple_str(int g, int d, int e, int r) {
  return "(g=" + std::to_string(g) + ", d=" + std::to_string(d) + ", e=" + std::to_string(e) +
         ", r=" + std::to_string(r) + ")";
}

inline void require_basic(int g, int d, int e, int r) {
  if (g < 0) throw InvalidInput("genus g must be nonnegative " + tuple_str(g, d, e, r));
  if (d < 1) throw InvalidInput("degree d must be positive " + tuple_str(g, d, e, r));
  if (e < 3) throw InvalidInput("hypersurface degree e must be at least 3 " + tuple_str(g, d, e, r));
  if (r < 1) throw InvalidInput("dimension r must be positive " + tuple_str(g, d, e, r));
}

}  // namespace detail

/// Number of marked points forced by r(n+g-1) = (r+2-e)d.
/// Rejects non-integral n, n < 1, and the unstable range 2g-2+n <= 0.
inline int dims_check(int g, int d, int e, int r) {
  detail::require_basic(g, d, e, r);
  const std::int64_t lhs = std::int64_t(r + 2 - e) * d;
  if (lhs % r != 0) {
    throw InvalidInput("n = (r+2-e)d/r - g + 1 is not an integer: r=" + std::to_string(r) +
                       " does not divide (r+2-e)d=" + std::to_string(lhs) + " " + detail::tuple_str(g, d, e, r));
  }
  const std::int64_t n = lhs / r - g + 1;
  if (n < 1) throw InvalidInput("n = " + std::to_string(n) + " < 1 " + detail::tuple_str(g, d, e, r));
  if (2 * g - 2 + n <= 0) {
    throw InvalidInput("unstable: 2g-2+n = " + std::to_string(2 * g - 2 + n) + " <= 0 " +
                       detail::tuple_str(g, d, e, r));
  }
  return static_cast<int>(n);
}

/// Linear-space insertions: the i-th marked point maps into a P^{ell_i}.
/// ell_i = 1 (a general line) recovers point insertions.
struct InsertionProfile {
  std::vector<int> ell;

  static InsertionProfile points(int n) { return InsertionProfile{std::vector<int>(n, 1)}; }

  int size() const { return static_cast<int>(ell.size()); }

  /// sum of (ell_i - 1), the extra dimension the insertions allow.
  std::int64_t excess() const {
    return std::accumulate(ell.begin(), ell.end(), std::int64_t{0},
                           [](std::int64_t acc, int l) { return acc + (l - 1); });
  }

  bool all_points() const {
    for (int l : ell) {
      if (l != 1) return false;
    }
    return true;
  }
};

/// r(n+g-1) = (r+2-e)d + sum(ell_i - 1), with n = |ell|.
inline bool insertion_dimension_ok(int g, int d, int e, int r, const InsertionProfile& prof) {
  const std::int64_t n = prof.size();
  return std::int64_t(r) * (n + g - 1) == std::int64_t(r + 2 - e) * d + prof.excess();
}

inline void require_profile_shape(int r, const InsertionProfile& prof) {
  if (prof.ell.empty()) throw InvalidInput("insertion profile must be nonempty");
  for (int l : prof.ell) {
    if (l < 1 || l > r + 1) {
      throw InvalidInput("insertion dimension ell=" + std::to_string(l) + " outside [1, r+1] for r=" +
                         std::to_string(r));
    }
  }
}

/// Validated (g, d, e, r, n) with t = e(d-n) - g + 1 and N = (r+2)(d-g+1).
struct HypParams {
  int g = 0;
  int d = 0;
  int e = 0;
  int r = 0;
  int n = 0;
  std::int64_t t = 0;  // rank of the twisted pushforward bundle on the Jacobian
  std::int64_t N = 0;  // rank of V^{+(r+2)}

  /// Point insertions; n is derived.
  static HypParams make(int g, int d, int e, int r) {
    const int n = dims_check(g, d, e, r);
    return finish(g, d, e, r, n);
  }

  /// Linear-space insertions; n = |ell| and the generalized dimension
  /// condition must hold.
  static HypParams for_profile(int g, int d, int e, int r, const InsertionProfile& prof) {
    detail::require_basic(g, d, e, r);
    require_profile_shape(r, prof);
    if (!insertion_dimension_ok(g, d, e, r, prof)) {
      throw InvalidInput("dimension condition r(n+g-1) = (r+2-e)d + sum(ell_i-1) fails for n=" +
                         std::to_string(prof.size()) + " " + detail::tuple_str(g, d, e, r));
    }
    const int n = prof.size();
    if (2 * g - 2 + n <= 0) throw InvalidInput("unstable: 2g-2+n <= 0 " + detail::tuple_str(g, d, e, r));
    return finish(g, d, e, r, n);
  }

 private:
  static HypParams finish(int g, int d, int e, int r, int n) {
    if (d < 2 * g) {
      throw InvalidInput("standing assumption d >= 2g fails " + detail::tuple_str(g, d, e, r));
    }
    HypParams p;
    p.g = g;
    p.d = d;
    p.e = e;
    p.r = r;
    p.n = n;
    p.t = std::int64_t(e) * (d - n) - g + 1;
    p.N = std::int64_t(r + 2) * (d - g + 1);
    if (p.t < 1) {
      throw InvalidInput("rank t = e(d-n)-g+1 = " + std::to_string(p.t) + " < 1 " + detail::tuple_str(g, d, e, r));
    }
    return p;
  }
};

}  // namespace tev
