#pragma once

// Enumerativity gates for Tevelev counts of hypersurfaces.
//
// A count is certified when (i) n >= max(2g, 1), (ii) d >= 2g, and (iii)
// no boundary stratum of base-pointed maps can dominate the target. A
// stratum is indexed by (b0, b1, b2): base points away from the markings,
// simple base points at markings, double base points at markings. Its
// dimension audit compares the stratum's virtual dimension, plus an h^1
// excess allowance when too few markings remain free, against the target
// dimension.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "tev/errors.hpp"
#include "tev/exact.hpp"
#include "tev/params.hpp"

namespace tev {

/// Lower bound on d above which the virtual count is provably enumerative.
struct EnumBound {
  bool all_d = false;   // g = 0: every d
  ExactRat threshold;   // strict: certified for d > threshold

  bool admits(int d) const { return all_d || ExactRat(d) > threshold; }

  /// Smallest admitted degree.
  int min_degree() const {
    if (all_d) return 1;
    const ExactInt fl = boost::multiprecision::numerator(threshold) / boost::multiprecision::denominator(threshold);
    return std::max(1, fl.convert_to<int>() + 1);
  }
};

inline bool closed_bound_applies(int e, int r) {
  return e >= 3 && std::int64_t(r) > std::int64_t(e + 1) * (e - 2);
}

/// d > r((3g-2)(1+e) + 1 + g(r+2)) / (r - (e+1)(e-2)) for g > 0; all d for g = 0.
inline EnumBound enum_bound_closed(int g, int e, int r) {
  if (g < 0) throw InvalidInput("enum_bound_closed: genus must be nonnegative");
  if (e < 3) throw InvalidInput("enum_bound_closed: requires e >= 3");
  if (!closed_bound_applies(e, r)) {
    throw InvalidInput("enum_bound_closed: requires r > (e+1)(e-2) = " + std::to_string((e + 1) * (e - 2)) +
                       ", got r=" + std::to_string(r));
  }
  EnumBound b;
  if (g == 0) {
    b.all_d = true;
    return b;
  }
  const std::int64_t num = std::int64_t(r) * ((3 * g - 2) * std::int64_t(1 + e) + 1 + std::int64_t(g) * (r + 2));
  const std::int64_t den = r - std::int64_t(e + 1) * (e - 2);
  b.threshold = ExactRat(num) / ExactRat(den);
  return b;
}

struct StratumProfile {
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;

  /// Degree of the stable map after removing base points: d - b0 - 2 b2.
  int reduced_degree(int d) const { return d - b0 - 2 * b2; }
  bool is_trivial() const { return b0 == 0 && b1 == 0 && b2 == 0; }
  friend auto operator<=>(const StratumProfile&, const StratumProfile&) = default;
};

enum class AuditCase { A, B };

struct AuditReport {
  StratumProfile stratum;
  AuditCase audit_case = AuditCase::A;
  std::int64_t delta = 0;             // (3g-3+n) + rn
  std::int64_t target_dim = 0;        // delta - (r+1) b2
  std::int64_t vdim_stratum = 0;
  std::int64_t excess_allowance = 0;  // case B only
  bool pass = false;

  /// target - (vdim + allowance); positive iff the audit passes.
  std::int64_t slack() const { return target_dim - vdim_stratum - excess_allowance; }
};

inline AuditReport stratum_audit(int g, int d, int e, int r, int n, StratumProfile s) {
  if (g < 0 || d < 1 || e < 3 || r < 1 || n < 1) throw InvalidInput("stratum_audit: parameters out of range");
  if (s.b0 < 0 || s.b1 < 0 || s.b2 < 0) throw InvalidInput("stratum_audit: negative base-point count");
  if (s.is_trivial()) throw InvalidInput("stratum_audit: (b0,b1,b2) must not all vanish");
  if (s.b1 + s.b2 > n) throw InvalidInput("stratum_audit: b1 + b2 exceeds n");
  if (s.reduced_degree(d) < 0) throw InvalidInput("stratum_audit: d - b0 - 2 b2 is negative");

  AuditReport rep;
  rep.stratum = s;
  rep.delta = (3 * std::int64_t(g) - 3 + n) + std::int64_t(r) * n;
  rep.target_dim = rep.delta - std::int64_t(r + 1) * s.b2;
  rep.vdim_stratum = rep.delta - std::int64_t(s.b0 + 2 * s.b2) * (r + 2 - e) - s.b2 - s.b1;

  const int free_markings = n - s.b1 - s.b2;
  if (free_markings >= std::max(2 * g, 1)) {
    rep.audit_case = AuditCase::A;
    rep.pass = rep.vdim_stratum < rep.target_dim;
  } else {
    rep.audit_case = AuditCase::B;
    // h^1 bound on the spine, whose degree is d' - b1.
    rep.excess_allowance =
        std::int64_t(s.reduced_degree(d) - s.b1) * e + 1 + std::int64_t(g) * (r + 2);
    rep.pass = rep.vdim_stratum + rep.excess_allowance < rep.target_dim;
  }
  return rep;
}

/// Visits every admissible stratum (b0 <= d - 2 b2, b1 + b2 <= n, not all
/// zero) in lexicographic (b2, b1, b0) order. The visitor returns false to
/// stop early. Returns the number of strata visited.
template <class Visitor>
std::uint64_t for_each_stratum(int d, int n, Visitor&& visit) {
  std::uint64_t count = 0;
  for (int b2 = 0; b2 <= n; ++b2) {
    for (int b1 = 0; b1 + b2 <= n; ++b1) {
      for (int b0 = 0; b0 <= d - 2 * b2; ++b0) {
        const StratumProfile s{b0, b1, b2};
        if (s.is_trivial()) continue;
        ++count;
        if (!visit(s)) return count;
      }
    }
  }
  return count;
}

/// Size of the admissible-stratum set: sum over b2, b1 of max(0, d-2 b2+1), minus the trivial stratum.
inline std::uint64_t admissible_stratum_count(int d, int n) {
  std::uint64_t total = 0;
  for (int b2 = 0; b2 <= n; ++b2) {
    const std::int64_t b0_choices = std::max<std::int64_t>(0, d - 2 * b2 + 1);
    total += std::uint64_t(n - b2 + 1) * std::uint64_t(b0_choices);
  }
  return total - 1;
}

enum class CertLabel {
  none,           // not certified
  closed_bound,   // certified and d exceeds the closed-form bound
  audit_sharper,  // certified by the audit alone
};

inline const char* to_string(CertLabel l) {
  switch (l) {
    case CertLabel::closed_bound:
      return "closed-bound";
    case CertLabel::audit_sharper:
      return "audit-sharper";
    case CertLabel::none:
      break;
  }
  return "none";
}

struct CertificationReport {
  int g = 0, d = 0, e = 0, r = 0, n = 0;
  bool marking_gate = false;  // n >= max(2g, 1)
  bool degree_gate = false;   // d >= 2g
  bool audit_pass = false;
  std::uint64_t strata_audited = 0;
  std::optional<AuditReport> witness;  // lexicographically least failing stratum
  std::optional<EnumBound> closed_bound;
  bool certified = false;
  CertLabel label = CertLabel::none;
};

inline CertificationReport certify_enumerative(int g, int d, int e, int r) {
  CertificationReport rep;
  rep.g = g;
  rep.d = d;
  rep.e = e;
  rep.r = r;
  rep.n = dims_check(g, d, e, r);
  rep.marking_gate = rep.n >= std::max(2 * g, 1);
  rep.degree_gate = d >= 2 * g;

  rep.strata_audited = for_each_stratum(d, rep.n, [&](const StratumProfile& s) {
    AuditReport a = stratum_audit(g, d, e, r, rep.n, s);
    if (a.pass) return true;
    rep.witness = a;
    return false;
  });
  rep.audit_pass = !rep.witness.has_value();
  rep.certified = rep.marking_gate && rep.degree_gate && rep.audit_pass;

  if (closed_bound_applies(e, r)) rep.closed_bound = enum_bound_closed(g, e, r);
  const bool above_bound = rep.closed_bound && rep.closed_bound->admits(d);
  if (rep.certified) rep.label = above_bound ? CertLabel::closed_bound : CertLabel::audit_sharper;
  if (above_bound && !rep.certified) {
    throw InvariantBreach("certify_enumerative: d=" + std::to_string(d) +
                          " exceeds the closed-form bound but the stratum audit refuses it");
  }
  return rep;
}

}  // namespace tev
