#pragma once

// Cohomology of Gr(2, d+1) in the Schubert basis sigma_{a,b},
// box >= a >= b >= 0 with box = d - 1, multiplied by special classes
// through the two-row Pieri rule.

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "tev/errors.hpp"
#include "tev/exact.hpp"

namespace tev {

struct TwoRowPartition {
  int a = 0;
  int b = 0;

  int size() const { return a + b; }
  friend auto operator<=>(const TwoRowPartition&, const TwoRowPartition&) = default;
};

class SchubertCombo {
 public:
  using term_map = std::map<TwoRowPartition, ExactInt>;

  explicit SchubertCombo(int box) : box_(box) {
    if (box < 0) throw InvalidInput("SchubertCombo: negative box");
  }

  /// The single class sigma_{a,b}.
  static SchubertCombo schubert(int box, int a, int b, ExactInt coeff = 1) {
    SchubertCombo c(box);
    c.add(TwoRowPartition{a, b}, std::move(coeff));
    return c;
  }

  static SchubertCombo unit(int box) { return schubert(box, 0, 0); }

  int box() const { return box_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExactInt coefficient(int a, int b) const {
    auto it = terms_.find(TwoRowPartition{a, b});
    return it == terms_.end() ? ExactInt(0) : it->second;
  }

  void add(TwoRowPartition p, ExactInt coeff) {
    if (!(box_ >= p.a && p.a >= p.b && p.b >= 0)) {
      throw InvalidInput("partition (" + std::to_string(p.a) + "," + std::to_string(p.b) +
                         ") does not fit box " + std::to_string(box_));
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SchubertCombo& operator+=(const SchubertCombo& o) {
    if (o.box_ != box_) throw InvalidInput("SchubertCombo: box mismatch");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  friend SchubertCombo operator+(SchubertCombo x, const SchubertCombo& y) { return x += y; }

  friend bool operator==(const SchubertCombo&, const SchubertCombo&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SchubertCombo& c) {
    if (c.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [p, k] : c.terms_) {
      if (!first) os << " + ";
      first = false;
      os << k << "*s(" << p.a << "," << p.b << ")";
    }
    return os;
  }

 private:
  int box_;
  term_map terms_;
};

/// Pieri rule: sigma_{a,b} * sigma_i = sum of sigma_{a',b'} with
/// a' + b' = a + b + i and a' >= a >= b' >= b, a' <= box.
inline SchubertCombo pieri_special(const SchubertCombo& c, int i) {
  if (i < 0) throw InvalidInput("pieri_special: negative index");
  SchubertCombo out(c.box());
  if (i > c.box()) return out;
  for (const auto& [p, coeff] : c.terms()) {
    const int total = p.a + p.b + i;
    for (int a2 = p.a; a2 <= c.box(); ++a2) {
      const int b2 = total - a2;
      if (b2 < p.b) break;
      if (b2 > p.a) continue;
      out.add(TwoRowPartition{a2, b2}, coeff);
    }
  }
  return out;
}

/// Degree of the zero-cycle: coefficient of the point class sigma_{box,box}.
inline ExactInt grassmann_integral(const SchubertCombo& c) { return c.coefficient(c.box(), c.box()); }

/// Geometric Tevelev degree of P^1 with n = 2d - g + 1 marked points:
///   integral over Gr(2,d+1) of sigma_1^g * sum_{i+j=2d-2-g} sigma_i sigma_j.
inline ExactInt tev_p1_schubert(int g, int d) {
  if (g < 0) throw InvalidInput("tev_p1_schubert: genus must be nonnegative");
  if (d < 1) throw InvalidInput("tev_p1_schubert: degree must be positive");
  const int n = 2 * d - g + 1;
  if (n < 0) throw InvalidInput("tev_p1_schubert: n = 2d-g+1 is negative");
  if (2 * g - 2 + n <= 0) throw InvalidInput("tev_p1_schubert: 2g-2+n must be positive");

  const int box = d - 1;
  const int weight = 2 * d - 2 - g;
  if (weight < 0) return 0;

  SchubertCombo base = SchubertCombo::unit(box);
  for (int k = 0; k < g; ++k) base = pieri_special(base, 1);

  SchubertCombo total(box);
  for (int i = 0; i <= weight; ++i) {
    const int j = weight - i;
    if (i > box || j > box) continue;  // sigma_i = 0 outside 0..box
    total += pieri_special(pieri_special(base, i), j);
  }
  return grassmann_integral(total);
}

}  // namespace tev
