#pragma once

// Small quantum cohomology of P^r: Z[h, q] / (h^{r+1} - q).

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "tev/errors.hpp"
#include "tev/exact.hpp"

namespace tev {

/// Basis element q^qexp * h^hexp with 0 <= hexp <= r.
struct QMonomial {
  int qexp = 0;
  int hexp = 0;
  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;
};

class QPolyClass {
 public:
  using term_map = std::map<QMonomial, ExactInt>;

  explicit QPolyClass(int r) : r_(r) {
    if (r < 1) throw InvalidInput("QPolyClass: r must be positive");
  }

  static QPolyClass one(int r) { return basis(r, 0, 0); }

  /// c * q^qexp * h^hexp; hexp must already be reduced into [0, r].
  static QPolyClass basis(int r, int qexp, int hexp, ExactInt c = 1) {
    QPolyClass x(r);
    x.add(QMonomial{qexp, hexp}, std::move(c));
    return x;
  }

  static QPolyClass hyperplane(int r, int power = 1) { return basis(r, 0, power); }
  static QPolyClass point(int r) { return basis(r, 0, r); }

  int r() const { return r_; }
  const term_map& terms() const { return terms_; }

  ExactInt coefficient(int qexp, int hexp) const {
    auto it = terms_.find(QMonomial{qexp, hexp});
    return it == terms_.end() ? ExactInt(0) : it->second;
  }

  void add(QMonomial m, ExactInt c) {
    if (m.qexp < 0 || m.hexp < 0 || m.hexp > r_) {
      throw InvalidInput("QPolyClass: monomial q^" + std::to_string(m.qexp) + " h^" + std::to_string(m.hexp) +
                         " outside the basis for r = " + std::to_string(r_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QPolyClass& operator+=(const QPolyClass& o) {
    if (o.r_ != r_) throw InvalidInput("QPolyClass: mismatched r");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  friend QPolyClass operator+(QPolyClass x, const QPolyClass& y) { return x += y; }

  friend bool operator==(const QPolyClass&, const QPolyClass&) = default;

  friend std::ostream& operator<<(std::ostream& os, const QPolyClass& x) {
    if (x.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : x.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c << "*q^" << m.qexp << "*h^" << m.hexp;
    }
    return os;
  }

 private:
  int r_;
  term_map terms_;
};

/// Quantum product: h^i * h^j = h^{i+j} for i+j <= r, else q * h^{i+j-r-1}.
inline QPolyClass qmul(const QPolyClass& x, const QPolyClass& y) {
  if (x.r() != y.r()) throw InvalidInput("qmul: mismatched r");
  const int r = x.r();
  QPolyClass out(r);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      int h = mx.hexp + my.hexp;
      int q = mx.qexp + my.qexp;
      if (h > r) {
        h -= r + 1;
        ++q;
      }
      out.add(QMonomial{q, h}, cx * cy);
    }
  }
  return out;
}

inline QPolyClass qpow(const QPolyClass& x, int k) {
  if (k < 0) throw InvalidInput("qpow: negative exponent");
  QPolyClass acc = QPolyClass::one(x.r());
  for (int i = 0; i < k; ++i) acc = qmul(acc, x);
  return acc;
}

/// Sum over the basis h^j of (dual class h^{r-j}) * h^j.
inline QPolyClass quantum_euler(int r) {
  if (r < 1) throw InvalidInput("quantum_euler: r must be positive");
  QPolyClass e(r);
  for (int j = 0; j <= r; ++j) e += qmul(QPolyClass::hyperplane(r, r - j), QPolyClass::hyperplane(r, j));
  return e;
}

/// Virtual Tevelev degree of P^r as the q^d P coefficient of P^{*n} * E^{*g}.
inline ExactInt vtev_projective_qh(int g, int d, int r, int n) {
  if (g < 0) throw InvalidInput("vtev_projective_qh: genus must be nonnegative");
  if (d < 1) throw InvalidInput("vtev_projective_qh: degree must be positive");
  if (r < 1) throw InvalidInput("vtev_projective_qh: r must be positive");
  if (n < 1) throw InvalidInput("vtev_projective_qh: n must be positive");
  if (2 * g - 2 + n <= 0) throw InvalidInput("vtev_projective_qh: 2g-2+n must be positive");
  const QPolyClass product = qmul(qpow(QPolyClass::point(r), n), qpow(quantum_euler(r), g));
  return product.coefficient(d, r);
}

}  // namespace tev
