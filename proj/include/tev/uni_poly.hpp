#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "tev/errors.hpp"
#include "tev/exact.hpp"

namespace tev {

/// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <class Coeff = ExactInt>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Coeff operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

  /// If the polynomial is c*x^k, returns k.
  std::optional<std::size_t> monomial_degree() const {
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (found) return std::nullopt;
      found = k;
    }
    return found;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
    return UniPoly(std::move(v));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(v));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
      if (p.coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << to_decimal(p.coeffs_[k]);
      if (k > 0) os << "*x^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

}  // namespace tev
