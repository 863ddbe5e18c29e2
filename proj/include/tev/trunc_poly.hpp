#pragma once

// Sparse multivariate polynomials truncated by per-variable degree caps.
//
// A cap c on variable x imposes x^{c+1} = 0, so the quotient ring models
// nilpotent cohomology classes (hyperplane classes on P^k, theta on a
// Jacobian). Truncation happens eagerly inside every product.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tev/errors.hpp"
#include "tev/exact.hpp"

namespace tev {

struct Variable {
  std::string name;
  std::optional<int> cap;  // highest surviving exponent; nullopt = uncapped

  friend bool operator==(const Variable&, const Variable&) = default;
};

class Roster {
 public:
  Roster() = default;
  explicit Roster(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].cap && *vars_[i].cap < 0) {
        throw InvalidInput("roster: negative cap on variable " + vars_[i].name);
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (vars_[j].name == vars_[i].name) {
          throw InvalidInput("roster: duplicate variable " + vars_[i].name);
        }
      }
    }
  }

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].name == name) return i;
    }
    throw InvalidInput("unknown variable '" + name + "'");
  }

  bool admits(const std::vector<int>& exps) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i] < 0) return false;
      if (vars_[i].cap && exps[i] > *vars_[i].cap) return false;
    }
    return true;
  }

  friend bool operator==(const Roster&, const Roster&) = default;

 private:
  std::vector<Variable> vars_;
};

using Exponents = std::vector<int>;

/// Element of Coeff[x_1..x_k] / (x_i^{cap_i+1}). Canonical: no zero
/// coefficients and no exponent above its cap, so operator== is structural.
template <class Coeff = ExactRat>
class TruncPoly {
 public:
  using coeff_type = Coeff;
  using term_map = std::map<Exponents, Coeff>;

  explicit TruncPoly(std::shared_ptr<const Roster> roster) : roster_(std::move(roster)) {
    if (!roster_) throw InvalidInput("TruncPoly: null roster");
  }

  static TruncPoly constant(std::shared_ptr<const Roster> roster, Coeff c) {
    TruncPoly p(std::move(roster));
    p.add_term(Exponents(p.roster_->size(), 0), std::move(c));
    return p;
  }

  /// c * prod x_i^{exps_i}; zero if any exponent exceeds its cap.
  static TruncPoly monomial(std::shared_ptr<const Roster> roster, Exponents exps, Coeff c = Coeff(1)) {
    TruncPoly p(std::move(roster));
    if (exps.size() != p.roster_->size()) throw InvalidInput("monomial: exponent arity mismatch");
    for (int x : exps) {
      if (x < 0) throw InvalidInput("monomial: negative exponent");
    }
    p.add_term(std::move(exps), std::move(c));
    return p;
  }

  static TruncPoly variable(std::shared_ptr<const Roster> roster, const std::string& name, int power = 1,
                            Coeff c = Coeff(1)) {
    Exponents exps(roster->size(), 0);
    exps[roster->index_of(name)] = power;
    return monomial(std::move(roster), std::move(exps), std::move(c));
  }

  const Roster& roster() const { return *roster_; }
  const std::shared_ptr<const Roster>& roster_ptr() const { return roster_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Accumulates c into the term with the given exponents, dropping it if
  /// the exponents are above a cap or the sum cancels.
  void add_term(Exponents exps, Coeff c) {
    if (c == 0 || !roster_->admits(exps)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TruncPoly& operator+=(const TruncPoly& o) {
    require_same_roster(o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TruncPoly& operator-=(const TruncPoly& o) {
    require_same_roster(o, "subtract");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  TruncPoly& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(TruncPoly a, const Coeff& s) { return a *= s; }
  friend TruncPoly operator*(const Coeff& s, TruncPoly a) { return a *= s; }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) { return trunc_mul(a, b); }

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    return *a.roster_ == *b.roster_ && a.terms_ == b.terms_;
  }

  /// Product in the truncated ring: terms above any cap are discarded.
  friend TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b) {
    a.require_same_roster(b, "multiply");
    TruncPoly out(a.roster_);
    const std::size_t k = a.roster_->size();
    Exponents exps(k);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < k; ++i) exps[i] = ea[i] + eb[i];
        out.add_term(exps, ca * cb);
      }
    }
    return out;
  }

  /// Coefficient of var^k, as a polynomial with var's exponent set to zero.
  friend TruncPoly coeff_extract(const TruncPoly& p, const std::string& var, int k) {
    if (k < 0) throw InvalidInput("coeff_extract: negative power");
    const std::size_t idx = p.roster_->index_of(var);
    TruncPoly out(p.roster_);
    for (const auto& [e, c] : p.terms_) {
      if (e[idx] != k) continue;
      Exponents rest = e;
      rest[idx] = 0;
      out.add_term(std::move(rest), c);
    }
    return out;
  }

  /// Sorted list of distinct exponents of var that carry a nonzero term.
  std::vector<int> degrees_in(const std::string& var) const {
    const std::size_t idx = roster_->index_of(var);
    std::vector<int> out;
    for (const auto& [e, c] : terms_) out.push_back(e[idx]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncPoly& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << " + ";
      first = false;
      os << to_decimal(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "*" << (*p.roster_)[i].name;
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os;
  }

 private:
  void require_same_roster(const TruncPoly& o, const char* op) const {
    if (roster_ != o.roster_ && !(*roster_ == *o.roster_)) {
      throw InvalidInput(std::string("TruncPoly: cannot ") + op + " polynomials over different rosters");
    }
  }

  std::shared_ptr<const Roster> roster_;
  term_map terms_;
};

inline std::shared_ptr<const Roster> make_roster(std::vector<Variable> vars) {
  return std::make_shared<const Roster>(std::move(vars));
}

}  // namespace tev
