#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace blobcalc {

/// Laurent polynomial in v with integer coefficients.
/// Zero coefficients are never stored, so equality is structural.
class Laurent {
public:
  using Coeff = long long;

  Laurent() = default;

  static Laurent term(int exp, Coeff c) {
    Laurent p;
    if (c != 0) p.c_[exp] = c;
    return p;
  }
  static Laurent one() { return term(0, 1); }

  bool is_zero() const { return c_.empty(); }

  Coeff coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }

  /// Sum of all coefficients.
  Coeff eval_at_one() const {
    Coeff s = 0;
    for (auto& [e, c] : c_) s += c;
    return s;
  }

  int min_degree() const; // requires nonzero
  int max_degree() const; // requires nonzero

  Laurent& add_term(int exp, Coeff c) {
    if (c == 0) return *this;
    auto it = c_.emplace(exp, 0).first;
    it->second += c;
    if (it->second == 0) c_.erase(it);
    return *this;
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) {
    a += b;
    return a;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) p.add_term(ea + eb, ca * cb);
    return p;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  const std::map<int, Coeff>& terms() const { return c_; }

  /// Ascending [exponent, coefficient] pairs, e.g. v^2 + 1 -> [[0,1],[2,1]].
  std::vector<std::pair<int, Coeff>> pairs() const {
    return {c_.begin(), c_.end()};
  }

  std::string str() const;

private:
  std::map<int, Coeff> c_;
};

inline Laurent v_pow(int e) { return Laurent::term(e, 1); }

} // namespace blobcalc
