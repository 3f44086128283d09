#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace blobcalc {

/// Element of the Dot-Line algebra DL_n: an integer combination of
/// square-free monomials X^alpha, alpha a subset of {1..n} stored as a
/// bitmask. The defining relations X_1^2 = 0 and
/// X_i^2 = -2 X_i (X_1 + ... + X_{i-1}) keep products in this span;
/// the monomial X^alpha is homogeneous of degree 2|alpha|.
class DotLineElement {
public:
  explicit DotLineElement(int rank) : rank_(rank) {}

  static DotLineElement zero(int rank) { return DotLineElement(rank); }
  static DotLineElement unit(int rank);
  static DotLineElement generator(int rank, int i); ///< X_i, 1-based

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, long long>& terms() const { return terms_; }

  DotLineElement& add_term(std::uint32_t mask, long long c);

  friend DotLineElement operator+(const DotLineElement& a, const DotLineElement& b);
  friend DotLineElement operator*(const DotLineElement& a, const DotLineElement& b);
  friend DotLineElement operator*(long long c, const DotLineElement& a);
  friend bool operator==(const DotLineElement&, const DotLineElement&) = default;

  std::string str() const; ///< e.g. "X1*X3 - 2*X2"

private:
  int rank_ = 0;
  std::map<std::uint32_t, long long> terms_;
};

/// Rewrite an arbitrary monomial, given by its exponent vector, to normal
/// form. The canonical strategy eliminates the rightmost squared variable
/// first; `pick` may select any admissible position instead (used by the
/// confluence tests).
DotLineElement normal_form(int rank, const std::vector<int>& exponents);
DotLineElement normal_form_choosing(
    int rank, const std::vector<int>& exponents,
    const std::function<std::size_t(const std::vector<std::size_t>&)>& pick);

/// Dimension of the abstract quotient algebra, computed by Groebner-basis
/// completion of the relation ideal and counting standard monomials.
/// Shares nothing with the rewrite engine above. n <= 6.
long long dimension_oracle(int n);

/// Certifies X^beta X^{complement(alpha)} = 0 for every pair of
/// square-free monomials with beta > alpha in the degree-then-lex order,
/// and that the diagonal pair beta = alpha survives as X^(1,...,1).
/// Higher-degree domination is settled by an exhaustive check that
/// multiplying by a generator raises the square-free degree by exactly
/// one; equal-degree domination by direct reduction of one product per
/// distinct exponent pattern. n <= 10.
bool ordering_annihilation_check(int n);

} // namespace blobcalc
