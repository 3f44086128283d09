#pragma once

#include "blobcalc/laurent.hpp"
#include "blobcalc/params.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace blobcalc {

enum class Letter : std::uint8_t { S = 0, T = 1 };

inline Letter other(Letter c) { return c == Letter::S ? Letter::T : Letter::S; }
inline char letter_char(Letter c) { return c == Letter::S ? 's' : 't'; }

/// Element of the infinite dihedral group <s, t | s^2 = t^2 = e>.
/// Every element is the alternating word of its (length, first letter);
/// the identity has length 0.
struct DihedralElement {
  int length = 0;
  Letter first = Letter::S; // meaningful only when length > 0

  static DihedralElement identity() { return {}; }
  static DihedralElement word(int len, Letter f) {
    DihedralElement x;
    x.length = len;
    x.first = len > 0 ? f : Letter::S;
    return x;
  }

  bool is_identity() const { return length == 0; }

  /// i-th letter, 0-based; letters alternate starting from `first`.
  Letter letter_at(int i) const { return i % 2 == 0 ? first : other(first); }
  Letter last() const { return letter_at(length - 1); }

  std::vector<Letter> letters() const {
    std::vector<Letter> w(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) w[static_cast<std::size_t>(i)] = letter_at(i);
    return w;
  }

  std::string str() const;
  static DihedralElement parse(const std::string& text);

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    return a.length == b.length && (a.length == 0 || a.first == b.first);
  }
  friend std::strong_ordering operator<=>(const DihedralElement& a,
                                          const DihedralElement& b) {
    if (a.length != b.length) return a.length <=> b.length;
    if (a.length == 0) return std::strong_ordering::equal;
    return static_cast<int>(a.first) <=> static_cast<int>(b.first);
  }
};

/// Product in the free product of two order-2 groups: concatenate and
/// cancel at the junction. Cancellation cascades, so the result is the
/// alternating word of length |l(a) - l(b)| or l(a) + l(b).
DihedralElement operator*(const DihedralElement& a, const DihedralElement& b);

/// True iff appending c on the right lengthens x.
inline bool lengthens_right(const DihedralElement& x, Letter c) {
  return x.is_identity() || x.last() != c;
}

DihedralElement append_right(const DihedralElement& x, Letter c);

/// Bruhat order; for the infinite dihedral group x <= y iff x = y or
/// l(x) < l(y). Certified against the subword oracle in the test suite.
inline bool bruhat_leq(const DihedralElement& x, const DihedralElement& y) {
  return x == y || x.length < y.length;
}

/// Kazhdan-Lusztig polynomial h_{x,y}: v^{l(y)-l(x)} when x <= y, else 0.
inline Laurent kl_h(const DihedralElement& x, const DihedralElement& y) {
  if (!bruhat_leq(x, y)) return {};
  return v_pow(y.length - x.length);
}

/// All x <= w, ordered.
std::vector<DihedralElement> bruhat_ideal(const DihedralElement& w);

/// Exact rational, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {} // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);

  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  std::string str() const;
};

/// Alcove geometry on the real line for a fixed (l, m): walls at the
/// integers congruent to -m mod l, s and t acting as the reflections at
/// -m and l-m, and A^x = x . A^0 with A^0 = (-m, l-m).
class Alcoves {
public:
  explicit Alcoves(const Params& p) : p_(p) {}

  const Params& params() const { return p_; }

  bool on_wall(const Rational& x) const {
    return x.is_integer() && p_.is_wall(x.num);
  }

  Rational reflect(Letter c, const Rational& x) const {
    long long w = c == Letter::S ? -p_.m : p_.l - p_.m;
    return Rational(2 * w * x.den - x.num, x.den);
  }

  /// w acts by composing generator reflections, rightmost letter first.
  Rational act(const DihedralElement& x, Rational point) const {
    for (int i = x.length - 1; i >= 0; --i) point = reflect(x.letter_at(i), point);
    return point;
  }

  /// The unique x with point in A^x, found by reflecting the point back
  /// into A^0 while recording letters. Throws OnWall for wall points.
  DihedralElement alcove_of(Rational point) const;

  /// Orbit representative of an integer point in the closed interval
  /// [-m, l-m].
  long long fold_point(long long x) const;

  /// Same W-orbit test for integer points.
  bool same_orbit(long long x, long long y) const {
    return fold_point(x) == fold_point(y);
  }

private:
  Params p_;
};

} // namespace blobcalc
