#include "blobcalc/dihedral.hpp"

#include "blobcalc/errors.hpp"

#include <numeric>

namespace blobcalc {

std::string DihedralElement::str() const {
  if (length == 0) return "e";
  std::string s;
  s.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) s.push_back(letter_char(letter_at(i)));
  return s;
}

DihedralElement DihedralElement::parse(const std::string& text) {
  if (text == "e" || text.empty()) return identity();
  Letter first = Letter::S;
  Letter expect = Letter::S;
  for (std::size_t i = 0; i < text.size(); ++i) {
    Letter c;
    if (text[i] == 's') c = Letter::S;
    else if (text[i] == 't') c = Letter::T;
    else fail("ParseError", "invalid letter '" + std::string(1, text[i]) +
                                "' in dihedral word \"" + text + "\"");
    if (i == 0) first = c;
    else if (c != expect)
      fail("ParseError", "word \"" + text + "\" is not alternating");
    expect = other(c);
  }
  return word(static_cast<int>(text.size()), first);
}

DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  if (a.last() != b.first)
    return DihedralElement::word(a.length + b.length, a.first);
  // Junction letters agree, so cancellation cascades through
  // min(l(a), l(b)) pairs.
  int len = a.length - b.length;
  if (len > 0) return DihedralElement::word(len, a.first);
  if (len < 0) return DihedralElement::word(-len, b.letter_at(a.length));
  return DihedralElement::identity();
}

DihedralElement append_right(const DihedralElement& x, Letter c) {
  if (lengthens_right(x, c))
    return DihedralElement::word(x.length + 1, x.is_identity() ? c : x.first);
  return DihedralElement::word(x.length - 1, x.first);
}

std::vector<DihedralElement> bruhat_ideal(const DihedralElement& w) {
  std::vector<DihedralElement> out;
  out.push_back(DihedralElement::identity());
  for (int len = 1; len < w.length; ++len) {
    out.push_back(DihedralElement::word(len, Letter::S));
    out.push_back(DihedralElement::word(len, Letter::T));
  }
  if (w.length > 0) out.push_back(w);
  return out;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) fail("ParseError", "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

DihedralElement Alcoves::alcove_of(Rational point) const {
  if (on_wall(point))
    fail("OnWall", "point " + point.str() + " lies on a wall (l=" +
                       std::to_string(p_.l) + ", m=" + std::to_string(p_.m) + ")");
  const Rational lo(-p_.m), hi(p_.l - p_.m);
  // Reflect back into A^0; the letters recorded in application order
  // spell the alternating word of the alcove's element.
  int len = 0;
  Letter first = Letter::S;
  while (point < lo || point > hi) {
    Letter c = point < lo ? Letter::S : Letter::T;
    point = reflect(c, point);
    if (len == 0) first = c;
    ++len;
  }
  return DihedralElement::word(len, first);
}

long long Alcoves::fold_point(long long x) const {
  // The orbit of x is {+-(x+m)} + 2lZ shifted by -m.
  long long two_l = 2LL * p_.l;
  long long u = (x + p_.m) % two_l;
  if (u < 0) u += two_l;
  if (u > p_.l) u = two_l - u;
  return u - p_.m;
}

} // namespace blobcalc
