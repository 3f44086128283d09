#include "blobcalc/params.hpp"

#include "blobcalc/errors.hpp"

#include <string>

namespace blobcalc {

Params validate_params(int l, int m) {
  if (l < 3 || l % 2 == 0)
    fail("EvenL", "l must be an odd integer >= 3, got " + std::to_string(l));
  if (m < 1 || m >= l)
    fail("MOutOfRange", "m must satisfy 1 <= m < l, got m=" + std::to_string(m) +
                            " with l=" + std::to_string(l));
  int mm = m % l;
  if (mm == 0 || mm == 1 || mm == l - 1)
    fail("ForbiddenCongruence",
         "m must not be congruent to 0, 1 or -1 mod l, got m=" + std::to_string(m) +
             " with l=" + std::to_string(l));
  Params p;
  p.l = l;
  p.m = m;
  // 2 is invertible mod odd l; (l+1)/2 is its inverse.
  p.k = static_cast<int>((static_cast<long long>(m) * ((l + 1) / 2)) % l);
  return p;
}

int cartan(const Params& p, int i, int j) {
  int a = p.residue(i);
  int b = p.residue(j);
  if (a == b) return 2;
  int d = p.residue(a - b);
  if (d == 1 || d == p.l - 1) return -1;
  return 0;
}

} // namespace blobcalc
