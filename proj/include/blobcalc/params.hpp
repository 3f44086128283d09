#pragma once

#include <string>

namespace blobcalc {

/// Arithmetic frame (l, m, k): l an odd modulus, 1 <= m < l with
/// m not congruent to 0, 1 or -1 mod l, and k the unique residue in
/// {0,...,l-1} with 2k = m (mod l). Immutable after validation.
struct Params {
  int l = 0;
  int m = 0;
  int k = 0;

  /// Canonical representative of x mod l in [0, l).
  int residue(long long x) const {
    long long r = x % l;
    return static_cast<int>(r < 0 ? r + l : r);
  }

  /// Walls sit on the integers congruent to -m mod l.
  bool is_wall(long long x) const { return residue(x + m) == 0; }
};

Params validate_params(int l, int m);

/// Cartan pairing of two residues: 2 on the diagonal, -1 for neighbours
/// mod l, 0 otherwise.
int cartan(const Params& p, int i, int j);

} // namespace blobcalc
