#pragma once

#include "blobcalc/bridge.hpp"

#include <string>
#include <vector>

namespace blobcalc {

/// One (l, m, lambda) cell of a parameter sweep.
struct GridCellResult {
  int l = 0;
  int m = 0;
  Bipartition lambda;
  long long q = 0;
  long long count = 0; ///< dim b_n(lambda) = dim A_w
  bool bijection_ok = false;
  bool central_ok = false;  ///< central element degree = 2(q+1)
  bool blocks_ok = false;   ///< staircase factorization constraints
  bool wall_claim_ok = false;
  std::string note;

  bool ok() const { return bijection_ok && central_ok && blocks_ok && wall_claim_ok; }
};

/// Staircase constraints of the block factorization of d(t_lambda):
/// q+1 commuting blocks, runs with k_{i+1} = k_i + 1, j_{i+1} = j_i + 2,
/// k_1 at the wall-contact level, k_a - j_a <= l - (a + 2), and the
/// concatenation equal to d(t_lambda) as a permutation.
bool check_blocks_staircase(const Bipartition& lambda, const Params& p,
                            std::string* why = nullptr);

/// If a transposed residue sequence s_r . i^lambda (2 mu < r <= n) is
/// realizable then r is congruent to a_lambda mod l.
bool check_wall_claim(const Bipartition& lambda, const Params& p,
                      std::string* why = nullptr);

/// Exhaustive check over Std(n): the box and walk residue formulas agree,
/// and the reflection class of every walk equals its residue fibre.
bool check_residue_fibres(const Params& p, long long n, std::string* why = nullptr);

/// Run all per-cell checks for every valid lambda with |lambda| <= n_max,
/// over the given parameter frames. Results are sorted by (l, m, lambda).
std::vector<GridCellResult> run_grid(const std::vector<Params>& frames,
                                     long long n_max, int jobs = 1,
                                     int length_bound = 24);

} // namespace blobcalc
