#pragma once

#include "blobcalc/cellular.hpp"
#include "blobcalc/lightleaves.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blobcalc {

/// The shape-to-group-element map F: mu -> x with mu's point in A^x,
/// over all shapes occurring in the residue class of lambda. Sorted by mu.
std::vector<std::pair<Bipartition, DihedralElement>> f_map(const Bipartition& lambda,
                                                           const Params& p);

/// The tableau-to-light-leaf map: reads the walk's behaviour at its
/// q_lambda + 1 wall contacts. A contact is an Up step when the incoming
/// segment moves away from the fundamental alcove and a Down step when it
/// moves toward it; the decoration bit is 1 exactly when the walk crosses
/// the wall (outgoing direction equal to incoming). Requires the residue
/// sequence of t to equal that of t^lambda.
LightLeaf f_mu(const Bitableau& t, const Bipartition& lambda, const Params& p);

struct BijectionReport {
  Bipartition lambda;
  DihedralElement w;
  long long count_b = 0;
  long long count_A = 0;
  Laurent graded_b;
  Laurent graded_A;
  std::vector<std::pair<Bipartition, DihedralElement>> f_table;
  bool f_bijective = false;
  bool counts_equal = false;
  bool graded_equal = false;
  bool degree_preserving = false;
  std::optional<std::string> first_mismatch;
  /// decoration convention in force, recorded for reproducibility
  std::string wall_convention = "U=incoming-away, bit1=crossing";

  bool ok() const {
    return f_bijective && counts_equal && graded_equal && degree_preserving;
  }
};

/// Full correspondence check between the cellular basis of b_n(lambda)
/// and the double leaves of A_w. Check failures are reported in the
/// returned structure, never thrown.
BijectionReport verify_bijection(const Bipartition& lambda, const Params& p,
                                 int bound = 24);

/// Predicted graded decomposition matrix on the weights -n..n (step 2):
/// kl_h(x, y) for same-orbit off-wall points, 0 across orbits. Wall
/// points are flagged and their rows/columns carry no entries.
struct DecompositionMatrix {
  long long n = 0;
  std::vector<long long> points;
  std::vector<bool> on_wall;
  std::vector<std::vector<Laurent>> entries; ///< entries[row][col]
};

DecompositionMatrix decomposition_matrix(long long n, const Params& p);

} // namespace blobcalc
