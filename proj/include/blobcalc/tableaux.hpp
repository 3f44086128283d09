#pragma once

#include "blobcalc/dihedral.hpp"
#include "blobcalc/params.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blobcalc {

/// One-line bipartition (lambda1, lambda2) of n = lambda1 + lambda2,
/// identified with the integer point lambda1 - lambda2.
struct Bipartition {
  long long first = 0;
  long long second = 0;

  long long size() const { return first + second; }
  long long point() const { return first - second; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

  std::string str() const;
  static Bipartition parse(const std::string& text);
};

/// Standard bitableau, stored as the component (1 or 2) containing each
/// entry 1..n. Entries increase along rows automatically in this encoding,
/// so every component sequence is standard.
struct Bitableau {
  std::vector<std::uint8_t> comp;

  long long size() const { return static_cast<long long>(comp.size()); }
  Bipartition shape() const;

  friend bool operator==(const Bitableau&, const Bitableau&) = default;
  friend auto operator<=>(const Bitableau&, const Bitableau&) = default;

  std::string str() const;
  static Bitableau parse(const std::string& text);
};

/// n-walk on the Pascal triangle: positions w_0..w_n with w_0 = 0 and
/// unit steps.
struct Walk {
  std::vector<int> pos;

  long long steps() const { return static_cast<long long>(pos.size()) - 1; }
  int endpoint() const { return pos.back(); }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

/// The maximal standard bitableau t^lambda: writing mu = min(lambda),
/// odd entries below 2mu go to the second component, even ones to the
/// first, and all larger entries fill the longer component.
Bitableau tmax(const Bipartition& lambda);

/// Walk/tableau bijection: step +1 exactly for entries in component 1.
Walk walk_of(const Bitableau& t);
Bitableau tableau_of(const Walk& w);

/// Residue sequence read off the boxes: entry in column c of component 1
/// has residue k + (c-1), of component 2 has -k + (c-1), all mod l.
std::vector<int> residue_sequence(const Bitableau& t, const Params& p);
std::vector<int> residue_sequence(const Bipartition& lambda, const Params& p);

/// Residues recovered from the walk alone via
/// 2 rho(i) = i - 2 + (w_i - w_{i-1}) (w_i + m)  (mod l);
/// agrees with the box formula on every standard bitableau.
std::vector<int> walk_residues(const Walk& w, const Params& p);

std::vector<Bitableau> enumerate_std(const Bipartition& lambda, long long bound = 22);
std::vector<Bitableau> enumerate_std_n(long long n, long long bound = 22);

/// Decides whether a sequence is the residue sequence of some standard
/// bitableau and returns a witness. Walk-extension search: at each level
/// only the positions whose step residue matches can survive.
std::optional<Bitableau> is_residue_sequence(const std::vector<int>& seq,
                                             const Params& p);

/// Indices i with w_i on a wall (0 <= i <= n).
std::vector<int> wall_contacts(const Walk& w, const Params& p);

/// Reflect all positions after index i at the wall through w_i.
Walk reflect_after(const Walk& w, int i);

/// Closure of {w} under reflections at wall contacts; equals the set of
/// walks sharing w's residue sequence. Sorted.
std::vector<Walk> equivalence_class(const Walk& w, const Params& p);

/// Billiard fold of a walk into the closed fundamental alcove [-m, l-m].
Walk fold_walk(const Walk& w, const Params& p);

/// A walk has a hook at k iff w_{k-1} = w_{k+1}, i.e. entries k and k+1
/// sit in different components.
bool has_hook(const Bitableau& t, long long k);
std::optional<Bitableau> apply_transposition(const Bitableau& t, long long k);

/// Per-shape constants, valid when lambda lies strictly outside the
/// fundamental alcove and off the walls.
struct LambdaData {
  Bipartition lambda;
  long long a = 0; ///< level of the first wall contact of walk(t^lambda)
  long long q = 0; ///< n - a = q*l + r
  long long r = 0; ///< 0 < r < l
  std::vector<long long> levels; ///< wall-contact levels a + (j-1)l, j = 1..q+1
  Bipartition mu;                ///< shape of the central reflection walk
  Bitableau t_central;           ///< tableau confined to the closed fundamental alcove
  DihedralElement w;             ///< alcove element of lambda's point
};

LambdaData lambda_data(const Bipartition& lambda, const Params& p);

} // namespace blobcalc
