#pragma once

#include "blobcalc/params.hpp"
#include "blobcalc/tableaux.hpp"

#include <vector>

namespace blobcalc {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
  explicit Permutation(long long n) : img_(static_cast<std::size_t>(n)) {
    for (long long i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
  }

  /// Product s_{w_1} s_{w_2} ... s_{w_k} of simple transpositions
  /// (rightmost factor applied first).
  static Permutation from_word(const std::vector<int>& word, long long n);

  /// From validated one-line notation.
  static Permutation from_one_line(std::vector<int> images);

  long long size() const { return static_cast<long long>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  /// sigma -> s_k sigma (swaps the values k and k+1).
  void left_multiply(int k);

  long long inversions() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> img_;
};

bool is_321_avoiding(const Permutation& p);

/// sigma . t relabels every entry i of t as sigma(i).
Bitableau apply(const Permutation& sigma, const Bitableau& t);

struct ReducedWordResult {
  std::vector<int> word; ///< 1-based generator indices, leftmost factor first
  Permutation perm;
};

/// The permutation d(t) with t = d(t) . t^{Shape(t)}, together with a
/// reduced word. Hooks are made toward the target walk, always at the
/// deepest available level; the word collects the factors right to left.
ReducedWordResult d_of(const Bitableau& t);

/// Reduced words of the commuting blocks of d(t_lambda), in word order.
/// Each block is a staircase (s_{k_1}..s_{j_1})(s_{k_2}..s_{j_2})... with
/// k_{i+1} = k_i + 1 and j_{i+1} = j_i + 2, starting at the wall-contact
/// level of its region.
std::vector<std::vector<int>> block_decomposition(const Bipartition& lambda,
                                                  const Params& p);

/// Degree of psi_{w} e(i): process the word right to left, adding
/// -cartan(i_r, i_{r+1}) and transposing the sequence at each letter.
long long klr_degree(const std::vector<int>& word, std::vector<int> seq,
                     const Params& p, std::vector<int>* final_seq = nullptr);

} // namespace blobcalc
