#pragma once

#include "blobcalc/dihedral.hpp"
#include "blobcalc/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace blobcalc {

/// Step of a light leaf. U/D records whether the current letter lengthens
/// the top (the Bruhat stroll direction); the decoration bit records
/// whether the top absorbs the letter. Vertex content per step:
/// U0 a dot (+1), U1 a plain line (0), D0 a trivalent vertex (-1),
/// D1 a trivalent vertex capped by a dot (0).
enum class StepKind : std::uint8_t { U0, U1, D0, D1 };

inline int step_degree(StepKind s) {
  switch (s) {
    case StepKind::U0: return 1;
    case StepKind::D0: return -1;
    default: return 0;
  }
}

inline const char* step_name(StepKind s) {
  switch (s) {
    case StepKind::U0: return "U0";
    case StepKind::U1: return "U1";
    case StepKind::D0: return "D0";
    default: return "D1";
  }
}

struct LightLeaf {
  std::uint32_t bits = 0; ///< decoration of step i at bit (len - i), step 1 first
  std::vector<StepKind> steps;
  DihedralElement top;
  int degree = 0;

  std::string decoration_str() const; ///< e.g. "U1 U0 D1"

  friend bool operator==(const LightLeaf&, const LightLeaf&) = default;
};

/// Evaluate one decoration bitstring along the word of w. Bit semantics:
/// decoration 1 means the top is multiplied by the current letter.
LightLeaf leaf_from_bits(const DihedralElement& w, std::uint32_t bits);

/// All 2^{l(w)} light leaves, in bitstring order.
std::vector<LightLeaf> enumerate_leaves(const DihedralElement& w, int bound = 24);

std::vector<LightLeaf> leaves_by_top(const DihedralElement& w,
                                     const DihedralElement& x, int bound = 24);

struct DoubleLeaf {
  LightLeaf lower;
  LightLeaf upper; ///< same top as lower
  int degree = 0;
};

std::vector<DoubleLeaf> double_leaves(const DihedralElement& w, int bound = 24);

/// Degree generating polynomial of the leaves with each top.
std::map<DihedralElement, Laurent> top_polynomials(const DihedralElement& w,
                                                   int bound = 24);

/// Graded dimension of A_w: sum over tops x of g_x(v)^2 where g_x counts
/// the leaves in L_w(x) by degree.
Laurent graded_dim_soergel(const DihedralElement& w, int bound = 24);

} // namespace blobcalc
