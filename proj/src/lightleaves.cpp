#include "blobcalc/lightleaves.hpp"

#include "blobcalc/errors.hpp"

namespace blobcalc {

std::string LightLeaf::decoration_str() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out.push_back(' ');
    out += step_name(steps[i]);
  }
  return out;
}

LightLeaf leaf_from_bits(const DihedralElement& w, std::uint32_t bits) {
  LightLeaf leaf;
  leaf.bits = bits;
  leaf.steps.reserve(static_cast<std::size_t>(w.length));
  DihedralElement top = DihedralElement::identity();
  for (int i = 0; i < w.length; ++i) {
    Letter c = w.letter_at(i);
    bool up = lengthens_right(top, c);
    bool dec = (bits >> (w.length - 1 - i)) & 1;
    if (dec) top = append_right(top, c);
    StepKind s = up ? (dec ? StepKind::U1 : StepKind::U0)
                    : (dec ? StepKind::D1 : StepKind::D0);
    leaf.steps.push_back(s);
    leaf.degree += step_degree(s);
  }
  leaf.top = top;
  return leaf;
}

static void check_bound(const DihedralElement& w, int bound) {
  if (w.length > bound || w.length > 30)
    fail("BoundExceeded", "l(w)=" + std::to_string(w.length) + " exceeds bound " +
                              std::to_string(bound < 30 ? bound : 30));
}

std::vector<LightLeaf> enumerate_leaves(const DihedralElement& w, int bound) {
  check_bound(w, bound);
  std::vector<LightLeaf> out;
  out.reserve(static_cast<std::size_t>(1) << w.length);
  for (std::uint32_t bits = 0; bits < (1u << w.length); ++bits)
    out.push_back(leaf_from_bits(w, bits));
  return out;
}

std::vector<LightLeaf> leaves_by_top(const DihedralElement& w,
                                     const DihedralElement& x, int bound) {
  check_bound(w, bound);
  std::vector<LightLeaf> out;
  for (std::uint32_t bits = 0; bits < (1u << w.length); ++bits) {
    LightLeaf leaf = leaf_from_bits(w, bits);
    if (leaf.top == x) out.push_back(std::move(leaf));
  }
  return out;
}

std::vector<DoubleLeaf> double_leaves(const DihedralElement& w, int bound) {
  check_bound(w, bound);
  std::map<DihedralElement, std::vector<LightLeaf>> groups;
  for (std::uint32_t bits = 0; bits < (1u << w.length); ++bits) {
    LightLeaf leaf = leaf_from_bits(w, bits);
    groups[leaf.top].push_back(std::move(leaf));
  }
  std::vector<DoubleLeaf> out;
  for (auto& [top, leaves] : groups)
    for (const auto& lo : leaves)
      for (const auto& up : leaves)
        out.push_back({lo, up, lo.degree + up.degree});
  return out;
}

std::map<DihedralElement, Laurent> top_polynomials(const DihedralElement& w,
                                                   int bound) {
  check_bound(w, bound);
  std::map<DihedralElement, Laurent> out;
  for (std::uint32_t bits = 0; bits < (1u << w.length); ++bits) {
    LightLeaf leaf = leaf_from_bits(w, bits);
    out[leaf.top].add_term(leaf.degree, 1);
  }
  return out;
}

Laurent graded_dim_soergel(const DihedralElement& w, int bound) {
  Laurent total;
  for (auto& [top, g] : top_polynomials(w, bound)) total += g * g;
  return total;
}

} // namespace blobcalc
