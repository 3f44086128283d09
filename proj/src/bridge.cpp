#include "blobcalc/bridge.hpp"

#include "blobcalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace blobcalc {

std::vector<std::pair<Bipartition, DihedralElement>> f_map(const Bipartition& lambda,
                                                           const Params& p) {
  lambda_data(lambda, p); // validate
  Alcoves alc(p);
  std::set<Bipartition> shapes;
  for (const auto& w : equivalence_class(walk_of(tmax(lambda)), p))
    shapes.insert(tableau_of(w).shape());
  std::vector<std::pair<Bipartition, DihedralElement>> out;
  for (const auto& mu : shapes)
    out.emplace_back(mu, alc.alcove_of(Rational(mu.point())));
  return out;
}

LightLeaf f_mu(const Bitableau& t, const Bipartition& lambda, const Params& p) {
  LambdaData d = lambda_data(lambda, p);
  if (residue_sequence(t, p) != residue_sequence(lambda, p))
    fail("ResidueMismatch", "tableau " + t.str() +
                                " does not carry the residue sequence of lambda=(" +
                                lambda.str() + ")");
  Walk walk = walk_of(t);
  std::vector<int> contacts = wall_contacts(walk, p);
  if (static_cast<long long>(contacts.size()) != d.q + 1)
    fail("ResidueMismatch", "walk has " + std::to_string(contacts.size()) +
                                " wall contacts, expected " + std::to_string(d.q + 1));
  std::uint32_t bits = 0;
  std::vector<bool> ups;
  for (int i : contacts) {
    auto ui = static_cast<std::size_t>(i);
    int wall = walk.pos[ui];
    int away = wall > 0 ? 1 : -1; // direction pointing away from A^0
    int din = walk.pos[ui] - walk.pos[ui - 1];
    int dout = walk.pos[ui + 1] - walk.pos[ui];
    ups.push_back(din == away);
    bits = (bits << 1) | static_cast<std::uint32_t>(dout == din);
  }
  LightLeaf leaf = leaf_from_bits(d.w, bits);
  // The stroll's own Up/Down pattern must reproduce the walk's; a failure
  // here would mean the contact sequence does not follow the word of w.
  for (std::size_t i = 0; i < ups.size(); ++i) {
    bool up = leaf.steps[i] == StepKind::U0 || leaf.steps[i] == StepKind::U1;
    if (up != ups[i])
      fail("InternalError", "stroll direction disagrees with walk at contact " +
                                std::to_string(i + 1));
  }
  return leaf;
}

BijectionReport verify_bijection(const Bipartition& lambda, const Params& p,
                                 int bound) {
  LambdaData d = lambda_data(lambda, p);
  BijectionReport rep;
  rep.lambda = lambda;
  rep.w = d.w;
  if (d.w.length > bound)
    fail("BoundExceeded", "l(w) exceeds bound " + std::to_string(bound));

  auto note_mismatch = [&](const std::string& msg) {
    if (!rep.first_mismatch) rep.first_mismatch = msg;
  };

  // blob side, grouped by shape
  std::map<Bipartition, std::vector<Bitableau>> by_shape;
  for (const auto& w : equivalence_class(walk_of(tmax(lambda)), p))
    by_shape[tableau_of(w).shape()].push_back(tableau_of(w));

  // Soergel side
  auto tops = top_polynomials(d.w, bound);

  // F bijective onto the Bruhat ideal of w
  Alcoves alc(p);
  std::set<DihedralElement> image;
  bool f_ok = true;
  for (auto& [mu, tabs] : by_shape) {
    DihedralElement x = alc.alcove_of(Rational(mu.point()));
    rep.f_table.emplace_back(mu, x);
    if (!image.insert(x).second) {
      f_ok = false;
      note_mismatch("F not injective at mu=(" + mu.str() + ")");
    }
  }
  auto ideal = bruhat_ideal(d.w);
  if (image.size() != ideal.size() ||
      !std::all_of(ideal.begin(), ideal.end(),
                   [&](const DihedralElement& x) { return image.count(x) > 0; })) {
    f_ok = false;
    note_mismatch("image of F is not the Bruhat ideal of w");
  }
  rep.f_bijective = f_ok;

  // per-tableau leaf check and graded dimensions
  bool degrees_ok = true;
  Laurent graded_b;
  long long count_b = 0;
  for (auto& [mu, tabs] : by_shape) {
    DihedralElement x = alc.alcove_of(Rational(mu.point()));
    Laurent g;
    std::set<std::uint32_t> leaf_bits;
    for (const auto& t : tabs) {
      long long bdeg = tableau_degree(t, p);
      LightLeaf leaf = f_mu(t, lambda, p);
      if (leaf.top != x) {
        degrees_ok = false;
        note_mismatch("leaf top " + leaf.top.str() + " != F(mu) for t=" + t.str());
      }
      if (leaf.degree != bdeg) {
        degrees_ok = false;
        note_mismatch("degree " + std::to_string(leaf.degree) + " != " +
                      std::to_string(bdeg) + " for t=" + t.str());
      }
      if (!leaf_bits.insert(leaf.bits).second) {
        degrees_ok = false;
        note_mismatch("F_mu not injective at t=" + t.str());
      }
      g.add_term(static_cast<int>(bdeg), 1);
    }
    auto it = tops.find(x);
    long long top_count = it == tops.end() ? 0 : it->second.eval_at_one();
    if (top_count != static_cast<long long>(tabs.size())) {
      degrees_ok = false;
      note_mismatch("|Std_lambda(mu)| != |L_w(F(mu))| at mu=(" + mu.str() + ")");
    }
    graded_b += g * g;
    count_b += static_cast<long long>(tabs.size()) * static_cast<long long>(tabs.size());
  }
  rep.degree_preserving = degrees_ok;
  rep.graded_b = graded_b;
  rep.count_b = count_b;
  rep.graded_A = graded_dim_soergel(d.w, bound);
  rep.count_A = rep.graded_A.eval_at_one();
  rep.counts_equal = rep.count_b == rep.count_A;
  rep.graded_equal = rep.graded_b == rep.graded_A;
  if (!rep.counts_equal) note_mismatch("counts differ");
  if (!rep.graded_equal) note_mismatch("graded dimensions differ");
  return rep;
}

DecompositionMatrix decomposition_matrix(long long n, const Params& p) {
  DecompositionMatrix mat;
  mat.n = n;
  Alcoves alc(p);
  for (long long pt = -n; pt <= n; pt += 2) {
    mat.points.push_back(pt);
    mat.on_wall.push_back(p.is_wall(pt));
  }
  std::size_t size = mat.points.size();
  mat.entries.assign(size, std::vector<Laurent>(size));
  for (std::size_t i = 0; i < size; ++i) {
    if (mat.on_wall[i]) continue;
    DihedralElement x = alc.alcove_of(Rational(mat.points[i]));
    for (std::size_t j = 0; j < size; ++j) {
      if (mat.on_wall[j]) continue;
      if (!alc.same_orbit(mat.points[i], mat.points[j])) continue;
      DihedralElement y = alc.alcove_of(Rational(mat.points[j]));
      mat.entries[i][j] = kl_h(x, y);
    }
  }
  return mat;
}

} // namespace blobcalc
