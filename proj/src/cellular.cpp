#include "blobcalc/cellular.hpp"

#include <map>

namespace blobcalc {

long long tableau_degree(const Bitableau& t, const Params& p) {
  auto d = d_of(t);
  return klr_degree(d.word, residue_sequence(t.shape(), p), p);
}

namespace {

// class walks grouped by shape, with per-tableau degrees
std::map<Bipartition, std::vector<std::pair<Bitableau, long long>>>
class_by_shape(const Bipartition& lambda, const Params& p) {
  std::map<Bipartition, std::vector<std::pair<Bitableau, long long>>> groups;
  for (const auto& w : equivalence_class(walk_of(tmax(lambda)), p)) {
    Bitableau t = tableau_of(w);
    groups[t.shape()].emplace_back(t, tableau_degree(t, p));
  }
  return groups;
}

} // namespace

std::vector<CellDatum> basis_of(const Bipartition& lambda, const Params& p) {
  lambda_data(lambda, p); // validate
  std::vector<CellDatum> out;
  for (auto& [mu, items] : class_by_shape(lambda, p))
    for (auto& [s, ds] : items)
      for (auto& [t, dt] : items) out.push_back({mu, s, t, ds + dt});
  return out;
}

Laurent graded_dim_blob(const Bipartition& lambda, const Params& p) {
  lambda_data(lambda, p); // validate
  Laurent total;
  for (auto& [mu, items] : class_by_shape(lambda, p)) {
    Laurent g;
    for (auto& [t, deg] : items) g.add_term(static_cast<int>(deg), 1);
    total += g * g;
  }
  return total;
}

long long central_element_degree(const Bipartition& lambda, const Params& p) {
  LambdaData d = lambda_data(lambda, p);
  return 2 * tableau_degree(d.t_central, p);
}

YModel y_model(const Bipartition& lambda, const Params& p) {
  LambdaData d = lambda_data(lambda, p);
  YModel m;
  m.rank = static_cast<int>(d.q + 1);
  for (long long level : d.levels) m.levels.push_back(level + 1);
  return m;
}

} // namespace blobcalc
