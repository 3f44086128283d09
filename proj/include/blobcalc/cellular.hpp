#pragma once

#include "blobcalc/dotline.hpp"
#include "blobcalc/laurent.hpp"
#include "blobcalc/symmetric.hpp"
#include "blobcalc/tableaux.hpp"

#include <vector>

namespace blobcalc {

/// Index of a graded cellular basis element of the truncation b_n(lambda):
/// a shape mu and two standard mu-bitableaux whose residue sequences both
/// equal the one of t^lambda, with the KLR degree of the element.
struct CellDatum {
  Bipartition mu;
  Bitableau s;
  Bitableau t;
  long long degree = 0;
};

/// KLR degree contributed by one tableau: the degree of the crossing word
/// of d(t) applied to the residue sequence of t^{Shape(t)}.
long long tableau_degree(const Bitableau& t, const Params& p);

/// All cell data of b_n(lambda): pairs of equal-shape tableaux with
/// residue sequence equal to that of t^lambda.
std::vector<CellDatum> basis_of(const Bipartition& lambda, const Params& p);

/// Sum of v^{degree} over the basis; the value at v = 1 is the dimension.
Laurent graded_dim_blob(const Bipartition& lambda, const Params& p);

/// Degree of the diagonal datum (mu_lambda, t_lambda, t_lambda); equals
/// 2 (q_lambda + 1).
long long central_element_degree(const Bipartition& lambda, const Params& p);

/// The subalgebra generated by the Jucys-Murphy-style dot elements of
/// b_n(lambda) is a Dot-Line algebra on q_lambda + 1 generators, one for
/// each wall-contact level. `levels[j]` is the strand index carrying the
/// dot of generator Y_{j+1}.
struct YModel {
  int rank = 0;
  std::vector<long long> levels;

  DotLineElement generator(int j) const { return DotLineElement::generator(rank, j); }
  DotLineElement unit() const { return DotLineElement::unit(rank); }
};

YModel y_model(const Bipartition& lambda, const Params& p);

} // namespace blobcalc
