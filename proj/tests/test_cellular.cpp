#include "blobcalc/cellular.hpp"
#include "blobcalc/errors.hpp"

#include <doctest.h>

#include <map>

using namespace blobcalc;

namespace {
const Params P52 = validate_params(5, 2);
const Params P73 = validate_params(7, 3);
} // namespace

TEST_CASE("tableau degree") {
  CHECK(tableau_degree(tmax({6, 3}), P52) == 0);
  LambdaData d = lambda_data({18, 3}, P52);
  CHECK(tableau_degree(d.t_central, P52) == d.q + 1);
}

TEST_CASE("cell basis of b_n(lambda), lambda = (18,3)") {
  auto basis = basis_of({18, 3}, P52);
  CHECK(basis.size() == 12);

  // count = sum over shapes of |Std_lambda(mu)|^2
  std::map<Bipartition, long long> shape_count;
  for (const auto& datum : basis) {
    CHECK(datum.s.shape() == datum.mu);
    CHECK(datum.t.shape() == datum.mu);
    CHECK(residue_sequence(datum.s, P52) == residue_sequence(Bipartition{18, 3}, P52));
    shape_count[datum.mu]++;
  }
  long long total = 0;
  for (auto& [mu, c] : shape_count) {
    long long fibre = 0;
    for (const auto& t : enumerate_std(mu))
      if (residue_sequence(t, P52) == residue_sequence(Bipartition{18, 3}, P52))
        ++fibre;
    CHECK(c == fibre * fibre);
    total += c;
  }
  CHECK(total == 12);

  // the diagonal central datum is present with degree 2(q+1)
  LambdaData d = lambda_data({18, 3}, P52);
  bool found = false;
  for (const auto& datum : basis) {
    CHECK(datum.degree == tableau_degree(datum.s, P52) + tableau_degree(datum.t, P52));
    if (datum.mu == d.mu && datum.s == d.t_central && datum.t == d.t_central) {
      found = true;
      CHECK(datum.degree == 2 * (d.q + 1));
    }
  }
  CHECK(found);

  // degrees are symmetric in (s, t)
  for (const auto& datum : basis) {
    bool twin = false;
    for (const auto& other : basis)
      if (other.mu == datum.mu && other.s == datum.t && other.t == datum.s &&
          other.degree == datum.degree)
        twin = true;
    CHECK(twin);
  }
}

TEST_CASE("graded dimension of b_n(lambda)") {
  Laurent g = graded_dim_blob({18, 3}, P52);
  Laurent expect = Laurent::term(0, 2) + Laurent::term(2, 5) + Laurent::term(4, 4) +
                   Laurent::term(6, 1);
  CHECK(g == expect);
  CHECK(g.eval_at_one() == 12);
  CHECK(g.coeff(0) >= 1); // the identity datum (lambda, t^lambda, t^lambda)

  // q = 0: two tableaux in the class, graded dimension 1 + v^2
  CHECK(graded_dim_blob({5, 1}, P52) == Laurent::one() + v_pow(2));
}

TEST_CASE("central element degree") {
  CHECK(central_element_degree({23, 2}, P73) == 6);
  CHECK(central_element_degree({18, 3}, P52) == 6);
  CHECK(central_element_degree({5, 1}, P52) == 2); // q = 0
}

TEST_CASE("dot generators of b_n(lambda) form a Dot-Line algebra") {
  YModel m = y_model({18, 3}, P52);
  CHECK(m.rank == 3);
  CHECK(m.levels == std::vector<long long>{10, 15, 20});

  DotLineElement y1 = m.generator(1), y2 = m.generator(2);
  CHECK((y1 * y1).is_zero());
  CHECK(y2 * y2 == -2 * (y2 * y1));
  CHECK(y1 * y2 == y2 * y1);
}
