#include "blobcalc/bridge.hpp"
#include "blobcalc/errors.hpp"

#include <doctest.h>

#include <map>

using namespace blobcalc;

namespace {
const Params P52 = validate_params(5, 2);
const Params P73 = validate_params(7, 3);
} // namespace

TEST_CASE("F on shapes, lambda = (18,3)") {
  auto f = f_map({18, 3}, P52);
  std::map<Bipartition, DihedralElement> table(f.begin(), f.end());
  REQUIRE(table.size() == 6);
  CHECK(table[{18, 3}] == DihedralElement::parse("tst"));
  CHECK(table[{16, 5}] == DihedralElement::parse("ts"));
  CHECK(table[{13, 8}] == DihedralElement::parse("t"));
  CHECK(table[{11, 10}] == DihedralElement::identity());
  CHECK(table[{8, 13}] == DihedralElement::parse("s"));
  CHECK(table[{6, 15}] == DihedralElement::parse("st"));
}

TEST_CASE("F_mu sends t^lambda to the all-one leaf") {
  LambdaData d = lambda_data({18, 3}, P52);
  LightLeaf top_leaf = f_mu(tmax({18, 3}), {18, 3}, P52);
  CHECK(top_leaf.top == d.w);
  CHECK(top_leaf.degree == 0);
  CHECK(top_leaf.decoration_str() == "U1 U1 U1");

  LightLeaf central = f_mu(d.t_central, {18, 3}, P52);
  CHECK(central.top == DihedralElement::identity());
  CHECK(central.decoration_str() == "U0 U0 U0");
  CHECK(central.degree == static_cast<int>(d.q) + 1);

  CHECK_THROWS_AS(f_mu(tmax({17, 4}), {18, 3}, P52), DomainError);
}

TEST_CASE("bijection report golden, lambda = (18,3)") {
  BijectionReport rep = verify_bijection({18, 3}, P52);
  CHECK(rep.w == DihedralElement::parse("tst"));
  CHECK(rep.count_b == 12);
  CHECK(rep.count_A == 12);
  CHECK(rep.counts_equal);
  CHECK(rep.graded_equal);
  CHECK(rep.f_bijective);
  CHECK(rep.degree_preserving);
  CHECK(rep.ok());
  CHECK_FALSE(rep.first_mismatch.has_value());
  CHECK(rep.graded_b == rep.graded_A);
  CHECK(rep.graded_b.max_degree() == 2 * rep.w.length);
}

TEST_CASE("bijection report, lambda = (23,2) with l = 7") {
  BijectionReport rep = verify_bijection({23, 2}, P73);
  CHECK(rep.ok());
  CHECK(rep.count_b == rep.count_A);
  CHECK(rep.graded_b.max_degree() == 2 * rep.w.length);
  CHECK(rep.graded_b.coeff(2 * rep.w.length) == 1);
}

TEST_CASE("decomposition matrix") {
  DecompositionMatrix mat = decomposition_matrix(16, P52);
  std::map<long long, std::size_t> index;
  for (std::size_t i = 0; i < mat.points.size(); ++i) index[mat.points[i]] = i;

  Alcoves alc(P52);
  for (std::size_t i = 0; i < mat.points.size(); ++i) {
    if (mat.on_wall[i]) {
      CHECK(P52.is_wall(mat.points[i]));
      continue;
    }
    // diagonal is 1
    CHECK(mat.entries[i][i] == Laurent::one());
    for (std::size_t j = 0; j < mat.points.size(); ++j) {
      if (mat.on_wall[j]) continue;
      const Laurent& entry = mat.entries[i][j];
      if (!alc.same_orbit(mat.points[i], mat.points[j])) {
        CHECK(entry.is_zero()); // off-orbit entries vanish
      } else if (!entry.is_zero()) {
        // unitriangular with respect to orbit-and-length order
        DihedralElement x = alc.alcove_of(Rational(mat.points[i]));
        DihedralElement y = alc.alcove_of(Rational(mat.points[j]));
        CHECK(x.length <= y.length);
        CHECK(entry == v_pow(y.length - x.length));
      }
    }
  }
  // length difference two across the orbit of 0: points -4 and 16
  CHECK(mat.entries[index[-4]][index[16]] == v_pow(2));
  CHECK(mat.entries[index[16]][index[-4]].is_zero());
}
