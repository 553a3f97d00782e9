#include <doctest.h>

#include "matquot/errors.hpp"
#include "matquot/exact_matrix.hpp"
#include "matquot/fixtures.hpp"
#include "matquot/rng.hpp"

using namespace matquot;

namespace {

const Field Q = Field::rationals();

ExactMatrix random_int_matrix(int rows, int cols, SplitMix64& rng, int bound) {
  ExactMatrix m(rows, cols, Q);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.at(i, j) = Scalar::from_int(Q, rng.next_int(-bound, bound));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("scalar parsing and arithmetic") {
  const Scalar a = Scalar::parse(Q, "3/4");
  const Scalar b = Scalar::parse(Q, "-1");
  CHECK((a + b).to_string() == "-1/4");
  CHECK((a * b).to_string() == "-3/4");
  CHECK((a / a).to_string() == "1");
  CHECK(Scalar::parse(Q, "6/8") == a);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), ParseError);

  const Field f5 = Field::prime(5);
  CHECK(Scalar::parse(f5, "7").to_string() == "2");
  CHECK(Scalar::parse(f5, "1/2").to_string() == "3");  // 2*3 = 6 = 1 mod 5
  CHECK((Scalar::from_int(f5, 4) + Scalar::from_int(f5, 3)).to_string() == "2");
  CHECK_THROWS_AS(Field::prime(6), InvalidInputs);
  CHECK_THROWS_AS(Scalar::from_int(Q, 1) + Scalar::from_int(f5, 1), FieldMismatch);
}

TEST_CASE("rref, rank and idempotence") {
  CHECK(rank(ExactMatrix::identity(3, Q)) == 3);
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix m = random_int_matrix(3, 5, rng, 9);
    const RrefResult r1 = rref(m);
    const RrefResult r2 = rref(r1.matrix);
    CHECK(r1.matrix == r2.matrix);
    CHECK(r1.pivot_columns == r2.pivot_columns);
  }
  const Field f2 = Field::prime(2);
  ExactMatrix g(2, 3, f2);
  g.at(0, 0) = Scalar::one(f2);
  g.at(0, 2) = Scalar::one(f2);
  g.at(1, 1) = Scalar::one(f2);
  g.at(1, 2) = Scalar::one(f2);
  CHECK(rank(g) == 2);
}

TEST_CASE("kernel of the obstructed plane's linear system is trivial") {
  const ExactMatrix sys = ExactMatrix::from_int_rows(
      Q, {{-18, 271, 0}, {4173, 0, 92}, {2352, 98, 52}});
  CHECK(kernel(sys).cols() == 0);
  CHECK(rank(sys) == 3);
}

TEST_CASE("the extendable plane realizes U_{3,6}: all twenty minors nonzero") {
  const ExactMatrix a = fixtures::lamboglia_plane_extendable();
  CHECK(rank(a) == 3);
  const PluckerMap p = plucker(a);
  CHECK(p.coords.size() == 20);
  for (const auto& [subset, value] : p.coords) CHECK_FALSE(value.is_zero());
  const ExactMatrix b = fixtures::lamboglia_plane_obstructed();
  CHECK(rank(b) == 3);
  for (const auto& [subset, value] : plucker(b).coords) CHECK_FALSE(value.is_zero());
}

TEST_CASE("solve returns exact solutions with the kernel dimension") {
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix a = random_int_matrix(3, 4, rng, 7);
    std::vector<Scalar> x;
    for (int j = 0; j < 4; ++j) x.push_back(Scalar::from_int(Q, rng.next_int(-5, 5)));
    std::vector<Scalar> b(3, Scalar::zero(Q));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) b[i] = b[i] + a.at(i, j) * x[j];
    }
    const SolveResult sol = solve(a, b);
    REQUIRE(sol.solution.has_value());
    // Residual is exactly zero.
    for (int i = 0; i < 3; ++i) {
      Scalar acc = Scalar::zero(Q);
      for (int j = 0; j < 4; ++j) acc = acc + a.at(i, j) * (*sol.solution)[j];
      CHECK(acc == b[i]);
    }
    CHECK(sol.solution_space_dim == 4 - rank(a));
  }
  // Inconsistent system.
  const ExactMatrix a = ExactMatrix::from_int_rows(Q, {{1, 0}, {1, 0}});
  const SolveResult bad =
      solve(a, {Scalar::from_int(Q, 1), Scalar::from_int(Q, 2)});
  CHECK_FALSE(bad.solution.has_value());
}

TEST_CASE("row space operations") {
  const ExactMatrix id2 = ExactMatrix::identity(2, Q);
  CHECK(in_row_space(id2, {Scalar::from_int(Q, 1), Scalar::from_int(Q, 1)}));
  CHECK(row_space_equal(id2, ExactMatrix::from_int_rows(Q, {{1, 1}, {0, 3}})));
  CHECK(row_space_intersection({id2, id2}).rows() == 2);

  // Two generic 2-planes in 3-space meet in a line; verify by containment
  // both ways.
  SplitMix64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix u = random_int_matrix(2, 3, rng, 9);
    const ExactMatrix v = random_int_matrix(2, 3, rng, 9);
    if (rank(u) != 2 || rank(v) != 2 || row_space_equal(u, v)) continue;
    const ExactMatrix w = row_space_intersection({u, v});
    CHECK(w.rows() == 1);
    CHECK(row_space_contains(u, w));
    CHECK(row_space_contains(v, w));
  }
}

TEST_CASE("Plücker coordinates") {
  // 2x3 with third column (1,1).
  const ExactMatrix a = ExactMatrix::from_int_rows(Q, {{1, 0, 1}, {0, 1, 1}});
  const PluckerMap p = plucker(a);
  CHECK(p.value_of(set_from_elements({0, 1})).to_string() == "1");
  CHECK(p.value_of(set_from_elements({0, 2})).to_string() == "1");
  CHECK(p.value_of(set_from_elements({1, 2})).to_string() == "-1");

  // Square matrix: the single coordinate normalizes to 1.
  const ExactMatrix sq = ExactMatrix::from_int_rows(Q, {{2, 1}, {1, 1}});
  const PluckerMap psq = plucker(sq);
  CHECK(psq.coords.size() == 1);
  CHECK(psq.coords[0].second.to_string() == "1");

  CHECK_THROWS_AS(plucker(ExactMatrix::from_int_rows(Q, {{1, 1}, {1, 1}})),
                  RankDeficient);
}

TEST_CASE("three-term Plücker relation for r=2, n=4 on random matrices") {
  SplitMix64 rng(23);
  const Field& f = Q;
  int tested = 0;
  for (int t = 0; t < 40 && tested < 20; ++t) {
    const ExactMatrix a = random_int_matrix(2, 4, rng, 9);
    if (rank(a) != 2) continue;
    ++tested;
    const PluckerMap p = plucker(a);
    auto v = [&](int i, int j) { return p.value_of(single(i) | single(j)); };
    const Scalar lhs = v(0, 1) * v(2, 3) - v(0, 2) * v(1, 3) + v(0, 3) * v(1, 2);
    CHECK(lhs == Scalar::zero(f));
  }
  CHECK(tested == 20);
}

TEST_CASE("serial and parallel Plücker kernels agree") {
  SplitMix64 rng(31);
  const ExactMatrix a = random_int_matrix(3, 8, rng, 9);
  if (rank(a) == 3) {
    const PluckerMap p1 = plucker_serial(a);
    const PluckerMap p2 = plucker(a, par::Policy::kParallel);
    REQUIRE(p1.coords.size() == p2.coords.size());
    for (std::size_t i = 0; i < p1.coords.size(); ++i) {
      CHECK(p1.coords[i].first == p2.coords[i].first);
      CHECK(p1.coords[i].second == p2.coords[i].second);
    }
  }
}

TEST_CASE("arbitrary-precision stress: 200-bit numerators stay exact") {
  const std::string big1 = "1606938044258990275541962092341162602522202993782792835301376";
  const std::string big2 = "803469022129495137770981046170581301261101496891396417650688";
  const ExactMatrix a = ExactMatrix::from_rows(
      Q, {{big1, "1"}, {"1", big2}});
  const Scalar det = determinant(a);
  CHECK_FALSE(det.is_zero());
  const SolveResult sol = solve(a, {Scalar::parse(Q, big1), Scalar::parse(Q, "1")});
  REQUIRE(sol.solution.has_value());
  CHECK((*sol.solution)[0] == Scalar::parse(Q, "1"));
  CHECK((*sol.solution)[1].is_zero());
  // Repeated elimination keeps canonical reduced forms.
  const RrefResult r = rref(a);
  CHECK(r.pivot_columns.size() == 2);
}
