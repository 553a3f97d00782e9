#include "matquot/fixtures.hpp"

#include <algorithm>

#include "matquot/errors.hpp"
#include "matquot/exact_matrix.hpp"
#include "matquot/quotient.hpp"

namespace matquot::fixtures {

std::vector<ElemSet> non_pappus_lines() {
  // 0-indexed: points 1..8 are 0..7, point e is 8.
  const std::vector<std::vector<int>> lines = {
      {0, 1, 2}, {3, 4, 5}, {0, 4, 6}, {1, 3, 6},
      {0, 5, 7}, {2, 3, 7}, {1, 5, 8}, {2, 4, 8},
  };
  std::vector<ElemSet> out;
  for (const auto& l : lines) out.push_back(set_from_elements(l));
  return out;
}

const Matroid& non_pappus() {
  static const Matroid p = [] {
    const std::vector<ElemSet> lines = non_pappus_lines();
    std::vector<ElemSet> bases;
    for (ElemSet t : k_subsets(9, 3)) {
      if (std::find(lines.begin(), lines.end(), t) == lines.end()) {
        bases.push_back(t);
      }
    }
    std::vector<std::string> labels = {"1", "2", "3", "4", "5", "6", "7", "8", "e"};
    return Matroid::from_bases(9, std::move(bases), std::move(labels));
  }();
  return p;
}

Matroid gamma_matroid(int n_elems) {
  if (n_elems < 2) throw InvalidInputs("gamma matroid needs at least 2 elements");
  auto parallel_class = [&](int x) { return x / 2; };  // odd leftover is its own class
  std::vector<ElemSet> bases;
  for (int x = 0; x < n_elems; ++x) {
    for (int y = x + 1; y < n_elems; ++y) {
      if (parallel_class(x) != parallel_class(y)) {
        bases.push_back(single(x) | single(y));
      }
    }
  }
  return Matroid::from_bases(n_elems, std::move(bases));
}

Matroid m3_matroid(int n_elems) {
  const Quotient q = make_quotient(Matroid::uniform(3, n_elems), gamma_matroid(n_elems));
  return higgs_major(q).h;
}

ExactMatrix lamboglia_plane_extendable() {
  return ExactMatrix::from_int_rows(Field::rationals(), {
      {1, 3, 0, 1, 5, 7},
      {0, 0, 1, 3, -1, -1},
      {1, 4, -1, -3, 0, 0},
  });
}

ExactMatrix lamboglia_plane_obstructed() {
  return ExactMatrix::from_int_rows(Field::rationals(), {
      {0, -271, -92, 0, -13, -54},
      {0, -18, -7, -1, 0, -4},
      {-1, 12293, 4173, 0, 588, 2450},
  });
}

ExactMatrix lamboglia_expected_bottom() {
  return ExactMatrix::from_int_rows(Field::rationals(), {
      {0, 0, 1, 3, -1, -1},
      {1, 4, -1, -3, 0, 0},
  });
}

const std::vector<Matroid>& known_non_realizable() {
  static const std::vector<Matroid> list = {non_pappus()};
  return list;
}

}  // namespace matquot::fixtures
