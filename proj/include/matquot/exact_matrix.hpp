#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matquot/element_set.hpp"
#include "matquot/parallel.hpp"
#include "matquot/scalar.hpp"

namespace matquot {

// Dense exact matrix over a single field. Immutable value semantics; all
// eliminations use deterministic pivoting (first nonzero in column order).
class ExactMatrix {
 public:
  ExactMatrix() : field_(Field::rationals()) {}
  ExactMatrix(int rows, int cols, const Field& field);
  static ExactMatrix identity(int n, const Field& field);
  static ExactMatrix from_rows(const Field& field,
                               const std::vector<std::vector<std::string>>& rows);
  static ExactMatrix from_int_rows(const Field& field,
                                   const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  ExactMatrix transpose() const;
  ExactMatrix select_columns(ElemSet mask) const;
  ExactMatrix select_columns(const std::vector<int>& idx) const;
  ExactMatrix append_column(const std::vector<Scalar>& col) const;
  ExactMatrix append_row(const std::vector<Scalar>& row) const;
  ExactMatrix vstack(const ExactMatrix& below) const;
  std::vector<Scalar> column(int j) const;
  std::vector<Scalar> row(int i) const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix matrix;
  std::vector<int> pivot_columns;
};

// Reduced row echelon form; canonical for the row space.
RrefResult rref(const ExactMatrix& a);
int rank(const ExactMatrix& a);
int column_rank(const ExactMatrix& a, ElemSet column_mask);

// Columns form a basis of {x : a x = 0}; cols() == 0 when the kernel is
// trivial. a * kernel(a) = 0 exactly.
ExactMatrix kernel(const ExactMatrix& a);

struct SolveResult {
  std::optional<std::vector<Scalar>> solution;  // a particular solution
  int solution_space_dim = 0;                   // dim ker(a), if solvable
};
SolveResult solve(const ExactMatrix& a, const std::vector<Scalar>& b);

// Row-space predicates and operations.
bool in_row_space(const ExactMatrix& a, const std::vector<Scalar>& v);
bool row_space_equal(const ExactMatrix& a, const ExactMatrix& b);
bool row_space_contains(const ExactMatrix& outer, const ExactMatrix& inner);
// Basis (as rows) of the intersection of the row spaces.
ExactMatrix row_space_intersection(const std::vector<ExactMatrix>& spaces);

Scalar determinant(const ExactMatrix& a);

// All r-subset column minors of a full-row-rank r x n matrix, in
// lexicographic order of the sorted column tuples, scaled projectively so
// the first nonzero coordinate is 1.
struct PluckerMap {
  int r = 0, n = 0;
  std::vector<std::pair<ElemSet, Scalar>> coords;  // lex order
  const Scalar& value_of(ElemSet subset) const;
};
PluckerMap plucker(const ExactMatrix& a, par::Policy policy = par::Policy::kParallel);
// Serial reference used by tests and the benchmark.
PluckerMap plucker_serial(const ExactMatrix& a);

}  // namespace matquot
