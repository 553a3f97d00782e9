#include "matquot/exact_matrix.hpp"

#include <algorithm>

#include "matquot/errors.hpp"

namespace matquot {

ExactMatrix::ExactMatrix(int rows, int cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(field));
}

ExactMatrix ExactMatrix::identity(int n, const Field& field) {
  ExactMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& field,
                                   const std::vector<std::vector<std::string>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  ExactMatrix m(r, c, field);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::parse(field, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_int_rows(const Field& field,
                                       const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  ExactMatrix m(r, c, field);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(field, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

ExactMatrix ExactMatrix::select_columns(ElemSet mask) const {
  return select_columns(set_elements(mask));
}

ExactMatrix ExactMatrix::select_columns(const std::vector<int>& idx) const {
  ExactMatrix m(rows_, static_cast<int>(idx.size()), field_);
  for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
    if (idx[j] < 0 || idx[j] >= cols_) throw DimensionMismatch("column index out of range");
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

ExactMatrix ExactMatrix::append_column(const std::vector<Scalar>& col) const {
  if (static_cast<int>(col.size()) != rows_) throw DimensionMismatch("column length");
  ExactMatrix m(rows_, cols_ + 1, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    m.at(i, cols_) = col[i];
  }
  return m;
}

ExactMatrix ExactMatrix::append_row(const std::vector<Scalar>& row) const {
  if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("row length");
  ExactMatrix m(rows_ + 1, cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  }
  for (int j = 0; j < cols_; ++j) m.at(rows_, j) = row[j];
  return m;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& below) const {
  if (below.cols_ != cols_ || below.field_ != field_) {
    throw DimensionMismatch("vstack shape/field");
  }
  ExactMatrix m(rows_ + below.rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  }
  for (int i = 0; i < below.rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
  }
  return m;
}

std::vector<Scalar> ExactMatrix::column(int j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Scalar> ExactMatrix::row(int i) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch();
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
  ExactMatrix m(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  }
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  return data_ == o.data_;
}

RrefResult rref(const ExactMatrix& a) {
  ExactMatrix m = a;
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int pivot = -1;
    for (int i = lead; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    }
    const Scalar inv = Scalar::one(m.field()) / m.at(lead, col);
    for (int j = col; j < m.cols(); ++j) m.at(lead, j) = m.at(lead, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      const Scalar factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        m.at(i, j) = m.at(i, j) - factor * m.at(lead, j);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const ExactMatrix& a) {
  return static_cast<int>(rref(a).pivot_columns.size());
}

int column_rank(const ExactMatrix& a, ElemSet column_mask) {
  return rank(a.select_columns(column_mask));
}

ExactMatrix kernel(const ExactMatrix& a) {
  const RrefResult r = rref(a);
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j) {
    if (!std::binary_search(r.pivot_columns.begin(), r.pivot_columns.end(), j)) {
      free_cols.push_back(j);
    }
  }
  ExactMatrix k(a.cols(), static_cast<int>(free_cols.size()), a.field());
  for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
    const int fc = free_cols[t];
    k.at(fc, t) = Scalar::one(a.field());
    for (int p = 0; p < static_cast<int>(r.pivot_columns.size()); ++p) {
      k.at(r.pivot_columns[p], t) = -r.matrix.at(p, fc);
    }
  }
  return k;
}

SolveResult solve(const ExactMatrix& a, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("rhs length");
  ExactMatrix aug = a.append_column(b);
  const RrefResult r = rref(aug);
  SolveResult out;
  // Inconsistent iff the last column is a pivot.
  for (int p : r.pivot_columns) {
    if (p == a.cols()) return out;
  }
  std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
  for (int p = 0; p < static_cast<int>(r.pivot_columns.size()); ++p) {
    x[r.pivot_columns[p]] = r.matrix.at(p, a.cols());
  }
  out.solution = std::move(x);
  out.solution_space_dim = a.cols() - static_cast<int>(r.pivot_columns.size());
  return out;
}

bool in_row_space(const ExactMatrix& a, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw DimensionMismatch("vector length");
  const int base = rank(a);
  ExactMatrix ext = a.append_row(v);
  return rank(ext) == base;
}

bool row_space_equal(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols() || a.field() != b.field()) return false;
  const RrefResult ra = rref(a), rb = rref(b);
  if (ra.pivot_columns != rb.pivot_columns) return false;
  const int r = static_cast<int>(ra.pivot_columns.size());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (!(ra.matrix.at(i, j) == rb.matrix.at(i, j))) return false;
    }
  }
  return true;
}

bool row_space_contains(const ExactMatrix& outer, const ExactMatrix& inner) {
  if (outer.cols() != inner.cols() || outer.field() != inner.field()) {
    throw DimensionMismatch("ambient spaces differ");
  }
  const int base = rank(outer);
  return rank(outer.vstack(inner)) == base;
}

ExactMatrix row_space_intersection(const std::vector<ExactMatrix>& spaces) {
  if (spaces.empty()) throw DimensionMismatch("no spaces given");
  ExactMatrix acc = rref(spaces[0]).matrix;
  acc = [&] {
    // Drop zero rows of the echelon form.
    const int r = rank(spaces[0]);
    ExactMatrix out(r, acc.cols(), acc.field());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < acc.cols(); ++j) out.at(i, j) = acc.at(i, j);
    return out;
  }();
  for (std::size_t s = 1; s < spaces.size(); ++s) {
    const ExactMatrix& b = spaces[s];
    if (b.cols() != acc.cols() || b.field() != acc.field()) {
      throw DimensionMismatch("ambient spaces differ");
    }
    // x in row(acc) ∩ row(b): x = u·acc = w·b. Solve [accᵀ | -bᵀ] z = 0.
    const int ra = acc.rows();
    ExactMatrix stacked(acc.cols(), ra + b.rows(), acc.field());
    for (int i = 0; i < acc.cols(); ++i) {
      for (int j = 0; j < ra; ++j) stacked.at(i, j) = acc.at(j, i);
      for (int j = 0; j < b.rows(); ++j) stacked.at(i, ra + j) = -b.at(j, i);
    }
    const ExactMatrix null_basis = kernel(stacked);
    ExactMatrix inter(null_basis.cols(), acc.cols(), acc.field());
    for (int t = 0; t < null_basis.cols(); ++t) {
      for (int j = 0; j < acc.cols(); ++j) {
        Scalar sum = Scalar::zero(acc.field());
        for (int u = 0; u < ra; ++u) {
          sum = sum + null_basis.at(u, t) * acc.at(u, j);
        }
        inter.at(t, j) = sum;
      }
    }
    const RrefResult red = rref(inter);
    const int r = static_cast<int>(red.pivot_columns.size());
    ExactMatrix out(r, acc.cols(), acc.field());
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < acc.cols(); ++j) out.at(i, j) = red.matrix.at(i, j);
    acc = std::move(out);
  }
  return acc;
}

Scalar determinant(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  ExactMatrix m = a;
  Scalar det = Scalar::one(a.field());
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Scalar::zero(a.field());
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det = det * m.at(col, col);
    const Scalar inv = Scalar::one(a.field()) / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Scalar factor = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
      }
    }
  }
  return det;
}

const Scalar& PluckerMap::value_of(ElemSet subset) const {
  const auto it = std::find_if(coords.begin(), coords.end(),
                               [&](const auto& p) { return p.first == subset; });
  if (it == coords.end()) throw IndexOutOfRange("subset not in Plücker map");
  return it->second;
}

namespace {

PluckerMap plucker_impl(const ExactMatrix& a, par::Policy policy) {
  const int r = a.rows(), n = a.cols();
  if (rank(a) != r) throw RankDeficient("matrix does not have full row rank");
  const std::vector<ElemSet> subsets = k_subsets(n, r);
  std::vector<Scalar> dets(subsets.size());
  par::parallel_for(
      subsets.size(),
      [&](std::size_t idx) { dets[idx] = determinant(a.select_columns(subsets[idx])); },
      policy);
  // Projective normalization by the first nonzero coordinate in lex order.
  Scalar pivot = Scalar::zero(a.field());
  for (const Scalar& d : dets) {
    if (!d.is_zero()) {
      pivot = d;
      break;
    }
  }
  PluckerMap out;
  out.r = r;
  out.n = n;
  out.coords.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    out.coords.emplace_back(subsets[i], dets[i] / pivot);
  }
  return out;
}

}  // namespace

PluckerMap plucker(const ExactMatrix& a, par::Policy policy) {
  return plucker_impl(a, policy);
}

PluckerMap plucker_serial(const ExactMatrix& a) {
  return plucker_impl(a, par::Policy::kSerial);
}

}  // namespace matquot
