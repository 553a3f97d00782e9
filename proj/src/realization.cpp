#include "matquot/realization.hpp"

#include <algorithm>
#include <stdexcept>

#include "matquot/errors.hpp"
#include "matquot/rng.hpp"

namespace matquot {

namespace {

// Column span of the columns F of a, represented as a row-space matrix in
// the column space K^r.
ExactMatrix column_span(const ExactMatrix& a, ElemSet f) {
  return a.select_columns(f).transpose();
}

bool in_column_span(const ExactMatrix& a, ElemSet f, const std::vector<Scalar>& v) {
  return in_row_space(column_span(a, f), v);
}

std::vector<ElemSet> maximal_sets(const std::vector<ElemSet>& sets) {
  std::vector<ElemSet> out;
  for (ElemSet f : sets) {
    bool maximal = true;
    for (ElemSet g : sets) {
      if (g != f && subset_of(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

}  // namespace

bool check_realizes(const ExactMatrix& a, const Matroid& m, bool strict) {
  if (a.rows() != m.rank() || a.cols() != m.n()) {
    throw DimensionMismatch("matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", matroid needs " +
                            std::to_string(m.rank()) + "x" + std::to_string(m.n()));
  }
  const int n = m.n();
  if (strict && n > 12) {
    throw TooLarge("full subset verification is capped at 12 elements");
  }
  if (n <= 12) {
    for (ElemSet s = 0; s <= full_set(n); ++s) {
      if (column_rank(a, s) != m.rank_of(s)) return false;
      if (s == full_set(n)) break;
    }
    return true;
  }
  for (ElemSet b : m.bases()) {
    if (column_rank(a, b) != m.rank()) return false;
  }
  for (ElemSet c : m.circuits()) {
    if (column_rank(a, c) != set_size(c) - 1) return false;
  }
  // Cocircuit complements are hyperplanes; their columns must not span.
  for (ElemSet d : m.dual().circuits()) {
    const ElemSet hyperplane = full_set(n) & ~d;
    if (column_rank(a, hyperplane) != m.rank() - 1) return false;
  }
  return true;
}

Realization make_realization(Matroid m, ExactMatrix a, bool strict) {
  if (!check_realizes(a, m, strict)) {
    throw InvalidRealization("independence patterns disagree");
  }
  return Realization{std::move(m), std::move(a)};
}

namespace {

// Shared sampling core: picks a column v in the row space of `space`
// (coordinates of K^r) such that v avoids the column spans of all flats in
// `avoid`. The valid set is the complement of finitely many proper subspaces,
// so seeded sampling over a doubling integer box terminates.
std::optional<std::vector<Scalar>> sample_avoiding(
    const ExactMatrix& a, const ExactMatrix& space,
    const std::vector<ElemSet>& avoid, std::uint64_t seed, int max_rounds) {
  const int dim = space.rows();
  if (dim == 0) return std::nullopt;
  SplitMix64 rng(seed);
  std::int64_t box = 4;
  for (int round = 0; round < max_rounds; ++round, box *= 2) {
    for (int attempt = 0; attempt < 24; ++attempt) {
      std::vector<Scalar> coeff;
      bool all_zero = true;
      for (int t = 0; t < dim; ++t) {
        const std::int64_t c = rng.next_int(-box, box);
        if (c != 0) all_zero = false;
        coeff.push_back(Scalar::from_int(a.field(), c));
      }
      if (all_zero) continue;
      std::vector<Scalar> v(a.rows(), Scalar::zero(a.field()));
      for (int t = 0; t < dim; ++t) {
        for (int i = 0; i < a.rows(); ++i) {
          v[i] = v[i] + coeff[t] * space.at(t, i);
        }
      }
      bool ok = true;
      for (ElemSet f : avoid) {
        if (in_column_span(a, f, v)) {
          ok = false;
          break;
        }
      }
      if (ok) return v;
    }
  }
  return std::nullopt;
}

struct CutGeometry {
  ExactMatrix candidate_space;            // rows span W
  std::vector<ElemSet> minimal_members;
  std::vector<ElemSet> maximal_non_members;
  std::optional<ElemSet> blocking_flat;
  bool needs_nonzero = true;
};

CutGeometry analyze_cut(const ExactMatrix& a, const Matroid& m,
                        const ModularCut& cut) {
  CutGeometry g{ExactMatrix(0, a.rows(), a.field()), {}, {}, std::nullopt, true};
  g.minimal_members = cut.minimal_members();
  const auto all_flats = m.flats().all();
  std::vector<ElemSet> non_members;
  for (ElemSet f : all_flats) {
    if (!cut.contains_member(f)) non_members.push_back(f);
  }
  g.maximal_non_members = maximal_sets(non_members);
  g.needs_nonzero = !cut.contains_member(m.closure(0));
  std::vector<ExactMatrix> member_spans;
  for (ElemSet f : g.minimal_members) member_spans.push_back(column_span(a, f));
  if (member_spans.empty()) {
    g.candidate_space = ExactMatrix::identity(a.rows(), a.field());
  } else {
    g.candidate_space = row_space_intersection(member_spans);
  }
  if (g.candidate_space.rows() > 0) {
    for (ElemSet f : g.maximal_non_members) {
      if (row_space_contains(column_span(a, f), g.candidate_space)) {
        g.blocking_flat = f;
        break;
      }
    }
  }
  return g;
}

}  // namespace

ExtendResult extend_along_cut(const Realization& r, const ModularCut& cut,
                              std::uint64_t seed) {
  if (!r.matrix.field().is_rational()) throw FiniteFieldUnsupported();
  if (!(cut.matroid() == r.matroid)) {
    throw InvalidInputs("cut and realization refer to different matroids");
  }
  if (!check_realizes(r.matrix, r.matroid)) {
    throw InvalidRealization("matrix does not realize the matroid");
  }
  const ExactMatrix& a = r.matrix;
  const Matroid& m = r.matroid;

  if (cut.members().empty()) {
    // Coloop: one extra dimension, new column is the fresh unit vector.
    std::vector<Scalar> zero_row(a.cols(), Scalar::zero(a.field()));
    ExactMatrix lifted = a.append_row(zero_row);
    std::vector<Scalar> col(a.rows() + 1, Scalar::zero(a.field()));
    col.back() = Scalar::one(a.field());
    ExactMatrix extended = lifted.append_column(col);
    return ExtensionColumn{std::move(col), std::move(extended)};
  }

  const CutGeometry g = analyze_cut(a, m, cut);
  if (!g.needs_nonzero) {
    // Every flat is in the cut; the new element is a loop.
    std::vector<Scalar> col(a.rows(), Scalar::zero(a.field()));
    ExactMatrix extended = a.append_column(col);
    return ExtensionColumn{std::move(col), std::move(extended)};
  }
  if (g.candidate_space.rows() == 0 || g.blocking_flat.has_value()) {
    return ObstructionCertificate{g.minimal_members, g.candidate_space,
                                  g.blocking_flat};
  }
  const auto v = sample_avoiding(a, g.candidate_space, g.maximal_non_members,
                                 seed, 40);
  if (!v) {
    throw std::logic_error("sampling failed although no obstruction exists");
  }
  ExactMatrix extended = a.append_column(*v);
  const Matroid target = extend(m, cut, "");
  if (!check_realizes(extended, target)) {
    throw std::logic_error("sampled extension fails verification");
  }
  return ExtensionColumn{*v, std::move(extended)};
}

QuotientRealization realize_quotient_from_major(const Realization& r_h,
                                                const Major& major) {
  if (!(r_h.matroid == major.h)) {
    throw InvalidRealization("realization is not of the major's matroid");
  }
  if (!check_realizes(r_h.matrix, major.h)) {
    throw InvalidRealization("matrix does not realize the major");
  }
  const ElemSet k_mask = set_from_elements(major.new_elements);
  const ElemSet e_mask = full_set(major.h.n()) & ~k_mask;
  const ExactMatrix a_e = r_h.matrix.select_columns(e_mask);
  const ExactMatrix v = r_h.matrix.select_columns(k_mask);
  // Rows of the projection = basis of the left null space of the K-columns.
  const ExactMatrix proj = kernel(v.transpose()).transpose();
  const ExactMatrix bottom = proj * a_e;
  const Matroid top_m = major_top(major);
  const Matroid bottom_m = major_bottom(major);
  if (!check_realizes(a_e, top_m) || !check_realizes(bottom, bottom_m)) {
    throw InvalidRealization("projected pair does not realize the quotient");
  }
  if (!row_space_contains(a_e, bottom)) {
    throw std::logic_error("projected bottom escapes the top row space");
  }
  return QuotientRealization{a_e, bottom};
}

namespace {

void validate_quotient_realization(const QuotientRealization& qr,
                                   const Quotient& q) {
  if (!check_realizes(qr.top, q.top)) {
    throw NotARealizationOfQ("top matrix does not realize the top matroid");
  }
  if (!check_realizes(qr.bottom, q.bottom)) {
    throw NotARealizationOfQ("bottom matrix does not realize the bottom matroid");
  }
  if (!row_space_contains(qr.top, qr.bottom)) {
    throw NotARealizationOfQ("row spaces are not nested");
  }
}

// Coefficient matrix c with c * top = bottom; unique because top has full
// row rank.
ExactMatrix quotient_map_matrix(const QuotientRealization& qr) {
  const ExactMatrix at = qr.top.transpose();
  ExactMatrix c(qr.bottom.rows(), qr.top.rows(), qr.top.field());
  for (int i = 0; i < qr.bottom.rows(); ++i) {
    const SolveResult sol = solve(at, qr.bottom.row(i));
    if (!sol.solution) throw NotARealizationOfQ("bottom row outside top row space");
    for (int j = 0; j < qr.top.rows(); ++j) c.at(i, j) = (*sol.solution)[j];
  }
  return c;
}

}  // namespace

Realization realize_major_from_quotient(const QuotientRealization& qr,
                                        const Quotient& q, std::uint64_t seed) {
  if (!qr.top.field().is_rational()) throw FiniteFieldUnsupported();
  validate_quotient_realization(qr, q);
  const int k = q.nullity();
  if (k == 0) return Realization{q.top, qr.top};

  const ExactMatrix c = quotient_map_matrix(qr);
  const ExactMatrix u = kernel(c);  // r x k, columns span the kernel
  if (u.cols() != k) throw std::logic_error("kernel dimension mismatch");
  const ExactMatrix u_rows = u.transpose();

  const MajorAssembly assembly =
      major_from_factorization_with_cuts(higgs_factorization(q));
  ExactMatrix a = qr.top;
  SplitMix64 seeds(seed);
  for (int i = 0; i < k; ++i) {
    const ModularCut& cut = assembly.cuts[i];
    const Matroid& x = cut.matroid();
    const CutGeometry g = analyze_cut(a, x, cut);
    if (g.candidate_space.rows() == 0 || g.blocking_flat.has_value()) {
      throw std::logic_error("Higgs cut blocked on a genuine quotient realization");
    }
    // Restrict the sampling space to the kernel of the quotient map so that
    // the assembled K-columns span it exactly.
    const ExactMatrix restricted =
        row_space_intersection({g.candidate_space, u_rows});
    if (restricted.rows() == 0) {
      throw std::logic_error("kernel misses the Higgs cut candidate space");
    }
    const auto v = sample_avoiding(a, restricted, g.maximal_non_members,
                                   seeds.next(), 40);
    if (!v) throw std::logic_error("sampling failed inside the kernel");
    a = a.append_column(*v);
  }
  const Major expected = higgs_major(q);
  if (!check_realizes(a, expected.h)) {
    throw std::logic_error("assembled matrix does not realize the Higgs major");
  }
  // Round trip: quotienting by the K-columns must reproduce the bottom space.
  const QuotientRealization back =
      realize_quotient_from_major(Realization{expected.h, a}, expected);
  if (!row_space_equal(back.bottom, qr.bottom)) {
    throw std::logic_error("major realization does not project back to the bottom");
  }
  return Realization{expected.h, a};
}

std::vector<ExactMatrix> realize_factorization(const QuotientRealization& qr,
                                               const Quotient& q,
                                               std::uint64_t seed) {
  const int k = q.nullity();
  const Realization major_r = realize_major_from_quotient(qr, q, seed);
  const Factorization fact = higgs_factorization(q);
  const int n = q.top.n();
  std::vector<ExactMatrix> spaces;
  spaces.push_back(qr.top);
  for (int i = 1; i <= k; ++i) {
    ElemSet added = 0;
    for (int t = 0; t < i; ++t) added |= single(n + t);
    const ExactMatrix v = major_r.matrix.select_columns(added);
    const ExactMatrix proj = kernel(v.transpose()).transpose();
    ExactMatrix space = proj * qr.top;
    if (!check_realizes(space, fact.steps[i])) {
      throw std::logic_error("intermediate space does not realize the Higgs lift");
    }
    if (!row_space_contains(spaces.back(), space)) {
      throw std::logic_error("factorization spaces are not nested");
    }
    if (i == k) {
      if (!row_space_equal(space, qr.bottom)) {
        throw std::logic_error("final space differs from the bottom space");
      }
      space = qr.bottom;
    }
    spaces.push_back(std::move(space));
  }
  return spaces;
}

std::pair<PluckerMap, PluckerMap> project_flag_pluckers(const Realization& r_h,
                                                        const Major& major) {
  if (!(r_h.matroid == major.h)) {
    throw InvalidRealization("realization is not of the major's matroid");
  }
  if (!check_realizes(r_h.matrix, major.h)) {
    throw InvalidRealization("matrix does not realize the major");
  }
  const ElemSet k_mask = set_from_elements(major.new_elements);
  const std::vector<int> e_indices = set_elements(full_set(major.h.n()) & ~k_mask);
  const int n = static_cast<int>(e_indices.size());
  const Matroid top_m = major_top(major);
  const Matroid bottom_m = major_bottom(major);
  const int r = top_m.rank(), s = bottom_m.rank();

  const ExactMatrix a_e = r_h.matrix.select_columns(e_indices);
  PluckerMap top = plucker(a_e);

  PluckerMap bottom;
  bottom.r = s;
  bottom.n = n;
  std::vector<Scalar> dets;
  const std::vector<ElemSet> subsets = k_subsets(n, s);
  for (ElemSet b2 : subsets) {
    std::vector<int> cols;
    for (int e : set_elements(b2)) cols.push_back(e_indices[e]);
    for (int e : major.new_elements) cols.push_back(e);
    dets.push_back(determinant(r_h.matrix.select_columns(cols)));
  }
  Scalar pivot = Scalar::zero(a_e.field());
  for (const Scalar& d : dets) {
    if (!d.is_zero()) {
      pivot = d;
      break;
    }
  }
  if (pivot.is_zero()) throw InvalidRealization("all flag minors vanish");
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    bottom.coords.emplace_back(subsets[i], dets[i] / pivot);
  }

  // Nonvanishing patterns must match the basis families.
  for (const auto& [subset, value] : top.coords) {
    if (value.is_zero() == top_m.has_basis(subset)) {
      throw InvalidRealization("top Plücker pattern disagrees with the bases");
    }
  }
  for (const auto& [subset, value] : bottom.coords) {
    if (value.is_zero() == bottom_m.has_basis(subset)) {
      throw InvalidRealization("bottom Plücker pattern disagrees with the bases");
    }
  }
  (void)r;
  return {std::move(top), std::move(bottom)};
}

std::variant<Realization, GreedyObstruction> realize_matroid_greedy(
    const Matroid& m, std::uint64_t seed, std::vector<int> order) {
  if (order.empty()) {
    for (int e = 0; e < m.n(); ++e) order.push_back(e);
  }
  if (static_cast<int>(order.size()) != m.n()) {
    throw InvalidInputs("element order must cover the ground set");
  }
  SplitMix64 seeds(seed);
  ElemSet placed = 0;
  std::vector<std::vector<Scalar>> columns(m.n());
  int current_rows = 0;
  const Field f = Field::rationals();

  for (int e : order) {
    const std::vector<int> placed_sorted = set_elements(placed);
    // Restriction of m to the placed elements, and the modular cut describing
    // how the next element attaches to it.
    const Matroid restriction = m.deleted(full_set(m.n()) & ~placed);
    std::vector<ElemSet> members;
    for (ElemSet fl : restriction.flats().all()) {
      ElemSet orig = 0;
      for (int idx : set_elements(fl)) orig |= single(placed_sorted[idx]);
      if (m.rank_of(orig | single(e)) == m.rank_of(orig)) members.push_back(fl);
    }
    const ModularCut cut(restriction, std::move(members));
    ExactMatrix a(current_rows, restriction.n(), f);
    for (int j = 0; j < restriction.n(); ++j) {
      for (int i = 0; i < current_rows; ++i) {
        a.at(i, j) = columns[placed_sorted[j]][i];
      }
    }
    ExtendResult res = extend_along_cut(Realization{restriction, a}, cut, seeds.next());
    if (std::holds_alternative<ObstructionCertificate>(res)) {
      return GreedyObstruction{e, std::get<ObstructionCertificate>(std::move(res))};
    }
    ExtensionColumn col = std::get<ExtensionColumn>(std::move(res));
    if (static_cast<int>(col.column.size()) > current_rows) {
      // Coloop step grew the space by one dimension; pad earlier columns.
      for (int x : placed_sorted) columns[x].push_back(Scalar::zero(f));
      current_rows = static_cast<int>(col.column.size());
    }
    columns[e] = std::move(col.column);
    placed |= single(e);
  }
  ExactMatrix full(current_rows, m.n(), f);
  for (int j = 0; j < m.n(); ++j) {
    for (int i = 0; i < current_rows; ++i) full.at(i, j) = columns[j][i];
  }
  if (current_rows != m.rank() || !check_realizes(full, m)) {
    throw std::logic_error("greedy assembly failed verification");
  }
  return Realization{m, full};
}

}  // namespace matquot
