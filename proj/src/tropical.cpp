#include "matquot/tropical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "matquot/errors.hpp"
#include "matquot/fixtures.hpp"
#include "matquot/quotient.hpp"

namespace matquot {

TropicalPoint make_tropical_point(std::vector<mpq_class> coords) {
  if (coords.empty()) throw InvalidInputs("tropical point needs coordinates");
  mpq_class mn = coords[0];
  for (const auto& c : coords) mn = std::min(mn, c);
  for (auto& c : coords) c -= mn;
  return TropicalPoint{std::move(coords)};
}

bool trop_set_membership(ElemSet a, const TropicalPoint& v) {
  if (a == 0) throw EmptySupport();
  bool have = false;
  mpq_class mn;
  int count = 0;
  for (int e : set_elements(a)) {
    if (e >= static_cast<int>(v.coords.size())) {
      throw LengthMismatch(v.coords.size(), static_cast<std::size_t>(e) + 1);
    }
    const mpq_class& c = v.coords[e];
    if (!have || c < mn) {
      mn = c;
      count = 1;
      have = true;
    } else if (c == mn) {
      ++count;
    }
  }
  return count >= 2;
}

bool trop_matroid_membership(const Matroid& m, const TropicalPoint& v) {
  if (static_cast<int>(v.coords.size()) != m.n()) {
    throw LengthMismatch(v.coords.size(), m.n());
  }
  for (ElemSet c : m.circuits()) {
    if (!trop_set_membership(c, v)) return false;
  }
  return true;
}

bool trop_membership_via_cycles(const Matroid& m, const TropicalPoint& v) {
  if (static_cast<int>(v.coords.size()) != m.n()) {
    throw LengthMismatch(v.coords.size(), m.n());
  }
  for (ElemSet c : m.cycles()) {
    if (c == 0) continue;
    if (!trop_set_membership(c, v)) return false;
  }
  return true;
}

std::vector<char> trop_membership_batch(const Matroid& m,
                                        const std::vector<TropicalPoint>& pts,
                                        par::Policy policy) {
  const auto circuits = m.circuits();
  std::vector<char> out(pts.size(), 0);
  par::parallel_for(
      pts.size(),
      [&](std::size_t i) {
        bool ok = static_cast<int>(pts[i].coords.size()) == m.n();
        for (ElemSet c : circuits) {
          if (!ok) break;
          ok = trop_set_membership(c, pts[i]);
        }
        out[i] = ok ? 1 : 0;
      },
      policy);
  return out;
}

TropicalPoint flag_cone_point(const Matroid& m, const std::vector<ElemSet>& chain,
                              const std::vector<mpq_class>& weights) {
  if (chain.size() != weights.size()) {
    throw NotAChainOfFlats("need one weight per chain member");
  }
  if (m.loops() != 0) {
    throw InvalidInputs("matroid has loops; its tropical linear space is empty");
  }
  const ElemSet ground = full_set(m.n());
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] == 0 || chain[i] == ground || !m.is_flat(chain[i])) {
      throw NotAChainOfFlats(set_to_string(chain[i]) +
                             " is not a proper nonempty flat");
    }
    if (weights[i] <= 0) throw NotAChainOfFlats("weights must be positive");
    if (i + 1 < chain.size() &&
        !(subset_of(chain[i], chain[i + 1]) && chain[i] != chain[i + 1])) {
      throw NotAChainOfFlats("chain is not strictly increasing");
    }
  }
  std::vector<mpq_class> coords(m.n(), 0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (int e : set_elements(chain[i])) coords[e] += weights[i];
  }
  TropicalPoint v = make_tropical_point(std::move(coords));
  if (!trop_matroid_membership(m, v)) {
    throw std::logic_error("flag cone point escaped the tropical linear space");
  }
  return v;
}

bool bergman_inclusion(const Matroid& m1, const Matroid& m2) {
  if (m1.n() != m2.n()) throw GroundSetMismatch(m1.n(), m2.n());
  return is_quotient(m2, m1);
}

void validate_ideal(const HomogeneousIdeal& ideal) {
  if (ideal.n < 0) throw InvalidInputs("ambient dimension must be nonnegative");
  if (ideal.generators.empty()) throw InvalidInputs("ideal needs at least one generator");
  for (const auto& g : ideal.generators) {
    if (g.terms.empty()) throw InvalidInputs("zero polynomial among the generators");
    int degree = -1;
    for (const auto& t : g.terms) {
      if (static_cast<int>(t.exps.size()) != ideal.n + 1) {
        throw InvalidInputs("exponent vector length mismatch");
      }
      int sum = 0;
      for (int e : t.exps) {
        if (e < 0) throw InvalidInputs("negative exponent");
        sum += e;
      }
      if (degree < 0) degree = sum;
      if (sum != degree) throw InvalidInputs("generator is not homogeneous");
      if (t.coef == 0) throw InvalidInputs("zero coefficient term");
    }
  }
}

int generator_degree(const HomogeneousIdeal::Poly& p) {
  int d = 0;
  for (int e : p.terms.front().exps) d += e;
  return d;
}

std::vector<std::vector<int>> monomials_graded_lex(int n, int d) {
  // Exponent vectors of total degree d, descending lexicographic order.
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n + 1, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

std::string monomial_label(const std::vector<int>& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

ExactMatrix macaulay_matrix(const HomogeneousIdeal& ideal, int d) {
  validate_ideal(ideal);
  const int n = ideal.n;
  int max_deg = 0;
  for (const auto& g : ideal.generators) max_deg = std::max(max_deg, generator_degree(g));
  if (d < max_deg) throw DegreeTooSmall(d, max_deg);
  const auto mons = monomials_graded_lex(n, d);
  if (mons.size() > static_cast<std::size_t>(kMaxGroundSet)) {
    throw TooManyMonomials(std::to_string(mons.size()) + " degree-" +
                           std::to_string(d) + " monomials exceed 63");
  }
  std::map<std::vector<int>, int> column_of;
  for (std::size_t j = 0; j < mons.size(); ++j) column_of[mons[j]] = static_cast<int>(j);

  std::vector<std::vector<Scalar>> rows;
  const Field f = Field::rationals();
  for (const auto& g : ideal.generators) {
    const int gd = generator_degree(g);
    for (const auto& shift : monomials_graded_lex(n, d - gd)) {
      std::vector<Scalar> row(mons.size(), Scalar::zero(f));
      for (const auto& t : g.terms) {
        std::vector<int> exps(n + 1);
        for (int i = 0; i <= n; ++i) exps[i] = t.exps[i] + shift[i];
        row[column_of.at(exps)] = Scalar::from_mpq(t.coef);
      }
      rows.push_back(std::move(row));
    }
  }
  ExactMatrix b(static_cast<int>(rows.size()), static_cast<int>(mons.size()), f);
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) b.at(i, j) = rows[i][j];
  }
  return b;
}

namespace {

// Bases of the column matroid of a matrix, found by exchange search from one
// echelon basis; only actual bases are visited.
std::vector<ElemSet> column_matroid_bases(const ExactMatrix& a) {
  const RrefResult r = rref(a);
  const int rk = static_cast<int>(r.pivot_columns.size());
  ElemSet start = 0;
  for (int p : r.pivot_columns) start |= single(p);
  std::vector<ElemSet> queue{start};
  std::vector<ElemSet> seen{start};
  auto known = [&](ElemSet s) {
    return std::binary_search(seen.begin(), seen.end(), s);
  };
  while (!queue.empty()) {
    const ElemSet b = queue.back();
    queue.pop_back();
    for (int x : set_elements(b)) {
      for (int y = 0; y < a.cols(); ++y) {
        if (contains(b, y)) continue;
        const ElemSet cand = (b & ~single(x)) | single(y);
        if (known(cand)) continue;
        if (column_rank(a, cand) == rk) {
          seen.insert(std::lower_bound(seen.begin(), seen.end(), cand), cand);
          queue.push_back(cand);
        }
      }
    }
  }
  return seen;
}

}  // namespace

Matroid matroid_of_degree_part(const HomogeneousIdeal& ideal, int d) {
  const ExactMatrix b = macaulay_matrix(ideal, d);
  const auto mons = monomials_graded_lex(ideal.n, d);
  std::vector<std::string> labels;
  for (const auto& u : mons) labels.push_back(monomial_label(u));
  const Matroid column = Matroid::trusted(b.cols(), column_matroid_bases(b));
  return column.dual().with_labels(std::move(labels));
}

TropicalPoint trop_veronese_apply(const TropicalPoint& v, int d) {
  const int n = static_cast<int>(v.coords.size()) - 1;
  const auto mons = monomials_graded_lex(n, d);
  if (mons.size() > static_cast<std::size_t>(kMaxGroundSet)) {
    throw TooManyMonomials(std::to_string(mons.size()) + " monomials exceed 63");
  }
  std::vector<mpq_class> out;
  out.reserve(mons.size());
  for (const auto& u : mons) {
    mpq_class dot = 0;
    for (int i = 0; i <= n; ++i) dot += u[i] * v.coords[i];
    out.push_back(dot);
  }
  return make_tropical_point(std::move(out));
}

RelativeResult linear_relative_realizability(const Matroid& m1, const Matroid& m2,
                                             std::uint64_t seed) {
  if (m1.n() != m2.n()) throw GroundSetMismatch(m1.n(), m2.n());
  if (!bergman_inclusion(m1, m2)) return NotIncluded{};
  const Quotient q = make_quotient(m2, m1);
  Major major = higgs_major(q);
  for (const Matroid& bad : fixtures::known_non_realizable()) {
    if (auto perm = find_isomorphism(major.h, bad)) {
      std::string name = "non-Pappus";
      return NonRealizableReport{std::move(name), std::move(*perm), std::move(major)};
    }
  }
  // Greedy search, auxiliary columns first: constraints that tie the new
  // elements to existing lines are then satisfied by construction instead of
  // by luck.
  std::vector<int> order = major.new_elements;
  const ElemSet k_mask = set_from_elements(major.new_elements);
  for (int e = 0; e < major.h.n(); ++e) {
    if (!contains(k_mask, e)) order.push_back(e);
  }
  auto found = realize_matroid_greedy(major.h, seed, std::move(order));
  if (std::holds_alternative<GreedyObstruction>(found)) {
    return SearchInconclusive{std::get<GreedyObstruction>(found).element};
  }
  return realize_quotient_from_major(std::get<Realization>(std::move(found)), major);
}

QuotientInclusionReport check_quotient_implies_inclusion(
    const HomogeneousIdeal& ideal_i, const HomogeneousIdeal& ideal_j, int d,
    const std::vector<TropicalPoint>& samples) {
  const Matroid mi = matroid_of_degree_part(ideal_i, d);
  const Matroid mj = matroid_of_degree_part(ideal_j, d);
  QuotientInclusionReport report{mi, mj, false, {}};
  // M(I_d) <<- M(J_d): the I-side matroid is a quotient of the J-side one.
  report.quotient_holds = is_quotient(mj, mi);
  for (const TropicalPoint& v : samples) {
    const TropicalPoint w = trop_veronese_apply(v, d);
    SampleVerdict verdict{v, false, false};
    verdict.in_i_side = trop_matroid_membership(mi, w);
    verdict.in_j_side = trop_matroid_membership(mj, w);
    report.samples.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace matquot
