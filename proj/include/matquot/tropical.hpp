#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "matquot/exact_matrix.hpp"
#include "matquot/matroid.hpp"
#include "matquot/parallel.hpp"
#include "matquot/realization.hpp"

namespace matquot {

// A point of R^{n+1} / 1R with exact rational coordinates, stored with
// minimum coordinate zero.
struct TropicalPoint {
  std::vector<mpq_class> coords;
};

TropicalPoint make_tropical_point(std::vector<mpq_class> coords);

// Minimum over the support attained at least twice.
bool trop_set_membership(ElemSet a, const TropicalPoint& v);

// Membership in trop(M) = intersection of trop(C) over circuits C.
bool trop_matroid_membership(const Matroid& m, const TropicalPoint& v);
// Same set via all cycles; used as a cross-check.
bool trop_membership_via_cycles(const Matroid& m, const TropicalPoint& v);

// Batch membership; both policies produce identical verdicts.
std::vector<char> trop_membership_batch(const Matroid& m,
                                        const std::vector<TropicalPoint>& pts,
                                        par::Policy policy);

// Sum of weighted flat indicators along a strictly increasing chain of
// proper nonempty flats; always lands in trop(M) (asserted).
TropicalPoint flag_cone_point(const Matroid& m, const std::vector<ElemSet>& chain,
                              const std::vector<mpq_class>& weights);

// trop(m1) ⊆ trop(m2), decided combinatorially: m1 is a quotient of m2.
bool bergman_inclusion(const Matroid& m1, const Matroid& m2);

struct HomogeneousIdeal {
  struct Term {
    std::vector<int> exps;  // length n+1, entries sum to the degree
    mpq_class coef;
  };
  struct Poly {
    std::vector<Term> terms;
  };
  int n = 0;  // ambient P^n, i.e. n+1 variables
  std::vector<Poly> generators;
};

void validate_ideal(const HomogeneousIdeal& ideal);
int generator_degree(const HomogeneousIdeal::Poly& p);

// Degree-d monomials x0^a0..xn^an in graded lexicographic order with
// x0 > x1 > ... > xn (exponent vectors in descending lex order).
std::vector<std::vector<int>> monomials_graded_lex(int n, int d);
std::string monomial_label(const std::vector<int>& exps);

// Coefficient matrix of all degree-d multiples x^a * g_j; columns indexed by
// monomials_graded_lex(n, d).
ExactMatrix macaulay_matrix(const HomogeneousIdeal& ideal, int d);

// The matroid whose cycles are the supports of degree-d members of the
// ideal: the dual of the column matroid of the Macaulay matrix. Elements are
// labelled by their monomials.
Matroid matroid_of_degree_part(const HomogeneousIdeal& ideal, int d);

// The linear map of the degree-d Veronese on tropical points: coordinate u
// of the image is <u, v>.
TropicalPoint trop_veronese_apply(const TropicalPoint& v, int d);

struct NonRealizableReport {
  std::string fixture;  // name of the matched non-realizable matroid
  std::vector<int> isomorphism;
  Major major;
};
struct NotIncluded {};
struct SearchInconclusive {
  int blocking_element;
};
using RelativeResult = std::variant<QuotientRealization, NonRealizableReport,
                                    NotIncluded, SearchInconclusive>;

// Decides trop(m1) ⊆ trop(m2); when included, attempts to realize the
// quotient m2 ->> m1 over Q through its Higgs major (greedy column search,
// K-columns first). A major isomorphic to a shipped non-realizable fixture
// yields NonRealizableReport; greedy failure yields SearchInconclusive.
RelativeResult linear_relative_realizability(const Matroid& m1, const Matroid& m2,
                                             std::uint64_t seed);

struct SampleVerdict {
  TropicalPoint point;
  bool in_i_side = false;
  bool in_j_side = false;
};
struct QuotientInclusionReport {
  Matroid matroid_i;
  Matroid matroid_j;
  bool quotient_holds = false;  // M(I_d) <<- M(J_d)
  std::vector<SampleVerdict> samples;
};

// Transports each sample through the degree-d Veronese and tests membership
// in trop(M(I_d)) and trop(M(J_d)). Inclusion is implied by the quotient,
// never the converse.
QuotientInclusionReport check_quotient_implies_inclusion(
    const HomogeneousIdeal& ideal_i, const HomogeneousIdeal& ideal_j, int d,
    const std::vector<TropicalPoint>& samples);

}  // namespace matquot
