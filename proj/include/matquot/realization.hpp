#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "matquot/exact_matrix.hpp"
#include "matquot/extension.hpp"
#include "matquot/matroid.hpp"
#include "matquot/quotient.hpp"

namespace matquot {

// A matrix whose column independence pattern equals the matroid. The same
// matrix doubles as the row-space picture: its row space is the point of
// Gr(r,n) realizing the matroid, and quotient realizations nest row spaces.
// Converting between the two pictures is the identity on matrices.
struct Realization {
  Matroid matroid;
  ExactMatrix matrix;  // rank(matroid) x n
};

// True iff the column independence pattern of `a` equals `m`. For n <= 12
// every subset is checked; beyond that bases, circuits and cocircuit
// complements are checked, and `strict` requests the full check (capped at
// n <= 12).
bool check_realizes(const ExactMatrix& a, const Matroid& m, bool strict = false);

Realization make_realization(Matroid m, ExactMatrix a, bool strict = false);

// Proof that a realization does not extend along a modular cut: either some
// flat outside the cut spans the whole candidate space W, or W = 0 while the
// new element must be a non-loop.
struct ObstructionCertificate {
  std::vector<ElemSet> cut_minimal_flats;
  ExactMatrix candidate_space;  // rows span W
  std::optional<ElemSet> blocking_flat;  // absent: W = 0 with nonzero needed
};

struct ExtensionColumn {
  std::vector<Scalar> column;
  ExactMatrix extended;  // the realization of extend(M, cut); one extra row
                         // when the cut is empty (coloop)
};

using ExtendResult = std::variant<ExtensionColumn, ObstructionCertificate>;

// Deterministic decision: blocked iff a containment certificate exists;
// otherwise a valid column is found by seeded sampling from W over a growing
// integer lattice. Rationals only.
ExtendResult extend_along_cut(const Realization& r, const ModularCut& cut,
                              std::uint64_t seed);

struct QuotientRealization {
  ExactMatrix top;     // r1 x n
  ExactMatrix bottom;  // r2 x n, row space contained in row space of top
};

// Nested row-space realization of (H\K, H/K) from a realization of the major:
// top keeps the E-columns, bottom is their image under quotienting by the
// span of the K-columns.
QuotientRealization realize_quotient_from_major(const Realization& r_h,
                                                const Major& major);

// Realizes the Higgs major of q on top of the given quotient realization by
// extending column-by-column along the lifted Higgs cuts, sampling inside the
// kernel of the quotient map. The K-columns span that kernel, so the round
// trip through realize_quotient_from_major reproduces the bottom row space.
Realization realize_major_from_quotient(const QuotientRealization& qr,
                                        const Quotient& q, std::uint64_t seed);

// Row-space matrices U_0 ⊇ U_1 ⊇ ... ⊇ U_k realizing the Higgs factorization,
// with endpoints equal to the given pair.
std::vector<ExactMatrix> realize_factorization(const QuotientRealization& qr,
                                               const Quotient& q,
                                               std::uint64_t seed);

// Plücker coordinates of the flag realized by a major realization: the
// minors p_{B'} over B' ⊆ E of size r, and p_{B'' + K} over B'' ⊆ E of size
// s (K-columns appended after the B''-columns).
std::pair<PluckerMap, PluckerMap> project_flag_pluckers(const Realization& r_h,
                                                        const Major& major);

// Greedy column-by-column realization search; `order` defaults to ground-set
// order. Failure reports the blocking element and certificate; greedy failure
// is not a proof of non-realizability.
struct GreedyObstruction {
  int element;
  ObstructionCertificate certificate;
};
std::variant<Realization, GreedyObstruction> realize_matroid_greedy(
    const Matroid& m, std::uint64_t seed, std::vector<int> order = {});

}  // namespace matquot
