#pragma once

#include <utility>
#include <vector>

#include "matquot/extension.hpp"
#include "matquot/matroid.hpp"

namespace matquot {

// top ->> bottom on a common ground set: every flat of bottom is a flat of
// top. Validation runs both the flat criterion and the circuit criterion
// (every circuit of top is a cycle of bottom) and fails loudly if they ever
// disagree.
struct Quotient {
  Matroid top;
  Matroid bottom;
  int nullity() const { return top.rank() - bottom.rank(); }
};

bool is_quotient(const Matroid& top, const Matroid& bottom);
Quotient make_quotient(Matroid top, Matroid bottom);

// rk_top(a) - rk_bottom(a); nonnegative and monotone in a.
int subset_nullity(const Quotient& q, ElemSet a);

// The i-th Higgs lift, 0 <= i <= nullity. L^0 = bottom, L^k = top.
// Computed from the rank function min(rk_top(a), rk_bottom(a) + i); the
// flats-family construction is exposed separately as a cross-check.
Matroid higgs_lift(const Quotient& q, int i);
Matroid higgs_lift_via_flats(const Quotient& q, int i);

struct Factorization {
  std::vector<Matroid> steps;  // N_0 = top, ..., N_k = bottom
  int nullity() const { return static_cast<int>(steps.size()) - 1; }
  bool operator==(const Factorization& other) const { return steps == other.steps; }
};

Factorization higgs_factorization(const Quotient& q);
// Throws InvalidFactorization unless consecutive steps are elementary quotients.
void validate_factorization(const Factorization& f);

// The modular cut of top whose extension-then-contraction yields bottom, for
// a quotient of nullity exactly one: the nullity-1 flats of top.
ModularCut elementary_cut(const Quotient& q);

struct Major {
  Matroid h;                      // matroid on E + K
  std::vector<int> new_elements;  // K, in extension order
  bool operator==(const Major& other) const {
    return h == other.h && new_elements == other.new_elements;
  }
};

// Checks delete/contract round trips against the quotient the major encodes.
void validate_major(const Major& h);
Matroid major_top(const Major& h);
Matroid major_bottom(const Major& h);

// The k-th Higgs lift of top + U_{k,k} ->> bottom + U_{0,k}; the k auxiliary
// elements are appended after E and labelled "ē1..ēk".
Major higgs_major(const Quotient& q);

// Kennedy's maps between factorizations and majors of a quotient.
Major major_from_factorization(const Factorization& f);
Factorization factorization_from_major(const Major& h);

// The major together with the lifted modular cuts used along the way;
// cuts[i-1] lives on the partial extension with i-1 added elements and
// produces the i-th one. Realization of majors reuses these cuts.
struct MajorAssembly {
  Major major;
  std::vector<ModularCut> cuts;
};
MajorAssembly major_from_factorization_with_cuts(const Factorization& f);

// All contract(extend(M, cut), {new}) of nullity one over all modular cuts,
// deduplicated. The coloop and loop cuts contract back to m and are skipped.
std::vector<Matroid> enumerate_elementary_quotients(const Matroid& m);

struct FlagMatroid {
  std::vector<Matroid> chain;  // M_1 ->> ... ->> M_{l+1}
};

void validate_flag(const FlagMatroid& flag);

// Concatenation of the per-step Higgs factorizations (a factorization of
// M_1 ->> M_{l+1}, in general different from its own Higgs factorization),
// together with its major.
std::pair<Factorization, Major> flag_higgs(const FlagMatroid& flag);

}  // namespace matquot
