#pragma once

#include <vector>

#include "matquot/extension.hpp"
#include "matquot/matroid.hpp"
#include "matquot/parallel.hpp"

namespace matquot {

// Every labeled matroid on ground set {0,..,n-1}, canonically sorted.
// Exhaustive rank-wise basis-family search with exchange filtering; n <= 6.
std::vector<Matroid> enumerate_matroids(int n);

// Every modular cut of m, including the empty cut, found by closing each
// antichain of flats.
std::vector<ModularCut> enumerate_modular_cuts(const Matroid& m);

struct Quotient;
struct Factorization;

// Every factorization of the quotient into chains of elementary quotients.
std::vector<Factorization> enumerate_factorizations(const Quotient& q);

// Data-parallel scan of the quotient predicate over all ordered pairs of a
// matroid list. Entry i*|list|+j holds is_quotient(list[i], list[j]); both
// policies produce identical output (the serial path is the reference).
std::vector<char> quotient_pair_scan(const std::vector<Matroid>& list,
                                     par::Policy policy);

}  // namespace matquot
