#pragma once

#include <vector>

#include "matquot/matroid.hpp"

namespace matquot {
class ExactMatrix;
}

namespace matquot::fixtures {

// The non-Pappus matroid: rank 3 on nine points labelled 1..8 and e (index
// 8), with exactly eight 3-point lines
//   {1,2,3} {4,5,6} {1,5,7} {2,4,7} {1,6,8} {3,4,8} {2,6,e} {3,5,e}.
// The middle points 7, 8, e are not collinear. Not realizable over any field.
const Matroid& non_pappus();

// The eight 3-point lines of non_pappus(), as index sets.
std::vector<ElemSet> non_pappus_lines();

// Rank-2 matroid underlying the tropical line with rays pos(e_i, e_{i+1}) for
// even i: loopless, parallel classes {0,1}, {2,3}, ...; when n_elems is odd
// the last element is a simple point.
Matroid gamma_matroid(int n_elems);

// U_{3,n} extended by one element e lying on the lines {0,1}, {2,3}, {4,5}, …
// (the Higgs major of U_{3,n} ->> gamma_matroid(n)).
Matroid m3_matroid(int n_elems);

// Known rational realizations of U_{3,6}: the planes from the tropical Fano
// scheme examples. lamboglia_plane_extendable() extends to m3_matroid(6) by
// the column (1,0,0); lamboglia_plane_obstructed() does not extend.
ExactMatrix lamboglia_plane_extendable();
ExactMatrix lamboglia_plane_obstructed();

// The expected rank-2 row space after quotienting the extendable plane by
// (1,0,0).
ExactMatrix lamboglia_expected_bottom();

// Matroids shipped as known-non-realizable over every field.
const std::vector<Matroid>& known_non_realizable();

}  // namespace matquot::fixtures
