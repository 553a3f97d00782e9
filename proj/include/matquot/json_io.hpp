#pragma once

#include <json.hpp>

#include "matquot/exact_matrix.hpp"
#include "matquot/extension.hpp"
#include "matquot/matroid.hpp"
#include "matquot/quotient.hpp"
#include "matquot/realization.hpp"
#include "matquot/tropical.hpp"

namespace matquot {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json flat_family_to_json(const FlatFamily& f);

Json cut_to_json(const ModularCut& c);
ModularCut cut_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

Json major_to_json(const Major& h);
Major major_from_json(const Json& j);

Json matrix_to_json(const ExactMatrix& a);
ExactMatrix matrix_from_json(const Json& j);

Json realization_to_json(const Realization& r);
Realization realization_from_json(const Json& j);

Json quotient_realization_to_json(const QuotientRealization& qr);
QuotientRealization quotient_realization_from_json(const Json& j);

Json obstruction_to_json(const ObstructionCertificate& c);
Json plucker_to_json(const PluckerMap& p);

Json tropical_point_to_json(const TropicalPoint& v);
TropicalPoint tropical_point_from_json(const Json& j);

Json ideal_to_json(const HomogeneousIdeal& ideal);
HomogeneousIdeal ideal_from_json(const Json& j);

Json inclusion_report_to_json(const QuotientInclusionReport& r);

std::vector<int> int_list_from_json(const Json& j);
Json set_to_json(ElemSet s);
ElemSet set_from_json(const Json& j);

}  // namespace matquot
