#include "matquot/json_io.hpp"

#include "matquot/errors.hpp"

namespace matquot {

std::vector<int> int_list_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

Json set_to_json(ElemSet s) {
  Json arr = Json::array();
  for (int e : set_elements(s)) arr.push_back(e);
  return arr;
}

ElemSet set_from_json(const Json& j) {
  ElemSet s = 0;
  for (int e : int_list_from_json(j)) {
    if (e < 0 || e >= kMaxGroundSet) throw ParseError("element out of range");
    s |= single(e);
  }
  return s;
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.n();
  j["rank"] = m.rank();
  Json bases = Json::array();
  for (ElemSet b : m.bases()) bases.push_back(set_to_json(b));
  j["bases"] = std::move(bases);
  if (!m.labels().empty()) {
    Json labels = Json::object();
    for (int e = 0; e < m.n(); ++e) labels[std::to_string(e)] = m.label_of(e);
    j["labels"] = std::move(labels);
  }
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("bases")) {
    throw ParseError("matroid JSON needs 'n' and 'bases'");
  }
  const int n = j.at("n").get<int>();
  std::vector<ElemSet> bases;
  for (const auto& b : j.at("bases")) bases.push_back(set_from_json(b));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels.assign(n, "");
    for (const auto& [key, value] : j.at("labels").items()) {
      const int idx = std::stoi(key);
      if (idx < 0 || idx >= n) throw ParseError("label index out of range");
      labels[idx] = value.get<std::string>();
    }
  }
  Matroid m = Matroid::from_bases(n, std::move(bases), std::move(labels));
  if (j.contains("rank") && j.at("rank").get<int>() != m.rank()) {
    throw ParseError("declared rank disagrees with the bases");
  }
  return m;
}

Json flat_family_to_json(const FlatFamily& f) {
  Json j;
  j["n"] = f.n;
  Json levels = Json::array();
  for (const auto& level : f.by_rank) {
    Json arr = Json::array();
    for (ElemSet s : level) arr.push_back(set_to_json(s));
    levels.push_back(std::move(arr));
  }
  j["by_rank"] = std::move(levels);
  return j;
}

Json cut_to_json(const ModularCut& c) {
  Json j;
  j["matroid"] = matroid_to_json(c.matroid());
  Json flats = Json::array();
  for (ElemSet f : c.members()) flats.push_back(set_to_json(f));
  j["flats"] = std::move(flats);
  return j;
}

ModularCut cut_from_json(const Json& j) {
  Matroid m = matroid_from_json(j.at("matroid"));
  std::vector<ElemSet> members;
  for (const auto& f : j.at("flats")) members.push_back(set_from_json(f));
  return ModularCut(std::move(m), std::move(members));
}

Json factorization_to_json(const Factorization& f) {
  Json steps = Json::array();
  for (const Matroid& m : f.steps) steps.push_back(matroid_to_json(m));
  Json j;
  j["steps"] = std::move(steps);
  return j;
}

Factorization factorization_from_json(const Json& j) {
  Factorization f;
  for (const auto& s : j.at("steps")) f.steps.push_back(matroid_from_json(s));
  validate_factorization(f);
  return f;
}

Json major_to_json(const Major& h) {
  Json j;
  j["matroid"] = matroid_to_json(h.h);
  j["new_elements"] = h.new_elements;
  return j;
}

Major major_from_json(const Json& j) {
  Major h{matroid_from_json(j.at("matroid")),
          int_list_from_json(j.at("new_elements"))};
  validate_major(h);
  return h;
}

Json matrix_to_json(const ExactMatrix& a) {
  Json j;
  if (a.field().is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = Json{{"p", a.field().characteristic()}};
  }
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.cols(); ++k) row.push_back(a.at(i, k).to_string());
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  Field field = Field::rationals();
  const auto& fj = j.at("field");
  if (fj.is_string()) {
    if (fj.get<std::string>() != "Q") throw ParseError("unknown field tag");
  } else if (fj.is_object() && fj.contains("p")) {
    field = Field::prime(fj.at("p").get<std::int64_t>());
  } else {
    throw ParseError("field must be \"Q\" or {\"p\": prime}");
  }
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  std::vector<std::vector<std::string>> entries;
  for (const auto& row : j.at("entries")) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(v.get<std::string>());
    entries.push_back(std::move(r));
  }
  if (static_cast<int>(entries.size()) != rows ||
      (rows > 0 && static_cast<int>(entries[0].size()) != cols)) {
    throw ParseError("entry grid does not match rows/cols");
  }
  ExactMatrix m = ExactMatrix::from_rows(field, entries);
  if (m.rows() != rows || m.cols() != cols) throw ParseError("matrix shape mismatch");
  return m;
}

Json realization_to_json(const Realization& r) {
  Json j;
  j["matroid"] = matroid_to_json(r.matroid);
  j["matrix"] = matrix_to_json(r.matrix);
  return j;
}

Realization realization_from_json(const Json& j) {
  return make_realization(matroid_from_json(j.at("matroid")),
                          matrix_from_json(j.at("matrix")));
}

Json quotient_realization_to_json(const QuotientRealization& qr) {
  Json j;
  j["top"] = matrix_to_json(qr.top);
  j["bottom"] = matrix_to_json(qr.bottom);
  return j;
}

QuotientRealization quotient_realization_from_json(const Json& j) {
  return QuotientRealization{matrix_from_json(j.at("top")),
                             matrix_from_json(j.at("bottom"))};
}

Json obstruction_to_json(const ObstructionCertificate& c) {
  Json j;
  Json mins = Json::array();
  for (ElemSet f : c.cut_minimal_flats) mins.push_back(set_to_json(f));
  j["cut_minimal_flats"] = std::move(mins);
  j["candidate_space_dim"] = c.candidate_space.rows();
  j["candidate_space"] = matrix_to_json(c.candidate_space);
  if (c.blocking_flat.has_value()) {
    j["blocking_flat"] = set_to_json(*c.blocking_flat);
  } else {
    j["blocking_flat"] = nullptr;
  }
  return j;
}

Json plucker_to_json(const PluckerMap& p) {
  Json j;
  j["r"] = p.r;
  j["n"] = p.n;
  Json coords = Json::array();
  for (const auto& [subset, value] : p.coords) {
    Json c;
    c["subset"] = set_to_json(subset);
    c["value"] = value.to_string();
    coords.push_back(std::move(c));
  }
  j["coords"] = std::move(coords);
  return j;
}

Json tropical_point_to_json(const TropicalPoint& v) {
  Json coords = Json::array();
  for (const auto& c : v.coords) coords.push_back(c.get_str());
  Json j;
  j["coords"] = std::move(coords);
  return j;
}

TropicalPoint tropical_point_from_json(const Json& j) {
  std::vector<mpq_class> coords;
  for (const auto& c : j.at("coords")) {
    mpq_class q;
    if (q.set_str(c.get<std::string>(), 10) != 0) {
      throw ParseError("bad rational '" + c.get<std::string>() + "'");
    }
    q.canonicalize();
    coords.push_back(std::move(q));
  }
  return make_tropical_point(std::move(coords));
}

Json ideal_to_json(const HomogeneousIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators) {
    Json terms = Json::array();
    for (const auto& t : g.terms) {
      Json tj;
      tj["exps"] = t.exps;
      tj["coef"] = t.coef.get_str();
      terms.push_back(std::move(tj));
    }
    Json gj;
    gj["terms"] = std::move(terms);
    gens.push_back(std::move(gj));
  }
  Json j;
  j["n"] = ideal.n;
  j["generators"] = std::move(gens);
  return j;
}

HomogeneousIdeal ideal_from_json(const Json& j) {
  HomogeneousIdeal ideal;
  ideal.n = j.at("n").get<int>();
  for (const auto& gj : j.at("generators")) {
    HomogeneousIdeal::Poly poly;
    for (const auto& tj : gj.at("terms")) {
      HomogeneousIdeal::Term term;
      term.exps = int_list_from_json(tj.at("exps"));
      mpq_class q;
      if (q.set_str(tj.at("coef").get<std::string>(), 10) != 0) {
        throw ParseError("bad coefficient");
      }
      q.canonicalize();
      term.coef = std::move(q);
      poly.terms.push_back(std::move(term));
    }
    ideal.generators.push_back(std::move(poly));
  }
  validate_ideal(ideal);
  return ideal;
}

Json inclusion_report_to_json(const QuotientInclusionReport& r) {
  Json j;
  j["matroid_i"] = matroid_to_json(r.matroid_i);
  j["matroid_j"] = matroid_to_json(r.matroid_j);
  j["quotient_holds"] = r.quotient_holds;
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json sj;
    sj["point"] = tropical_point_to_json(s.point);
    sj["in_i_side"] = s.in_i_side;
    sj["in_j_side"] = s.in_j_side;
    samples.push_back(std::move(sj));
  }
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace matquot
