#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "matquot/enumeration.hpp"
#include "matquot/errors.hpp"
#include "matquot/fixtures.hpp"
#include "matquot/json_io.hpp"
#include "matquot/parallel.hpp"
#include "matquot/quotient.hpp"
#include "matquot/realization.hpp"
#include "matquot/rng.hpp"
#include "matquot/tropical.hpp"

namespace {

using matquot::Json;

// Exit codes: 0 success, 1 negative verdict, 2 obstruction or certificate,
// 3 usage error, 4 inconclusive.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kCertificate = 2;
constexpr int kUsage = 3;
constexpr int kInconclusive = 4;

std::string g_out_path;
// Bound to --seed/--strict; globals so that the value-capturing subcommand
// callbacks observe what the parser wrote.
std::uint64_t seed = 0;
bool strict = false;

void emit(const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (!g_out_path.empty()) {
    std::ofstream f(g_out_path);
    if (!f) throw matquot::InvalidInputs("cannot open output file " + g_out_path);
    f << text;
  }
  std::cout << text;
}

Json load_json(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    return Json::parse(arg);
  }
  if (arg == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return Json::parse(buf.str());
  }
  std::ifstream f(arg);
  if (!f) throw matquot::InvalidInputs("cannot open " + arg);
  Json j;
  f >> j;
  return j;
}

// Accepts "uniform:r,n" or a JSON path/inline document.
matquot::Matroid load_matroid(const std::string& arg) {
  if (arg.rfind("uniform:", 0) == 0) {
    const std::string spec = arg.substr(8);
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
      throw matquot::InvalidInputs("expected uniform:r,n");
    }
    const int r = std::stoi(spec.substr(0, comma));
    const int n = std::stoi(spec.substr(comma + 1));
    return matquot::Matroid::uniform(r, n);
  }
  return matquot::matroid_from_json(load_json(arg));
}

matquot::ElemSet parse_element_list(const std::string& text) {
  matquot::ElemSet s = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    s |= matquot::single(std::stoi(tok));
  }
  return s;
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    mpq_class q;
    if (q.set_str(tok, 10) != 0) throw matquot::ParseError("bad rational '" + tok + "'");
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

matquot::HomogeneousIdeal standard_line_linear_ideal() {
  matquot::HomogeneousIdeal ideal;
  ideal.n = 2;
  matquot::HomogeneousIdeal::Poly g;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> e(3, 0);
    e[i] = 1;
    g.terms.push_back({e, mpq_class(1)});
  }
  ideal.generators.push_back(std::move(g));
  return ideal;
}

matquot::HomogeneousIdeal standard_line_power_ideal(int p) {
  matquot::HomogeneousIdeal ideal;
  ideal.n = 2;
  matquot::HomogeneousIdeal::Poly g;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> e(3, 0);
    e[i] = p;
    g.terms.push_back({e, mpq_class(1)});
  }
  ideal.generators.push_back(std::move(g));
  return ideal;
}

std::vector<matquot::TropicalPoint> sample_line_points(int count, std::uint64_t seed) {
  matquot::SplitMix64 rng(seed);
  std::vector<matquot::TropicalPoint> out;
  for (int t = 0; t < count; ++t) {
    const int ray = static_cast<int>(rng.next() % 3);
    std::vector<mpq_class> coords(3, 0);
    coords[ray] = mpq_class(rng.next_int(1, 1000));
    out.push_back(matquot::make_tropical_point(std::move(coords)));
  }
  return out;
}

int run_relative(const matquot::Matroid& m1, const matquot::Matroid& m2,
                 std::uint64_t seed) {
  using namespace matquot;
  RelativeResult res = linear_relative_realizability(m1, m2, seed);
  if (std::holds_alternative<QuotientRealization>(res)) {
    emit(quotient_realization_to_json(std::get<QuotientRealization>(res)));
    return kOk;
  }
  if (std::holds_alternative<NonRealizableReport>(res)) {
    const auto& rep = std::get<NonRealizableReport>(res);
    Json j;
    j["verdict"] = "non-realizable";
    j["fixture"] = rep.fixture;
    j["isomorphism"] = rep.isomorphism;
    j["major"] = major_to_json(rep.major);
    emit(j);
    return kCertificate;
  }
  if (std::holds_alternative<NotIncluded>(res)) {
    Json j;
    j["verdict"] = "not-included";
    emit(j);
    return kNegative;
  }
  Json j;
  j["verdict"] = "search-inconclusive";
  j["blocking_element"] = std::get<SearchInconclusive>(res).blocking_element;
  emit(j);
  return kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace matquot;
  CLI::App app{"exact toolkit for matroid quotients, Higgs lifts/majors and "
               "tropical linear space inclusion"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for parallel kernels (0 = default)");
  app.add_flag("--strict", strict, "full subset verification where applicable");
  app.add_option("--out", g_out_path, "also write the JSON result to this file");

  int exit_code = kOk;
  // CLI11 invokes callbacks at the end of parse(); apply globals first.
  auto run = [&](auto&& fn) {
    return [&, fn]() {
      if (jobs > 0) par::set_jobs(jobs);
      exit_code = fn();
    };
  };

  // ---- matroid ----------------------------------------------------------
  auto* matroid_cmd = app.add_subcommand("matroid", "construction and invariants");
  matroid_cmd->require_subcommand(1);
  {
    auto* c = matroid_cmd->add_subcommand("uniform", "uniform matroid U_{r,n}");
    auto r = std::make_shared<int>(0);
    auto n = std::make_shared<int>(0);
    c->add_option("--r", *r)->required();
    c->add_option("--n", *n)->required();
    c->callback(run([=] {
      emit(matroid_to_json(Matroid::uniform(*r, *n)));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("from-bases", "validate and canonicalize");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      emit(matroid_to_json(matroid_from_json(load_json(*in))));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("from-flats", "matroid from its flat family");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      const Json j = load_json(*in);
      std::vector<ElemSet> flats;
      for (const auto& f : j.at("flats")) flats.push_back(set_from_json(f));
      emit(matroid_to_json(matroid_from_flats(j.at("n").get<int>(), std::move(flats))));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("dual", "dual matroid");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      emit(matroid_to_json(load_matroid(*in).dual()));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("minor", "deletion and contraction");
    auto in = std::make_shared<std::string>();
    auto del = std::make_shared<std::string>();
    auto con = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->add_option("--delete", *del, "comma-separated elements");
    c->add_option("--contract", *con, "comma-separated elements");
    c->callback(run([=] {
      Matroid m = load_matroid(*in);
      const ElemSet d = parse_element_list(*del);
      const ElemSet k = parse_element_list(*con);
      if ((d & k) != 0) throw InvalidInputs("delete and contract sets overlap");
      m = m.contracted(k);
      m = m.deleted(compress_set(d, k));
      emit(matroid_to_json(m));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("sum", "direct sum");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("--a", *a)->required();
    c->add_option("--b", *b)->required();
    c->callback(run([=] {
      emit(matroid_to_json(direct_sum(load_matroid(*a), load_matroid(*b))));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("flats", "flat family by rank");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      emit(flat_family_to_json(load_matroid(*in).flats()));
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("circuits", "minimal dependent sets");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      Json arr = Json::array();
      for (ElemSet cset : load_matroid(*in).circuits()) arr.push_back(set_to_json(cset));
      Json j;
      j["circuits"] = std::move(arr);
      emit(j);
      return kOk;
    }));
  }
  {
    auto* c = matroid_cmd->add_subcommand("iso", "ground set bijection mapping bases onto bases");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("--a", *a)->required();
    c->add_option("--b", *b)->required();
    c->callback(run([=] {
      const auto perm = find_isomorphism(load_matroid(*a), load_matroid(*b));
      Json j;
      j["isomorphic"] = perm.has_value();
      if (perm) j["permutation"] = *perm;
      emit(j);
      return perm ? kOk : kNegative;
    }));
  }

  // ---- cut ---------------------------------------------------------------
  auto* cut_cmd = app.add_subcommand("cut", "modular cuts and one-element extensions");
  cut_cmd->require_subcommand(1);
  {
    auto* c = cut_cmd->add_subcommand("check", "modular cut predicate with witness");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      const Json j = load_json(*in);
      const Matroid m = matroid_from_json(j.at("matroid"));
      std::vector<ElemSet> fam;
      for (const auto& f : j.at("flats")) fam.push_back(set_from_json(f));
      const auto violation = modular_cut_violation(m, fam);
      Json out;
      out["valid"] = !violation.has_value();
      if (violation) out["witness"] = violation->describe();
      emit(out);
      return violation ? kNegative : kOk;
    }));
  }
  {
    auto* c = cut_cmd->add_subcommand("extend", "one-element extension along a cut");
    auto in = std::make_shared<std::string>();
    auto label = std::make_shared<std::string>("e");
    auto generators = std::make_shared<bool>(false);
    c->add_option("--in", *in)->required();
    c->add_option("--label", *label);
    c->add_flag("--generators", *generators,
                "treat the flats as generators and close them into a cut");
    c->callback(run([=] {
      const Json j = load_json(*in);
      const Matroid m = matroid_from_json(j.at("matroid"));
      std::vector<ElemSet> fam;
      for (const auto& f : j.at("flats")) fam.push_back(set_from_json(f));
      const ModularCut cut = *generators ? cut_generated_by(m, fam)
                                         : ModularCut(m, std::move(fam));
      emit(matroid_to_json(extend(m, cut, *label)));
      return kOk;
    }));
  }
  {
    auto* c = cut_cmd->add_subcommand("enumerate", "all modular cuts");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      Json arr = Json::array();
      for (const ModularCut& cut : enumerate_modular_cuts(load_matroid(*in))) {
        Json flats = Json::array();
        for (ElemSet f : cut.members()) flats.push_back(set_to_json(f));
        arr.push_back(std::move(flats));
      }
      Json j;
      j["cuts"] = std::move(arr);
      emit(j);
      return kOk;
    }));
  }

  // ---- quotient ----------------------------------------------------------
  auto* quot_cmd = app.add_subcommand("quotient", "quotients, Higgs lifts, factorizations, majors");
  quot_cmd->require_subcommand(1);
  auto add_pair = [](CLI::App* c, std::shared_ptr<std::string> top,
                     std::shared_ptr<std::string> bottom) {
    c->add_option("--top", *top)->required();
    c->add_option("--bottom", *bottom)->required();
  };
  {
    auto* c = quot_cmd->add_subcommand("check", "quotient predicate");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    add_pair(c, top, bottom);
    c->callback(run([=] {
      const bool ok = is_quotient(load_matroid(*top), load_matroid(*bottom));
      Json j;
      j["quotient"] = ok;
      emit(j);
      return ok ? kOk : kNegative;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("nullity", "quotient or subset nullity");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    auto subset = std::make_shared<std::string>();
    add_pair(c, top, bottom);
    c->add_option("--subset", *subset, "comma-separated elements");
    c->callback(run([=] {
      const Quotient q = make_quotient(load_matroid(*top), load_matroid(*bottom));
      Json j;
      if (subset->empty()) {
        j["nullity"] = q.nullity();
      } else {
        j["nullity"] = subset_nullity(q, parse_element_list(*subset));
      }
      emit(j);
      return kOk;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("higgs-lift", "i-th Higgs lift");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    auto i = std::make_shared<int>(0);
    add_pair(c, top, bottom);
    c->add_option("--i", *i)->required();
    c->callback(run([=] {
      emit(matroid_to_json(
          higgs_lift(make_quotient(load_matroid(*top), load_matroid(*bottom)), *i)));
      return kOk;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("higgs-factorization", "the chain of Higgs lifts");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    add_pair(c, top, bottom);
    c->callback(run([=] {
      emit(factorization_to_json(
          higgs_factorization(make_quotient(load_matroid(*top), load_matroid(*bottom)))));
      return kOk;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("higgs-major", "the Higgs major");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    add_pair(c, top, bottom);
    c->callback(run([=] {
      emit(major_to_json(
          higgs_major(make_quotient(load_matroid(*top), load_matroid(*bottom)))));
      return kOk;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("major-from-factorization", "Kennedy's map M");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      emit(major_to_json(major_from_factorization(factorization_from_json(load_json(*in)))));
      return kOk;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("factorization-from-major", "Kennedy's map F");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      emit(factorization_to_json(factorization_from_major(major_from_json(load_json(*in)))));
      return kOk;
    }));
  }
  {
    auto* c = quot_cmd->add_subcommand("flag-higgs", "Higgs factorization and major of a flag");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in)->required();
    c->callback(run([=] {
      const Json j = load_json(*in);
      FlagMatroid flag;
      for (const auto& m : j.at("chain")) flag.chain.push_back(matroid_from_json(m));
      const auto [fact, major] = flag_higgs(flag);
      Json out;
      out["factorization"] = factorization_to_json(fact);
      out["major"] = major_to_json(major);
      emit(out);
      return kOk;
    }));
  }

  // ---- realize -----------------------------------------------------------
  auto* real_cmd = app.add_subcommand("realize", "exact realizations over Q and GF(p)");
  real_cmd->require_subcommand(1);
  {
    auto* c = real_cmd->add_subcommand("check", "does the matrix realize the matroid");
    auto m = std::make_shared<std::string>(), a = std::make_shared<std::string>();
    c->add_option("--matroid", *m)->required();
    c->add_option("--matrix", *a)->required();
    c->callback(run([=] {
      const bool ok =
          check_realizes(matrix_from_json(load_json(*a)), load_matroid(*m), strict);
      Json j;
      j["realizes"] = ok;
      emit(j);
      return ok ? kOk : kNegative;
    }));
  }
  {
    auto* c = real_cmd->add_subcommand("extend", "extend a realization along a modular cut");
    auto r = std::make_shared<std::string>(), cut = std::make_shared<std::string>();
    c->add_option("--realization", *r)->required();
    c->add_option("--cut", *cut)->required();
    c->add_option("--seed", seed)->required();
    c->callback(run([=] {
      const Realization real = realization_from_json(load_json(*r));
      const ModularCut mc = cut_from_json(load_json(*cut));
      const ExtendResult res = extend_along_cut(real, mc, seed);
      if (std::holds_alternative<ObstructionCertificate>(res)) {
        emit(obstruction_to_json(std::get<ObstructionCertificate>(res)));
        return kCertificate;
      }
      const auto& col = std::get<ExtensionColumn>(res);
      Json j;
      Json cj = Json::array();
      for (const Scalar& s : col.column) cj.push_back(s.to_string());
      j["column"] = std::move(cj);
      j["matrix"] = matrix_to_json(col.extended);
      emit(j);
      return kOk;
    }));
  }
  {
    auto* c = real_cmd->add_subcommand("quotient-from-major",
                                       "project a major realization to the nested pair");
    auto mj = std::make_shared<std::string>(), a = std::make_shared<std::string>();
    c->add_option("--major", *mj)->required();
    c->add_option("--matrix", *a)->required();
    c->callback(run([=] {
      const Major major = major_from_json(load_json(*mj));
      const ExactMatrix mat = matrix_from_json(load_json(*a));
      emit(quotient_realization_to_json(
          realize_quotient_from_major(Realization{major.h, mat}, major)));
      return kOk;
    }));
  }
  {
    auto* c = real_cmd->add_subcommand("major-from-quotient",
                                       "realize the Higgs major over a quotient realization");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    auto pair = std::make_shared<std::string>();
    add_pair(c, top, bottom);
    c->add_option("--pair", *pair, "QuotientRealization JSON")->required();
    c->add_option("--seed", seed)->required();
    c->callback(run([=] {
      const Quotient q = make_quotient(load_matroid(*top), load_matroid(*bottom));
      const QuotientRealization qr = quotient_realization_from_json(load_json(*pair));
      emit(realization_to_json(realize_major_from_quotient(qr, q, seed)));
      return kOk;
    }));
  }
  {
    auto* c = real_cmd->add_subcommand("factorization",
                                       "nested row spaces realizing the Higgs factorization");
    auto top = std::make_shared<std::string>(), bottom = std::make_shared<std::string>();
    auto pair = std::make_shared<std::string>();
    add_pair(c, top, bottom);
    c->add_option("--pair", *pair)->required();
    c->add_option("--seed", seed)->required();
    c->callback(run([=] {
      const Quotient q = make_quotient(load_matroid(*top), load_matroid(*bottom));
      const QuotientRealization qr = quotient_realization_from_json(load_json(*pair));
      Json arr = Json::array();
      for (const ExactMatrix& u : realize_factorization(qr, q, seed)) {
        arr.push_back(matrix_to_json(u));
      }
      Json j;
      j["spaces"] = std::move(arr);
      emit(j);
      return kOk;
    }));
  }
  {
    auto* c = real_cmd->add_subcommand("pluckers", "flag Plücker coordinates of a major realization");
    auto mj = std::make_shared<std::string>(), a = std::make_shared<std::string>();
    c->add_option("--major", *mj)->required();
    c->add_option("--matrix", *a)->required();
    c->callback(run([=] {
      const Major major = major_from_json(load_json(*mj));
      const ExactMatrix mat = matrix_from_json(load_json(*a));
      const auto [top, bottom] = project_flag_pluckers(Realization{major.h, mat}, major);
      Json j;
      j["top"] = plucker_to_json(top);
      j["bottom"] = plucker_to_json(bottom);
      emit(j);
      return kOk;
    }));
  }

  // ---- trop --------------------------------------------------------------
  auto* trop_cmd = app.add_subcommand("trop", "tropical linear spaces and relative realizability");
  trop_cmd->require_subcommand(1);
  {
    auto* c = trop_cmd->add_subcommand("member", "membership in trop(M)");
    auto m = std::make_shared<std::string>(), p = std::make_shared<std::string>();
    c->add_option("--matroid", *m)->required();
    c->add_option("--point", *p)->required();
    c->callback(run([=] {
      const bool ok = trop_matroid_membership(load_matroid(*m),
                                              tropical_point_from_json(load_json(*p)));
      Json j;
      j["member"] = ok;
      emit(j);
      return ok ? kOk : kNegative;
    }));
  }
  {
    auto* c = trop_cmd->add_subcommand("inclusion", "trop(a) ⊆ trop(b), decided combinatorially");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    c->add_option("--a", *a)->required();
    c->add_option("--b", *b)->required();
    c->callback(run([=] {
      const bool ok = bergman_inclusion(load_matroid(*a), load_matroid(*b));
      Json j;
      j["included"] = ok;
      emit(j);
      return ok ? kOk : kNegative;
    }));
  }
  {
    auto* c = trop_cmd->add_subcommand("cone-point", "weighted flag cone point");
    auto m = std::make_shared<std::string>(), chain = std::make_shared<std::string>();
    auto weights = std::make_shared<std::string>();
    c->add_option("--matroid", *m)->required();
    c->add_option("--chain", *chain, "JSON array of flats")->required();
    c->add_option("--weights", *weights, "comma-separated positive rationals")->required();
    c->callback(run([=] {
      std::vector<ElemSet> flats;
      for (const auto& f : load_json(*chain)) flats.push_back(set_from_json(f));
      emit(tropical_point_to_json(
          flag_cone_point(load_matroid(*m), flats, parse_rational_list(*weights))));
      return kOk;
    }));
  }
  {
    auto* c = trop_cmd->add_subcommand("ideal-matroid", "matroid of the degree-d part");
    auto in = std::make_shared<std::string>();
    auto d = std::make_shared<int>(0);
    c->add_option("--in", *in)->required();
    c->add_option("--d", *d)->required();
    c->callback(run([=] {
      emit(matroid_to_json(matroid_of_degree_part(ideal_from_json(load_json(*in)), *d)));
      return kOk;
    }));
  }
  {
    auto* c = trop_cmd->add_subcommand("veronese", "tropicalized degree-d Veronese image");
    auto p = std::make_shared<std::string>();
    auto d = std::make_shared<int>(0);
    c->add_option("--point", *p)->required();
    c->add_option("--d", *d)->required();
    c->callback(run([=] {
      emit(tropical_point_to_json(
          trop_veronese_apply(tropical_point_from_json(load_json(*p)), *d)));
      return kOk;
    }));
  }
  {
    auto* c = trop_cmd->add_subcommand("relative", "linear relative realizability");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    c->add_option("--a", *a)->required();
    c->add_option("--b", *b)->required();
    c->add_option("--seed", seed)->required();
    c->callback(run([=] { return run_relative(load_matroid(*a), load_matroid(*b), seed); }));
  }

  // ---- paper -------------------------------------------------------------
  auto* paper_cmd = app.add_subcommand("paper", "reproductions of named worked examples");
  paper_cmd->require_subcommand(1);
  {
    auto* c = paper_cmd->add_subcommand(
        "non-pappus", "the non-realizable deletion/contraction quotient");
    c->callback(run([=] {
      const Matroid& p = fixtures::non_pappus();
      const Matroid del = p.deleted(single(8));
      const Matroid con = p.contracted(single(8));
      return run_relative(con, del, 0);
    }));
  }
  {
    auto* c = paper_cmd->add_subcommand("uniform-major",
                                        "Higgs major of U_{r+k,n} ->> U_{r,n}");
    auto r = std::make_shared<int>(0), k = std::make_shared<int>(0), n = std::make_shared<int>(0);
    c->add_option("--r", *r)->required();
    c->add_option("--k", *k)->required();
    c->add_option("--n", *n)->required();
    c->callback(run([=] {
      const Quotient q =
          make_quotient(Matroid::uniform(*r + *k, *n), Matroid::uniform(*r, *n));
      emit(major_to_json(higgs_major(q)));
      return kOk;
    }));
  }
  {
    auto* c = paper_cmd->add_subcommand(
        "lamboglia-3.3", "plane whose fixed realization does not extend");
    c->callback(run([=] {
      const Matroid u36 = Matroid::uniform(3, 6);
      const Quotient q = make_quotient(u36, fixtures::gamma_matroid(6));
      const ModularCut cut = elementary_cut(q);
      const Realization r = make_realization(u36, fixtures::lamboglia_plane_obstructed());
      const ExtendResult res = extend_along_cut(r, cut, 0);
      if (!std::holds_alternative<ObstructionCertificate>(res)) {
        throw std::logic_error("expected an obstruction certificate");
      }
      emit(obstruction_to_json(std::get<ObstructionCertificate>(res)));
      return kCertificate;
    }));
  }
  {
    auto* c = paper_cmd->add_subcommand(
        "lamboglia-3.4", "plane extending to the line-through-a-point matroid");
    c->add_option("--seed", seed)->required();
    c->callback(run([=] {
      const Matroid u36 = Matroid::uniform(3, 6);
      const Quotient q = make_quotient(u36, fixtures::gamma_matroid(6));
      const ModularCut cut = elementary_cut(q);
      const Realization r = make_realization(u36, fixtures::lamboglia_plane_extendable());
      const ExtendResult res = extend_along_cut(r, cut, seed);
      if (!std::holds_alternative<ExtensionColumn>(res)) {
        throw std::logic_error("expected a successful extension");
      }
      const auto& col = std::get<ExtensionColumn>(res);
      const Major major = higgs_major(q);
      const QuotientRealization qr =
          realize_quotient_from_major(Realization{major.h, col.extended}, major);
      Json j;
      Json cj = Json::array();
      for (const Scalar& s : col.column) cj.push_back(s.to_string());
      j["column"] = std::move(cj);
      j["pair"] = quotient_realization_to_json(qr);
      emit(j);
      return kOk;
    }));
  }
  {
    auto* c = paper_cmd->add_subcommand(
        "standard-line", "same tropical line from two ideals, no quotient between them");
    auto p = std::make_shared<int>(2);
    c->add_option("--p", *p)->required();
    c->add_option("--seed", seed)->required();
    c->callback(run([=] {
      const auto report = check_quotient_implies_inclusion(
          standard_line_linear_ideal(), standard_line_power_ideal(*p), *p,
          sample_line_points(50, seed));
      emit(inclusion_report_to_json(report));
      bool all_pass = true;
      for (const auto& s : report.samples) all_pass &= (s.in_i_side && s.in_j_side);
      return (!report.quotient_holds && all_pass) ? kOk : kNegative;
    }));
  }

  // Let the global options (--jobs, --strict, --out, and --seed where a
  // subcommand does not define its own) appear after the subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    Json err;
    err["error"] = "usage";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return kUsage;
  } catch (const matquot::Error& e) {
    Json err;
    err["error"] = "invalid-input";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "internal";
    err["detail"] = e.what();
    std::cerr << err.dump() << "\n";
    return kUsage;
  }
  return exit_code;
}
