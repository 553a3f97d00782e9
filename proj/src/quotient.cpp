#include "matquot/quotient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matquot/enumeration.hpp"
#include "matquot/errors.hpp"

namespace matquot {

namespace {

bool quotient_flat_criterion(const Matroid& top, const Matroid& bottom) {
  for (ElemSet f : bottom.flats().all()) {
    if (!top.is_flat(f)) return false;
  }
  return true;
}

bool quotient_circuit_criterion(const Matroid& top, const Matroid& bottom) {
  for (ElemSet c : top.circuits()) {
    if (!bottom.is_cycle(c)) return false;
  }
  return true;
}

}  // namespace

bool is_quotient(const Matroid& top, const Matroid& bottom) {
  if (top.n() != bottom.n()) throw GroundSetMismatch(top.n(), bottom.n());
  const bool by_flats = quotient_flat_criterion(top, bottom);
  const bool by_circuits = quotient_circuit_criterion(top, bottom);
  if (by_flats != by_circuits) {
    throw std::logic_error(
        "quotient criteria disagree: flats say " + std::to_string(by_flats) +
        ", circuits say " + std::to_string(by_circuits));
  }
  return by_flats;
}

Quotient make_quotient(Matroid top, Matroid bottom) {
  if (!is_quotient(top, bottom)) {
    throw InvalidInputs("not a quotient: some flat of the bottom matroid is not a flat of the top");
  }
  return Quotient{std::move(top), std::move(bottom)};
}

int subset_nullity(const Quotient& q, ElemSet a) {
  return q.top.rank_of(a) - q.bottom.rank_of(a);
}

Matroid higgs_lift(const Quotient& q, int i) {
  const int k = q.nullity();
  if (i < 0 || i > k) throw IndexOutOfRange("Higgs lift index " + std::to_string(i) + " outside [0, " + std::to_string(k) + "]");
  if (i == 0) return q.bottom;
  if (i == k) return q.top;
  const int n = q.top.n();
  const int target = q.bottom.rank() + i;
  {
    unsigned long long binom = 1;
    for (int t = 1; t <= target; ++t) {
      binom = binom * static_cast<unsigned long long>(n - target + t) / t;
      if (binom > 20'000'000ULL) throw TooLarge("too many candidate bases for the Higgs lift");
    }
  }
  std::vector<ElemSet> bases;
  for (ElemSet b : k_subsets(n, target)) {
    if (q.top.rank_of(b) == target && q.bottom.rank_of(b) >= target - i) {
      bases.push_back(b);
    }
  }
  return Matroid::trusted(n, std::move(bases), q.top.labels());
}

Matroid higgs_lift_via_flats(const Quotient& q, int i) {
  const int k = q.nullity();
  if (i < 0 || i > k) throw IndexOutOfRange("Higgs lift index outside range");
  std::set<ElemSet> fam;
  for (ElemSet f : q.bottom.flats().all()) fam.insert(f);
  for (ElemSet f : q.top.flats().all()) {
    if (subset_nullity(q, f) < i) fam.insert(f);
  }
  return matroid_from_flats(q.top.n(), {fam.begin(), fam.end()}, q.top.labels());
}

Factorization higgs_factorization(const Quotient& q) {
  Factorization out;
  const int k = q.nullity();
  for (int i = k; i >= 0; --i) out.steps.push_back(higgs_lift(q, i));
  validate_factorization(out);
  return out;
}

void validate_factorization(const Factorization& f) {
  if (f.steps.empty()) throw InvalidFactorization("no steps");
  for (std::size_t i = 0; i + 1 < f.steps.size(); ++i) {
    if (f.steps[i].rank() != f.steps[i + 1].rank() + 1) {
      throw InvalidFactorization("step " + std::to_string(i) + " is not elementary");
    }
    if (!is_quotient(f.steps[i], f.steps[i + 1])) {
      throw InvalidFactorization("step " + std::to_string(i) + " is not a quotient");
    }
  }
}

ModularCut elementary_cut(const Quotient& q) {
  if (q.nullity() != 1) throw NotElementary(q.nullity());
  std::vector<ElemSet> members;
  for (ElemSet f : q.top.flats().all()) {
    if (subset_nullity(q, f) == 1) members.push_back(f);
  }
  return ModularCut(q.top, std::move(members));
}

Matroid major_top(const Major& h) {
  return h.h.deleted(set_from_elements(h.new_elements));
}

Matroid major_bottom(const Major& h) {
  return h.h.contracted(set_from_elements(h.new_elements));
}

void validate_major(const Major& h) {
  const ElemSet k = set_from_elements(h.new_elements);
  if (!subset_of(k, full_set(h.h.n()))) throw InvalidMajor("new elements outside ground set");
  if (set_size(k) != static_cast<int>(h.new_elements.size())) {
    throw InvalidMajor("duplicate new elements");
  }
  const Matroid top = major_top(h);
  const Matroid bottom = major_bottom(h);
  if (top.rank() - bottom.rank() != static_cast<int>(h.new_elements.size())) {
    throw InvalidMajor("nullity does not match the number of new elements");
  }
  if (!is_quotient(top, bottom)) throw InvalidMajor("delete/contract pair is not a quotient");
}

Major higgs_major(const Quotient& q) {
  const int k = q.nullity();
  const int n = q.top.n();
  if (k == 0) return Major{q.top, {}};
  std::vector<std::string> aux_labels;
  for (int i = 1; i <= k; ++i) aux_labels.push_back("ē" + std::to_string(i));
  std::vector<std::string> top_labels;
  for (int e = 0; e < n; ++e) top_labels.push_back(q.top.label_of(e));
  const Matroid big_top = direct_sum(q.top.with_labels(top_labels),
                                     Matroid::uniform(k, k).with_labels(aux_labels));
  const Matroid big_bottom = direct_sum(q.bottom.with_labels(top_labels),
                                        Matroid::uniform(0, k).with_labels(aux_labels));
  Quotient padded = make_quotient(big_top, big_bottom);
  Matroid h = higgs_lift(padded, k);
  std::vector<int> new_elements;
  for (int i = 0; i < k; ++i) new_elements.push_back(n + i);
  Major out{std::move(h), std::move(new_elements)};
  validate_major(out);
  if (major_top(out) != q.top || major_bottom(out) != q.bottom) {
    throw std::logic_error("Higgs major round trip failed");
  }
  return out;
}

namespace {

// Moves the major's new elements to the tail (preserving the relative order
// of E and of K) so that contractions/deletions keep E at indices 0..n-1.
Major normalize_major(const Major& h) {
  const int n_total = h.h.n();
  const ElemSet k_mask = set_from_elements(h.new_elements);
  std::vector<int> perm(n_total, -1);  // old index -> new index
  int next = 0;
  for (int e = 0; e < n_total; ++e) {
    if (!contains(k_mask, e)) perm[e] = next++;
  }
  std::vector<int> new_positions;
  for (int e : h.new_elements) {
    perm[e] = next++;
    new_positions.push_back(perm[e]);
  }
  std::vector<ElemSet> bases;
  for (ElemSet b : h.h.bases()) {
    ElemSet nb = 0;
    for (int e : set_elements(b)) nb |= single(perm[e]);
    bases.push_back(nb);
  }
  std::vector<std::string> labels;
  if (!h.h.labels().empty()) {
    labels.resize(n_total);
    for (int e = 0; e < n_total; ++e) labels[perm[e]] = h.h.label_of(e);
  }
  return Major{Matroid::trusted(n_total, std::move(bases), std::move(labels)),
               std::move(new_positions)};
}

}  // namespace

MajorAssembly major_from_factorization_with_cuts(const Factorization& f) {
  validate_factorization(f);
  const int k = f.nullity();
  const int n = f.steps.front().n();
  std::vector<ModularCut> cuts;
  Matroid x = f.steps.front();
  for (int i = 1; i <= k; ++i) {
    // The cut of the i-th elementary step, established on N_{i-1} ...
    ModularCut cut = elementary_cut(make_quotient(f.steps[i - 1], f.steps[i]));
    // ... lifted through the i-1 elements already added. x currently lives on
    // E + {e_1..e_{i-1}} with the e's at the tail; in x / {e_1..e_{j-1}} the
    // element e_j sits at index n.
    for (int j = i - 1; j >= 1; --j) {
      ElemSet contract_mask = 0;
      for (int t = 0; t < j - 1; ++t) contract_mask |= single(n + t);
      const Matroid parent = x.contracted(contract_mask);
      cut = lift_cut(parent, n, cut);
    }
    x = extend(x, cut, "ē" + std::to_string(i));
    cuts.push_back(std::move(cut));
  }
  std::vector<int> new_elements;
  for (int i = 0; i < k; ++i) new_elements.push_back(n + i);
  MajorAssembly out{Major{std::move(x), std::move(new_elements)}, std::move(cuts)};
  validate_major(out.major);
  if (major_top(out.major) != f.steps.front() ||
      major_bottom(out.major) != f.steps.back()) {
    throw InvalidFactorization("assembled major does not restrict to the endpoints");
  }
  return out;
}

Major major_from_factorization(const Factorization& f) {
  return major_from_factorization_with_cuts(f).major;
}

Factorization factorization_from_major(const Major& h) {
  validate_major(h);
  const Major nh = normalize_major(h);
  const int k = static_cast<int>(nh.new_elements.size());
  Factorization out;
  for (int i = 0; i <= k; ++i) {
    ElemSet contract_mask = 0, delete_mask = 0;
    for (int j = 0; j < i; ++j) contract_mask |= single(nh.new_elements[j]);
    for (int j = i; j < k; ++j) delete_mask |= single(nh.new_elements[j]);
    // Contract the first i new elements, delete the rest. With K at the tail
    // the deletion mask must be re-expressed after contraction.
    Matroid step = nh.h.contracted(contract_mask);
    step = step.deleted(compress_set(delete_mask, contract_mask));
    out.steps.push_back(std::move(step));
  }
  validate_factorization(out);
  return out;
}

std::vector<Matroid> enumerate_elementary_quotients(const Matroid& m) {
  if (m.n() > 6) throw TooLarge("elementary quotient enumeration supports n <= 6");
  std::vector<Matroid> out;
  for (const ModularCut& cut : enumerate_modular_cuts(m)) {
    Matroid ext = extend(m, cut, "");
    Matroid contracted = ext.contracted(single(m.n()));
    // The empty cut and the all-flats cut add a coloop or a loop and
    // contract back to m itself; only nullity-one results are elementary.
    if (contracted.rank() == m.rank() - 1) out.push_back(std::move(contracted));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validate_flag(const FlagMatroid& flag) {
  if (flag.chain.empty()) throw InvalidFlag("empty chain");
  for (std::size_t i = 0; i + 1 < flag.chain.size(); ++i) {
    if (flag.chain[i].n() != flag.chain[i + 1].n()) {
      throw InvalidFlag("ground sets differ at step " + std::to_string(i));
    }
    if (!is_quotient(flag.chain[i], flag.chain[i + 1])) {
      throw InvalidFlag("step " + std::to_string(i) + " is not a quotient");
    }
  }
}

std::pair<Factorization, Major> flag_higgs(const FlagMatroid& flag) {
  validate_flag(flag);
  Factorization total;
  total.steps.push_back(flag.chain.front());
  for (std::size_t i = 0; i + 1 < flag.chain.size(); ++i) {
    const Factorization part =
        higgs_factorization(make_quotient(flag.chain[i], flag.chain[i + 1]));
    for (std::size_t j = 1; j < part.steps.size(); ++j) {
      total.steps.push_back(part.steps[j]);
    }
  }
  validate_factorization(total);
  Major h = major_from_factorization(total);
  return {std::move(total), std::move(h)};
}

}  // namespace matquot
