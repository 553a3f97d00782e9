#include "matquot/extension.hpp"

#include <algorithm>
#include <set>

#include "matquot/errors.hpp"

namespace matquot {

std::string CutViolation::describe() const {
  switch (kind) {
    case Kind::kNotAFlat:
      return set_to_string(a) + " is not a flat";
    case Kind::kNotUpwardClosed:
      return "member " + set_to_string(a) + " has non-member superflat " +
             set_to_string(b);
    case Kind::kModularPairOpen:
      return "modular pair " + set_to_string(a) + ", " + set_to_string(b) +
             " has non-member intersection";
  }
  return "";
}

std::optional<CutViolation> modular_cut_violation(
    const Matroid& m, const std::vector<ElemSet>& family) {
  std::vector<ElemSet> fam = family;
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  for (ElemSet f : fam) {
    if (!subset_of(f, full_set(m.n())) || !m.is_flat(f)) {
      return CutViolation{CutViolation::Kind::kNotAFlat, f, 0};
    }
  }
  const auto all_flats = m.flats().all();
  for (ElemSet f : fam) {
    for (ElemSet g : all_flats) {
      if (f != g && subset_of(f, g) &&
          !std::binary_search(fam.begin(), fam.end(), g)) {
        return CutViolation{CutViolation::Kind::kNotUpwardClosed, f, g};
      }
    }
  }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      const ElemSet a = fam[i], b = fam[j];
      if (m.rank_of(a) + m.rank_of(b) ==
          m.rank_of(a & b) + m.rank_of(a | b)) {
        if (!std::binary_search(fam.begin(), fam.end(), a & b)) {
          return CutViolation{CutViolation::Kind::kModularPairOpen, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

ModularCut::ModularCut(Matroid matroid, std::vector<ElemSet> members)
    : matroid_(std::move(matroid)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (auto v = modular_cut_violation(matroid_, members_)) {
    throw InvalidModularCut(v->describe());
  }
}

std::vector<ElemSet> ModularCut::minimal_members() const {
  std::vector<ElemSet> out;
  for (ElemSet f : members_) {
    bool minimal = true;
    for (ElemSet g : members_) {
      if (g != f && subset_of(g, f)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(f);
  }
  return out;
}

bool ModularCut::contains_member(ElemSet f) const {
  return std::binary_search(members_.begin(), members_.end(), f);
}

ModularCut cut_generated_by(const Matroid& m, const std::vector<ElemSet>& generators) {
  std::set<ElemSet> members;
  for (ElemSet g : generators) {
    const ElemSet f = m.closure(g);
    if (f != g) throw InvalidModularCut(set_to_string(g) + " is not a flat");
    members.insert(f);
  }
  const auto all_flats = m.flats().all();
  bool changed = true;
  while (changed) {
    changed = false;
    // Upward closure.
    std::vector<ElemSet> cur(members.begin(), members.end());
    for (ElemSet f : cur) {
      for (ElemSet g : all_flats) {
        if (subset_of(f, g) && members.insert(g).second) changed = true;
      }
    }
    // Modular pairs.
    cur.assign(members.begin(), members.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        const ElemSet a = cur[i], b = cur[j];
        if (m.rank_of(a) + m.rank_of(b) ==
            m.rank_of(a & b) + m.rank_of(a | b)) {
          if (members.insert(a & b).second) changed = true;
        }
      }
    }
  }
  return ModularCut(m, {members.begin(), members.end()});
}

Matroid extend(const Matroid& m, const ModularCut& cut, const std::string& label) {
  if (!(cut.matroid() == m)) {
    throw InvalidModularCut("cut belongs to a different matroid");
  }
  if (m.n() + 1 > kMaxGroundSet) throw TooLarge("extension exceeds 63 elements");
  const int e = m.n();
  const auto all_flats = m.flats().all();
  // A flat outside the cut keeps both F and F+e as flats unless some cut
  // member covers it (rank difference one).
  std::vector<ElemSet> new_flats;
  for (ElemSet f : all_flats) {
    if (cut.contains_member(f)) {
      new_flats.push_back(f | single(e));
      continue;
    }
    new_flats.push_back(f);
    bool covered_into_cut = false;
    const int rf = m.rank_of(f);
    for (ElemSet g : cut.members()) {
      if (subset_of(f, g) && m.rank_of(g) == rf + 1) {
        covered_into_cut = true;
        break;
      }
    }
    if (!covered_into_cut) new_flats.push_back(f | single(e));
  }
  std::vector<std::string> labels;
  if (!m.labels().empty() || !label.empty()) {
    for (int i = 0; i < m.n(); ++i) labels.push_back(m.label_of(i));
    labels.push_back(label.empty() ? std::to_string(e) : label);
  }
  Matroid out = matroid_from_flats(m.n() + 1, std::move(new_flats), std::move(labels));
  if (out.deleted(single(e)) != m) {
    throw InvalidModularCut("extension does not restrict back to the matroid");
  }
  return out;
}

ModularCut lift_cut(const Matroid& m, int e, const ModularCut& cut_of_contraction) {
  if (e < 0 || e >= m.n()) throw IndexOutOfRange("element outside ground set");
  const Matroid contraction = m.contracted(single(e));
  if (!(cut_of_contraction.matroid() == contraction)) {
    throw InvalidModularCut("cut does not live on the contraction by the element");
  }
  std::vector<ElemSet> lifted;
  for (ElemSet f : cut_of_contraction.members()) {
    lifted.push_back(expand_set(f, single(e)) | single(e));
  }
  return ModularCut(m, std::move(lifted));
}

}  // namespace matquot
