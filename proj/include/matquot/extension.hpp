#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matquot/matroid.hpp"

namespace matquot {

struct CutViolation {
  enum class Kind { kNotAFlat, kNotUpwardClosed, kModularPairOpen };
  Kind kind;
  ElemSet a = 0;
  ElemSet b = 0;
  std::string describe() const;
};

// An upward-closed, modular-pair-closed family of flats of a fixed matroid.
// The empty family is accepted and corresponds to extending by a coloop.
// Members are stored fully expanded, sorted ascending by bitmask.
class ModularCut {
 public:
  ModularCut(Matroid matroid, std::vector<ElemSet> members);

  const Matroid& matroid() const { return matroid_; }
  const std::vector<ElemSet>& members() const { return members_; }
  std::vector<ElemSet> minimal_members() const;
  bool contains_member(ElemSet f) const;
  bool operator==(const ModularCut& other) const {
    return matroid_ == other.matroid_ && members_ == other.members_;
  }

 private:
  Matroid matroid_;
  std::vector<ElemSet> members_;
};

std::optional<CutViolation> modular_cut_violation(
    const Matroid& m, const std::vector<ElemSet>& family);

inline bool is_modular_cut(const Matroid& m, const std::vector<ElemSet>& family) {
  return !modular_cut_violation(m, family).has_value();
}

// Closes the given flats under upward closure and modular-pair intersections.
ModularCut cut_generated_by(const Matroid& m, const std::vector<ElemSet>& generators);

// The one-element extension M + e determined by the cut. The new element gets
// index n; flats of the extension are F for F outside the cut, F + e for cut
// members, and F + e for flats outside the cut that are not covered by a cut
// member.
Matroid extend(const Matroid& m, const ModularCut& cut, const std::string& label);

// Given a modular cut of M/e, the family {F + e} is a modular cut of M.
// `e` is an element of m; the cut's matroid must equal m.contracted({e}).
ModularCut lift_cut(const Matroid& m, int e, const ModularCut& cut_of_contraction);

}  // namespace matquot
