#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matquot/element_set.hpp"

namespace matquot {

// The flats of a matroid, grouped by rank. by_rank[r] is sorted ascending by
// bitmask value.
struct FlatFamily {
  int n = 0;
  std::vector<std::vector<ElemSet>> by_rank;

  std::vector<ElemSet> all() const;
  bool contains_flat(ElemSet f) const;
  std::size_t size() const;
};

// A matroid on ground set {0,..,n-1}, given by its bases. Bases are stored
// sorted ascending by bitmask value, so equality of matroids is structural
// equality of (n, bases). Labels are presentation only and ignored by ==.
//
// Immutable after construction; safe to share across threads.
class Matroid {
 public:
  // Validates the exchange axiom (see exchange_violation for the policy on
  // very large basis families) and canonicalizes the basis order.
  static Matroid from_bases(int n, std::vector<ElemSet> bases,
                            std::vector<std::string> labels = {});

  static Matroid uniform(int r, int n);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<ElemSet>& bases() const { return bases_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Matroid with_labels(std::vector<std::string> labels) const;

  bool has_basis(ElemSet b) const;
  bool is_independent(ElemSet a) const;
  int rank_of(ElemSet a) const;
  ElemSet closure(ElemSet a) const;
  bool is_flat(ElemSet a) const;
  ElemSet loops() const { return closure(0); }

  FlatFamily flats() const;
  std::vector<ElemSet> circuits() const;
  // True iff a is a union of circuits (equivalently the restriction to a has
  // no coloops). The empty set is a cycle.
  bool is_cycle(ElemSet a) const;
  std::vector<ElemSet> cycles() const;

  // Minors reindex the surviving elements to 0..m-1, preserving order.
  Matroid deleted(ElemSet s) const;
  Matroid contracted(ElemSet s) const;
  Matroid dual() const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }
  bool operator!=(const Matroid& other) const { return !(*this == other); }
  // Total order used for canonical sorting/deduplication of matroid lists.
  bool operator<(const Matroid& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return bases_ < other.bases_;
  }

  std::string label_of(int e) const;

  // Internal constructor for basis families that are valid by construction
  // (minors, duals, sums, uniform, lifts). Still sorts and checks basic
  // shape; the quadratic exchange check is applied below a size threshold.
  static Matroid trusted(int n, std::vector<ElemSet> bases,
                         std::vector<std::string> labels = {});

 private:
  Matroid(int n, std::vector<ElemSet> bases, std::vector<std::string> labels);

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElemSet> bases_;
  std::vector<std::string> labels_;
};

// Returns the first exchange-axiom violation of the (sorted, deduplicated,
// equal-cardinality) family, if any.
struct ExchangeWitness {
  ElemSet b1, b2;
  int x;
};
std::optional<ExchangeWitness> exchange_violation(
    const std::vector<ElemSet>& bases);

// M1 on the low indices, M2 shifted up by M1.n(). Labels are carried over.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

// Identity weak-map order: true iff every independent set of m2 is
// independent in m1 ("m1 <= m2").
bool weak_leq(const Matroid& m1, const Matroid& m2);

// A ground-set bijection perm with perm(bases(m1)) = bases(m2), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Matroid& m1,
                                                 const Matroid& m2);

// The unique matroid whose flats are exactly `flats`, or NotAFlatLattice.
// Decisive validation is the round trip: the reconstructed matroid's flat
// family must equal the input.
Matroid matroid_from_flats(int n, std::vector<ElemSet> flats,
                           std::vector<std::string> labels = {});

}  // namespace matquot
