#include <doctest.h>

#include <algorithm>
#include <set>

#include "matquot/enumeration.hpp"
#include "matquot/errors.hpp"
#include "matquot/fixtures.hpp"
#include "matquot/matroid.hpp"

using namespace matquot;

namespace {

// Brute-force flats: a set is a flat iff it equals its closure.
std::vector<ElemSet> flats_brute(const Matroid& m) {
  std::vector<ElemSet> out;
  for (ElemSet s = 0;; ++s) {
    if (m.closure(s) == s) out.push_back(s);
    if (s == full_set(m.n())) break;
  }
  return out;
}

// Brute-force circuits: minimal dependent sets by increasing cardinality.
std::vector<ElemSet> circuits_brute(const Matroid& m) {
  std::vector<ElemSet> out;
  for (ElemSet s = 1;; ++s) {
    if (!m.is_independent(s)) {
      bool minimal = true;
      for (int x : set_elements(s)) {
        if (!m.is_independent(s & ~single(x))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(s);
    }
    if (s == full_set(m.n())) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matroid> small_fixtures() {
  return {Matroid::uniform(2, 4),  Matroid::uniform(3, 6),
          fixtures::gamma_matroid(6), fixtures::non_pappus().deleted(single(8)),
          direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 3))};
}

}  // namespace

TEST_CASE("from_bases accepts uniform families and rejects exchange violations") {
  const Matroid u23 = Matroid::from_bases(3, {0b011, 0b101, 0b110});
  CHECK(u23 == Matroid::uniform(2, 3));
  const Matroid u12 = Matroid::from_bases(2, {0b01, 0b10});
  CHECK(u12 == Matroid::uniform(1, 2));
  CHECK_THROWS_AS(Matroid::from_bases(4, {0b0011, 0b1100}), ExchangeAxiomViolation);
  CHECK_THROWS_AS(Matroid::from_bases(3, {}), EmptyBases);
  CHECK_THROWS_AS(Matroid::from_bases(2, {0b01, 0b11}), InvalidInputs);
}

TEST_CASE("uniform matroids") {
  CHECK(Matroid::uniform(0, 3).bases() == std::vector<ElemSet>{0});
  CHECK(Matroid::uniform(2, 4).bases().size() == 6);
  CHECK(Matroid::uniform(3, 6).bases().size() == 20);
  CHECK_THROWS_AS(Matroid::uniform(4, 3), InvalidInputs);
}

TEST_CASE("rank_of") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(u23.rank_of(0) == 0);
  CHECK(u23.rank_of(0b111) == 2);
  // A collinear triple of the non-Pappus configuration spans a line.
  CHECK(fixtures::non_pappus().rank_of(set_from_elements({0, 1, 2})) == 2);
}

TEST_CASE("closure") {
  CHECK(Matroid::uniform(2, 4).closure(0b0001) == 0b0001);
  CHECK(fixtures::non_pappus().closure(set_from_elements({0, 1})) ==
        set_from_elements({0, 1, 2}));
  for (const Matroid& m : small_fixtures()) {
    CHECK(m.closure(full_set(m.n())) == full_set(m.n()));
  }
}

TEST_CASE("closure is extensive, monotone and idempotent (exhaustive)") {
  for (const Matroid& m : small_fixtures()) {
    const ElemSet ground = full_set(m.n());
    for (ElemSet a = 0;; ++a) {
      const ElemSet cl = m.closure(a);
      CHECK(subset_of(a, cl));
      CHECK(m.closure(cl) == cl);
      if (a == ground) break;
    }
    for (ElemSet a = 0;; ++a) {
      // Monotone against one-element enlargements; this propagates.
      for (int x : set_elements(ground & ~a)) {
        CHECK(subset_of(m.closure(a), m.closure(a | single(x))));
      }
      if (a == ground) break;
    }
  }
}

TEST_CASE("rank is monotone and submodular (exhaustive)") {
  for (const Matroid& m : small_fixtures()) {
    const ElemSet ground = full_set(m.n());
    for (ElemSet a = 0;; ++a) {
      for (ElemSet b = 0;; ++b) {
        CHECK(m.rank_of(a) + m.rank_of(b) >= m.rank_of(a & b) + m.rank_of(a | b));
        if (b == ground) break;
      }
      if (subset_of(a, ground)) {
        for (int x : set_elements(ground & ~a)) {
          const int d = m.rank_of(a | single(x)) - m.rank_of(a);
          CHECK(d >= 0);
          CHECK(d <= 1);
        }
      }
      if (a == ground) break;
    }
  }
}

TEST_CASE("flats against brute force") {
  for (const Matroid& m : small_fixtures()) {
    auto got = m.flats().all();
    std::sort(got.begin(), got.end());
    CHECK(got == flats_brute(m));
  }
  // Parallel elements collapse: the only flats of U_{1,2} are the bottom and
  // the ground set.
  auto u12 = Matroid::uniform(1, 2).flats().all();
  std::sort(u12.begin(), u12.end());
  CHECK(u12 == std::vector<ElemSet>{0, 0b11});
  auto u23 = Matroid::uniform(2, 3).flats().all();
  CHECK(u23.size() == 5);
}

TEST_CASE("non-Pappus flats: nine points, twenty lines of which eight are triples") {
  const auto fam = fixtures::non_pappus().flats();
  REQUIRE(fam.by_rank.size() == 4);
  CHECK(fam.by_rank[0].size() == 1);
  CHECK(fam.by_rank[1].size() == 9);
  CHECK(fam.by_rank[2].size() == 20);
  int triples = 0;
  for (ElemSet l : fam.by_rank[2]) {
    if (set_size(l) == 3) ++triples;
  }
  CHECK(triples == 8);
  const auto lines = fixtures::non_pappus_lines();
  for (ElemSet l : lines) {
    CHECK(std::find(fam.by_rank[2].begin(), fam.by_rank[2].end(), l) !=
          fam.by_rank[2].end());
  }
  // The middle points 7, 8, e are not collinear.
  CHECK(fixtures::non_pappus().rank_of(set_from_elements({6, 7, 8})) == 3);
}

TEST_CASE("circuits") {
  CHECK(Matroid::uniform(2, 3).circuits() == std::vector<ElemSet>{0b111});
  CHECK(Matroid::uniform(1, 2).circuits() == std::vector<ElemSet>{0b11});
  CHECK(Matroid::uniform(3, 6).circuits().size() == 15);
  for (const Matroid& m : small_fixtures()) {
    CHECK(m.circuits() == circuits_brute(m));
  }
}

TEST_CASE("is_cycle") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(u23.is_cycle(0));
  CHECK_FALSE(u23.is_cycle(0b011));
  CHECK(Matroid::uniform(2, 4).is_cycle(0b1111));
  // Agreement with explicit union-of-circuits enumeration.
  for (const Matroid& m : small_fixtures()) {
    const auto cycles = m.cycles();
    for (ElemSet s = 0;; ++s) {
      const bool in_list = std::binary_search(cycles.begin(), cycles.end(), s);
      CHECK(m.is_cycle(s) == in_list);
      if (s == full_set(m.n())) break;
    }
  }
}

TEST_CASE("minors of the non-Pappus matroid match the displayed figures") {
  const Matroid& p = fixtures::non_pappus();
  const Matroid del = p.deleted(single(8));
  CHECK(del.n() == 8);
  CHECK(del.rank() == 3);
  // Six 3-point lines survive the deletion.
  const FlatFamily del_flats = del.flats();
  int triples = 0;
  for (ElemSet l : del_flats.by_rank[2]) {
    if (set_size(l) == 3) ++triples;
  }
  CHECK(triples == 6);

  const Matroid con = p.contracted(single(8));
  CHECK(con.rank() == 2);
  // Parallel classes {2,6} and {3,5} in 1-indexed labels, simple otherwise.
  CHECK(con.closure(single(1)) == set_from_elements({1, 5}));
  CHECK(con.closure(single(2)) == set_from_elements({2, 4}));
  for (int e : {0, 3, 6, 7}) CHECK(con.closure(single(e)) == single(e));
  CHECK(con.loops() == 0);
}

TEST_CASE("dual and direct sum") {
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(Matroid::uniform(r, n).dual() == Matroid::uniform(n - r, n));
    }
  }
  const Matroid s = direct_sum(Matroid::uniform(1, 2), Matroid::uniform(2, 2));
  CHECK(s.rank() == 3);
  CHECK(s.n() == 4);
  CHECK(s.rank_of(0b0011) == 1);
  CHECK(s.rank_of(0b1100) == 2);
}

TEST_CASE("deletion and contraction commute on disjoint sets (exhaustive n<=4)") {
  for (const Matroid& m : enumerate_matroids(4)) {
    const ElemSet ground = full_set(4);
    for (ElemSet s = 0;; ++s) {
      for (ElemSet t = 0;; ++t) {
        if ((s & t) == 0 && (s | t) != ground) {
          // Contract t then delete (reindexed) s, in both orders.
          const Matroid a = m.contracted(t).deleted(compress_set(s, t));
          const Matroid b = m.deleted(s).contracted(compress_set(t, s));
          CHECK(a == b);
        }
        if (t == ground) break;
      }
      if (s == ground) break;
    }
  }
}

TEST_CASE("cocircuits are complements of hyperplanes (exhaustive fixtures)") {
  for (const Matroid& m : small_fixtures()) {
    auto cocircuits = m.dual().circuits();
    std::vector<ElemSet> complements;
    if (m.rank() > 0) {
      const FlatFamily fam = m.flats();
      for (ElemSet h : fam.by_rank[m.rank() - 1]) {
        complements.push_back(full_set(m.n()) & ~h);
      }
    }
    std::sort(complements.begin(), complements.end());
    CHECK(cocircuits == complements);
  }
}

TEST_CASE("weak order") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(weak_leq(u23, u23));
  const Matroid dropped = Matroid::from_bases(3, {0b101, 0b110});
  CHECK(weak_leq(u23, dropped));
  CHECK_FALSE(weak_leq(dropped, u23));
  CHECK_FALSE(weak_leq(Matroid::uniform(1, 3), u23));
  CHECK_THROWS_AS(weak_leq(u23, Matroid::uniform(1, 2)), GroundSetMismatch);
}

TEST_CASE("isomorphism search") {
  const Matroid u23 = Matroid::uniform(2, 3);
  const Matroid relabeled = Matroid::from_bases(3, {0b011, 0b101, 0b110});
  CHECK(find_isomorphism(u23, relabeled).has_value());
  CHECK_FALSE(find_isomorphism(Matroid::uniform(2, 4), Matroid::uniform(3, 4)));
  // Distinguishes parallel structure, not just size counts.
  const Matroid gamma = fixtures::gamma_matroid(4);
  CHECK_FALSE(find_isomorphism(gamma, Matroid::uniform(2, 4)));
  const Matroid gamma_perm = Matroid::from_bases(
      4, {set_from_elements({0, 1}), set_from_elements({0, 3}),
          set_from_elements({1, 2}), set_from_elements({2, 3})});
  const auto perm = find_isomorphism(gamma, gamma_perm);
  REQUIRE(perm.has_value());
  // Verify the permutation maps bases onto bases.
  for (ElemSet b : gamma.bases()) {
    ElemSet image = 0;
    for (int e : set_elements(b)) image |= single((*perm)[e]);
    CHECK(gamma_perm.has_basis(image));
  }
}

TEST_CASE("matroid_from_flats round trips") {
  for (const Matroid& m : small_fixtures()) {
    CHECK(matroid_from_flats(m.n(), m.flats().all()) == m);
  }
  for (const Matroid& m : enumerate_matroids(4)) {
    CHECK(matroid_from_flats(4, m.flats().all()) == m);
  }
  // {∅, {0}, {0,1}} omits the flat {1} of the only candidate matroid.
  CHECK_THROWS_AS(matroid_from_flats(2, {0, 0b01, 0b11}), NotAFlatLattice);
  CHECK_THROWS_AS(matroid_from_flats(2, {0b01}), NotAFlatLattice);
}

TEST_CASE("labeled matroid counts by exhaustive search") {
  CHECK(enumerate_matroids(0).size() == 1);
  CHECK(enumerate_matroids(1).size() == 2);
  CHECK(enumerate_matroids(2).size() == 5);
  // 1 + 7 + 7 + 1 by rank: loops-only, seven rank-1 support choices, duals,
  // and the free matroid.
  CHECK(enumerate_matroids(3).size() == 16);
  CHECK(enumerate_matroids(4).size() == 68);
  // Enumeration is closed under duality.
  const auto all4 = enumerate_matroids(4);
  for (const Matroid& m : all4) {
    CHECK(std::binary_search(all4.begin(), all4.end(), m.dual()));
  }
}

TEST_CASE("non-Pappus bases count") {
  CHECK(fixtures::non_pappus().bases().size() == 76);
  CHECK(fixtures::non_pappus().loops() == 0);
  // Simple: no two elements parallel.
  for (int e = 0; e < 9; ++e) {
    CHECK(fixtures::non_pappus().closure(single(e)) == single(e));
  }
}
