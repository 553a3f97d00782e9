#include <doctest.h>

#include <algorithm>
#include <set>

#include "matquot/enumeration.hpp"
#include "matquot/errors.hpp"
#include "matquot/fixtures.hpp"
#include "matquot/quotient.hpp"

using namespace matquot;

namespace {

Quotient pappus_quotient() {
  const Matroid& p = fixtures::non_pappus();
  return make_quotient(p.deleted(single(8)), p.contracted(single(8)));
}

}  // namespace

TEST_CASE("quotient predicate") {
  const Matroid u23 = Matroid::uniform(2, 3);
  CHECK(is_quotient(u23, u23));
  CHECK(is_quotient(fixtures::non_pappus().deleted(single(8)),
                    fixtures::non_pappus().contracted(single(8))));
  for (int r = 0; r <= 4; ++r) {
    for (int s = 0; s <= 4; ++s) {
      CHECK(is_quotient(Matroid::uniform(r, 4), Matroid::uniform(s, 4)) == (s <= r));
    }
  }
  CHECK_THROWS_AS(is_quotient(u23, Matroid::uniform(1, 2)), GroundSetMismatch);
}

TEST_CASE("deletion-contraction pairs are always quotients (exhaustive n<=4)") {
  for (const Matroid& m : enumerate_matroids(4)) {
    for (int e = 0; e < 4; ++e) {
      CHECK(is_quotient(m.deleted(single(e)), m.contracted(single(e))));
    }
  }
}

TEST_CASE("subset nullity") {
  const Quotient uq =
      make_quotient(Matroid::uniform(4, 6), Matroid::uniform(2, 6));
  CHECK(subset_nullity(uq, 0) == 0);
  CHECK(subset_nullity(uq, full_set(6)) == 2);
  const Quotient pq = pappus_quotient();
  // The parallel class {2,6} of the contraction, 0-indexed {1,5}.
  CHECK(subset_nullity(pq, set_from_elements({1, 5})) == 1);
  // Monotone.
  for (ElemSet a = 0;; ++a) {
    for (int x : set_elements(full_set(8) & ~a)) {
      CHECK(subset_nullity(pq, a | single(x)) >= subset_nullity(pq, a));
    }
    if (a == full_set(8)) break;
  }
}

TEST_CASE("Higgs lifts of uniform quotients are uniform") {
  const Quotient q = make_quotient(Matroid::uniform(5, 7), Matroid::uniform(2, 7));
  CHECK(higgs_lift(q, 0) == q.bottom);
  CHECK(higgs_lift(q, 3) == q.top);
  for (int i = 0; i <= 3; ++i) {
    CHECK(higgs_lift(q, i) == Matroid::uniform(2 + i, 7));
    CHECK(higgs_lift(q, i).rank() - q.bottom.rank() == i);
  }
  CHECK_THROWS_AS(higgs_lift(q, 4), IndexOutOfRange);
}

TEST_CASE("rank-formula lift equals the flats-family construction (exhaustive n<=4)") {
  const auto all = enumerate_matroids(4);
  const auto verdicts = quotient_pair_scan(all, par::Policy::kSerial);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!verdicts[i * all.size() + j]) continue;
      const Quotient q{all[i], all[j]};
      for (int t = 0; t <= q.nullity(); ++t) {
        CHECK(higgs_lift(q, t) == higgs_lift_via_flats(q, t));
      }
    }
  }
}

TEST_CASE("Higgs factorization") {
  const Quotient trivial = make_quotient(Matroid::uniform(2, 4), Matroid::uniform(2, 4));
  CHECK(higgs_factorization(trivial).steps.size() == 1);

  const Quotient u = make_quotient(Matroid::uniform(3, 4), Matroid::uniform(1, 4));
  const Factorization f = higgs_factorization(u);
  REQUIRE(f.steps.size() == 3);
  CHECK(f.steps[0] == Matroid::uniform(3, 4));
  CHECK(f.steps[1] == Matroid::uniform(2, 4));
  CHECK(f.steps[2] == Matroid::uniform(1, 4));

  CHECK(higgs_factorization(pappus_quotient()).steps.size() == 2);
}

TEST_CASE("elementary cut") {
  const Quotient u = make_quotient(Matroid::uniform(3, 5), Matroid::uniform(2, 5));
  CHECK(elementary_cut(u).members() == std::vector<ElemSet>{full_set(5)});
  CHECK_THROWS_AS(
      elementary_cut(make_quotient(Matroid::uniform(2, 4), Matroid::uniform(2, 4))),
      NotElementary);
  // The extension-then-contraction round trip recovers the bottom.
  const Quotient pq = pappus_quotient();
  const ModularCut cut = elementary_cut(pq);
  const auto minimal = cut.minimal_members();
  CHECK(std::find(minimal.begin(), minimal.end(), set_from_elements({1, 5})) !=
        minimal.end());
  CHECK(std::find(minimal.begin(), minimal.end(), set_from_elements({2, 4})) !=
        minimal.end());
  CHECK(extend(pq.top, cut, "e").contracted(single(8)) == pq.bottom);
}

TEST_CASE("Higgs major") {
  const Quotient q = make_quotient(Matroid::uniform(4, 6), Matroid::uniform(1, 6));
  const Major h = higgs_major(q);
  CHECK(h.h == Matroid::uniform(4, 9));
  CHECK(h.new_elements == std::vector<int>{6, 7, 8});
  CHECK(major_top(h) == q.top);
  CHECK(major_bottom(h) == q.bottom);

  // Trivial quotient: no new elements.
  const Major id = higgs_major(make_quotient(Matroid::uniform(2, 4), Matroid::uniform(2, 4)));
  CHECK(id.new_elements.empty());
  CHECK(id.h == Matroid::uniform(2, 4));

  // The unique major of the deletion->>contraction quotient is the matroid
  // we started from.
  const Major ph = higgs_major(pappus_quotient());
  const auto perm = find_isomorphism(ph.h, fixtures::non_pappus());
  REQUIRE(perm.has_value());
  CHECK((*perm)[8] == 8);
}

TEST_CASE("Kennedy maps on uniform quotients") {
  const Quotient q = make_quotient(Matroid::uniform(4, 5), Matroid::uniform(1, 5));
  const Factorization f = higgs_factorization(q);
  const Major m = major_from_factorization(f);
  CHECK(m == higgs_major(q));
  CHECK(factorization_from_major(m) == f);
}

TEST_CASE("single-step factorizations give the unique elementary major") {
  const Quotient q = make_quotient(Matroid::uniform(3, 6), fixtures::gamma_matroid(6));
  Factorization f;
  f.steps = {q.top, q.bottom};
  CHECK(major_from_factorization(f) == higgs_major(q));
}

TEST_CASE("factorizations of U_{3,4} ->> U_{1,4} via elementary enumeration") {
  const Quotient q = make_quotient(Matroid::uniform(3, 4), Matroid::uniform(1, 4));
  const auto factorizations = enumerate_factorizations(q);
  CHECK(!factorizations.empty());
  bool found_non_higgs = false;
  const Factorization higgs = higgs_factorization(q);
  for (const Factorization& f : factorizations) {
    const Major m = major_from_factorization(f);
    CHECK(major_top(m) == q.top);
    CHECK(major_bottom(m) == q.bottom);
    CHECK(factorization_from_major(m) == f);
    if (!(f == higgs)) {
      found_non_higgs = true;
      CHECK_FALSE(m == higgs_major(q));
    }
  }
  CHECK(std::find(factorizations.begin(), factorizations.end(), higgs) !=
        factorizations.end());
  CHECK(found_non_higgs);
}

TEST_CASE("elementary quotient enumeration") {
  CHECK(enumerate_elementary_quotients(Matroid::uniform(1, 1)) ==
        std::vector<Matroid>{Matroid::uniform(0, 1)});
  const auto list = enumerate_elementary_quotients(Matroid::uniform(2, 3));
  // Six modular cuts in total; dropping the coloop and loop cuts leaves the
  // four that induce elementary quotients, one matroid each.
  CHECK(enumerate_modular_cuts(Matroid::uniform(2, 3)).size() == 6);
  CHECK(list.size() == 4);
  for (const Matroid& m : list) {
    CHECK(is_quotient(Matroid::uniform(2, 3), m));
    CHECK(m.rank() == 1);
  }
  CHECK(std::find(list.begin(), list.end(), Matroid::uniform(1, 3)) != list.end());
  int rank1_with_loop = 0;
  for (const Matroid& m : list) {
    if (m.loops() != 0) ++rank1_with_loop;
  }
  CHECK(rank1_with_loop == 3);
}

TEST_CASE("flats covered by nullity + 1 (exhaustive n<=4)") {
  const auto all = enumerate_matroids(4);
  const auto verdicts = quotient_pair_scan(all, par::Policy::kSerial);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!verdicts[i * all.size() + j]) continue;
      const Quotient q{all[i], all[j]};
      const auto flats = q.top.flats().all();
      for (ElemSet fl : flats) {
        const bool closed_in_bottom = q.bottom.is_flat(fl);
        bool covered_by_higher_nullity = false;
        const int rf = q.top.rank_of(fl);
        for (ElemSet g : flats) {
          if (g != fl && subset_of(fl, g) && q.top.rank_of(g) == rf + 1 &&
              subset_nullity(q, g) == subset_nullity(q, fl) + 1) {
            covered_by_higher_nullity = true;
            break;
          }
        }
        CHECK(closed_in_bottom == !covered_by_higher_nullity);
      }
    }
  }
}

TEST_CASE("every elementary major is recovered exactly by M after F") {
  // With the new element at the tail, M(F(H)) lives on the same ground set;
  // uniqueness of elementary majors forces equality.
  for (int total = 2; total <= 4; ++total) {
    for (const Matroid& h : enumerate_matroids(total)) {
      const int e = total - 1;
      const Major major{h, {e}};
      if (major_top(major).rank() - major_bottom(major).rank() != 1) continue;
      const Major again = major_from_factorization(factorization_from_major(major));
      CHECK(again == major);
    }
  }
}

TEST_CASE("M after F is a coclosure on two-element majors") {
  // Nullity-2 majors with K at the tail: F forgets how the two added
  // elements interact, so M(F(H)) sits below H in the weak order and the
  // composite is idempotent.
  int majors = 0, strict_drops = 0;
  for (const Matroid& h : enumerate_matroids(4)) {
    const Major major{h, {2, 3}};
    const Matroid top = major_top(major);
    const Matroid bottom = major_bottom(major);
    if (top.rank() - bottom.rank() != 2) continue;
    ++majors;
    const Major again = major_from_factorization(factorization_from_major(major));
    CHECK(weak_leq(again.h, h));
    if (!(again.h == h)) ++strict_drops;
    CHECK(major_from_factorization(factorization_from_major(again)) == again);
  }
  CHECK(majors > 0);
  // F is not injective: some major is strictly coarsened by the composite.
  CHECK(strict_drops > 0);
}

TEST_CASE("flag matroids") {
  const FlagMatroid flag{{Matroid::uniform(3, 4), Matroid::uniform(2, 4),
                          Matroid::uniform(1, 4)}};
  const auto [fact, major] = flag_higgs(flag);
  CHECK(fact.steps.size() == 3);
  CHECK(major.h == Matroid::uniform(3, 6));

  const FlagMatroid single_step{{Matroid::uniform(3, 5), Matroid::uniform(1, 5)}};
  const auto [f2, m2] = flag_higgs(single_step);
  const Quotient q = make_quotient(Matroid::uniform(3, 5), Matroid::uniform(1, 5));
  CHECK(f2 == higgs_factorization(q));
  CHECK(m2 == higgs_major(q));

  const Matroid u = Matroid::uniform(2, 3);
  const auto [f3, m3] = flag_higgs(FlagMatroid{{u, u, u}});
  CHECK(f3.steps.size() == 1);
  CHECK(m3.new_elements.empty());

  CHECK_THROWS_AS(
      flag_higgs(FlagMatroid{{Matroid::uniform(1, 3), Matroid::uniform(2, 3)}}),
      InvalidFlag);
}

TEST_CASE("flag Higgs factorization differs from the endpoint quotient's in general") {
  // A non-uniform middle step changes the concatenated factorization.
  const Matroid u34 = Matroid::uniform(3, 4);
  const Matroid gamma = fixtures::gamma_matroid(4);
  const Matroid u04 = Matroid::uniform(0, 4);
  const FlagMatroid flag{{u34, gamma, u04}};
  const auto [fact, major] = flag_higgs(flag);
  REQUIRE(fact.steps.size() == 4);
  CHECK(fact.steps[1] == gamma);
  CHECK(major_top(major) == u34);
  CHECK(major_bottom(major) == u04);
  // The endpoint quotient's own Higgs factorization passes through U_{2,4}
  // instead of the parallel-class matroid.
  const Factorization own =
      higgs_factorization(make_quotient(u34, u04));
  CHECK(own.steps[1] == Matroid::uniform(2, 4));
  CHECK_FALSE(fact == own);
}
