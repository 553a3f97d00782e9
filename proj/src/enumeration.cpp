#include "matquot/enumeration.hpp"

#include <algorithm>
#include <set>

#include "matquot/errors.hpp"
#include "matquot/quotient.hpp"

namespace matquot {

std::vector<Matroid> enumerate_matroids(int n) {
  if (n < 0 || n > 6) throw TooLarge("matroid enumeration is supported for n <= 6");
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    const std::vector<ElemSet> r_sets = k_subsets(n, r);
    const std::size_t count = r_sets.size();
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << count); ++pick) {
      std::vector<ElemSet> bases;
      for (std::size_t t = 0; t < count; ++t) {
        if ((pick >> t) & 1) bases.push_back(r_sets[t]);
      }
      if (!exchange_violation(bases)) {
        out.push_back(Matroid::trusted(n, std::move(bases)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModularCut> enumerate_modular_cuts(const Matroid& m) {
  // Every modular cut is the closure of its antichain of minimal members, so
  // enumerating antichains of the flat lattice and closing them is exhaustive.
  std::vector<ElemSet> flats = m.flats().all();
  std::sort(flats.begin(), flats.end());
  const std::size_t f = flats.size();
  if (f > 40) throw TooLarge("matroid has " + std::to_string(f) + " flats");

  std::set<std::vector<ElemSet>> families;
  families.insert(std::vector<ElemSet>{});  // the empty cut (coloop extension)
  std::vector<ElemSet> antichain;
  std::size_t visited = 0;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (++visited > 2'000'000) throw TooLarge("too many antichains of flats");
    if (!antichain.empty()) {
      families.insert(cut_generated_by(m, antichain).members());
    }
    for (std::size_t i = start; i < f; ++i) {
      bool comparable = false;
      for (ElemSet g : antichain) {
        if (subset_of(g, flats[i]) || subset_of(flats[i], g)) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      antichain.push_back(flats[i]);
      self(self, i + 1);
      antichain.pop_back();
    }
  };
  dfs(dfs, 0);

  std::vector<ModularCut> out;
  out.reserve(families.size());
  for (const auto& members : families) out.emplace_back(m, members);
  return out;
}

namespace {

void extend_chains(const Matroid& current, const Matroid& bottom,
                   std::vector<Matroid>& chain, std::vector<Factorization>& out) {
  if (current.rank() == bottom.rank()) {
    if (current == bottom) {
      Factorization f;
      f.steps = chain;
      out.push_back(std::move(f));
    }
    return;
  }
  for (const Matroid& next : enumerate_elementary_quotients(current)) {
    if (next.rank() != current.rank() - 1) continue;
    if (!is_quotient(next, bottom)) continue;
    chain.push_back(next);
    extend_chains(next, bottom, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<Factorization> enumerate_factorizations(const Quotient& q) {
  std::vector<Factorization> out;
  std::vector<Matroid> chain{q.top};
  extend_chains(q.top, q.bottom, chain, out);
  return out;
}

std::vector<char> quotient_pair_scan(const std::vector<Matroid>& list,
                                     par::Policy policy) {
  const std::size_t n = list.size();
  std::vector<char> verdict(n * n, 0);
  // Flats and circuits of each matroid are reused across all pairs.
  std::vector<std::vector<ElemSet>> flats(n), circuits(n);
  par::parallel_for(
      n,
      [&](std::size_t i) {
        auto fl = list[i].flats().all();
        std::sort(fl.begin(), fl.end());
        flats[i] = std::move(fl);
        circuits[i] = list[i].circuits();
      },
      policy);
  std::vector<char> disagreement(n * n, 0);
  par::parallel_for(
      n * n,
      [&](std::size_t idx) {
        const std::size_t i = idx / n, j = idx % n;
        const Matroid& bottom = list[j];
        bool by_flats = true;
        for (ElemSet fb : flats[j]) {
          if (!std::binary_search(flats[i].begin(), flats[i].end(), fb)) {
            by_flats = false;
            break;
          }
        }
        bool by_circuits = true;
        for (ElemSet c : circuits[i]) {
          if (!bottom.is_cycle(c)) {
            by_circuits = false;
            break;
          }
        }
        disagreement[idx] = by_flats != by_circuits;
        verdict[idx] = by_flats ? 1 : 0;
      },
      policy);
  // Exceptions must not escape the parallel region; report afterwards.
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    if (disagreement[idx]) {
      throw std::logic_error("quotient criteria disagree in pair scan at index " +
                             std::to_string(idx));
    }
  }
  return verdict;
}

}  // namespace matquot
