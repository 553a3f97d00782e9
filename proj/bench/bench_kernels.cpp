// Compares the OpenMP kernels against their serial reference implementations
// and verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "matquot/enumeration.hpp"
#include "matquot/exact_matrix.hpp"
#include "matquot/parallel.hpp"
#include "matquot/rng.hpp"
#include "matquot/tropical.hpp"

using namespace matquot;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
              name, serial, parallel, serial / parallel,
              equal ? "outputs equal" : "OUTPUTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) par::set_jobs(std::atoi(argv[1]));
#ifdef _OPENMP
  std::printf("OpenMP enabled, jobs=%d (0 = library default)\n", par::jobs());
#else
  std::printf("OpenMP not available; both paths run serially\n");
#endif

  {
    SplitMix64 rng(1);
    ExactMatrix a(6, 16, Field::rationals());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = Scalar::from_int(Field::rationals(), rng.next_int(-50, 50));
    PluckerMap ps, pp;
    const double ts = seconds([&] { ps = plucker_serial(a); });
    const double tp = seconds([&] { pp = plucker(a, par::Policy::kParallel); });
    bool equal = ps.coords.size() == pp.coords.size();
    for (std::size_t i = 0; equal && i < ps.coords.size(); ++i) {
      equal = ps.coords[i] == pp.coords[i];
    }
    report("plucker 6x16 (8008 minors)", ts, tp, equal);
  }

  {
    const auto all = enumerate_matroids(5);
    std::vector<char> vs, vp;
    const double ts = seconds([&] { vs = quotient_pair_scan(all, par::Policy::kSerial); });
    const double tp = seconds([&] { vp = quotient_pair_scan(all, par::Policy::kParallel); });
    report("quotient scan n=5 (406^2)", ts, tp, vs == vp);
  }

  {
    SplitMix64 rng(2);
    const Matroid m = Matroid::uniform(4, 10);
    std::vector<TropicalPoint> pts;
    for (int t = 0; t < 200000; ++t) {
      std::vector<mpq_class> coords;
      for (int i = 0; i < 10; ++i) coords.emplace_back(rng.next_int(-8, 8));
      pts.push_back(make_tropical_point(std::move(coords)));
    }
    std::vector<char> vs, vp;
    const double ts =
        seconds([&] { vs = trop_membership_batch(m, pts, par::Policy::kSerial); });
    const double tp =
        seconds([&] { vp = trop_membership_batch(m, pts, par::Policy::kParallel); });
    report("tropical batch 200k points", ts, tp, vs == vp);
  }
  return 0;
}
