// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "eqclass/core.hpp"
#include "eqclass/families.hpp"
#include "eqclass/minor.hpp"
#include "eqclass/monoid.hpp"

#ifdef EQCLASS_HAVE_OPENMP
#include <omp.h>
#endif

using namespace eqclass;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name.c_str(), serial,
              parallel, serial / parallel, same ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial versus parallel kernels"};
  int reps = 3;
  std::uint64_t seed = 7;
  app.add_option("--reps", reps, "Repetitions per kernel")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for random inputs");
  CLI11_PARSE(app, argc, argv);

#ifdef EQCLASS_HAVE_OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::mt19937_64 rng(seed);

  {
    const int n = 12, m = 16;
    std::vector<BooleanFunction> gs;
    for (int k = 0; k < n; ++k) gs.push_back(make_H(m));
    const auto f = make_H(n);
    BooleanFunction a(1), b(1);
    const double s = seconds([&] { a = compose_serial(f, gs); }, reps);
    const double p = seconds([&] { b = compose(f, gs); }, reps);
    row("compose H12(H16,...)", s, p, a == b);
  }
  {
    // The largest of a few random pairs.
    CappedClass x(3), y(3), a(3), b(3);
    for (int t = 0; t < 40; ++t) {
      auto u = random_capped_class(rng, 3, 2, 3), v = random_capped_class(rng, 3, 2, 3);
      if (u.size() * v.size() > x.size() * y.size()) x = u, y = v;
    }
    const double s = seconds([&] { a = compose_classes_serial(x, y); }, reps);
    const double p = seconds([&] { b = compose_classes(x, y); }, reps);
    row("compose_classes cap 3", s, p, a == b);
  }
  {
    std::vector<BooleanFunction> fs;
    for (int n = 4; n <= 8; ++n) fs.push_back(make_f(n));
    for (int n = 4; n <= 8; ++n) fs.push_back(make_g(n));
    for (int n = 4; n <= 7; ++n) fs.push_back(make_u(n));
    AntichainReport a, b;
    const double s = seconds([&] { a = verify_antichain_serial(fs); }, reps);
    const double p = seconds([&] { b = verify_antichain(fs); }, reps);
    row("verify_antichain f, g, u", s, p, a.verdict == b.verdict && a.pairs.size() == b.pairs.size());
  }
  return 0;
}
