#include "skm/finite.hpp"
#include "skm/laws.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace skm;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int reps, const std::function<void(Exec)>& f) {
  const double s = best_of(reps, [&] { f(Exec::Serial); });
  const double p = best_of(reps, [&] { f(Exec::Parallel); });
  std::printf("%-34s %10.4f %10.4f %7.2fx\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial versus parallel kernel timings"};
  int reps = 3;
  std::uint32_t modulus = 210;
  app.add_option("--reps", reps, "repetitions per kernel, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--modulus", modulus, "order of Z/m for the ring kernels")->check(CLI::Range(2U, 4096U));
  CLI11_PARSE(app, argc, argv);

  const auto r = zmod(modulus);
  const auto fs = expand_strongly_regular(zmod(210));
  const TableStructure ts(fs);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "parallel s", "speedup");
  row("ring axioms", reps, [&](Exec e) { (void)find_ring_violation(r.tables(), e); });
  row("regularity flags", reps, [&](Exec e) { (void)check_regularity(r, e); });
  row("unique inverse", reps, [&](Exec e) { (void)verify_unique_inverse(fs, e); });
  row("semigroup properties", reps, [&](Exec e) { (void)check_semigroup_props(fs, e); });
  row("DerivedProps exhaustive", reps,
      [&](Exec e) { (void)run_suite(derived_props_catalog(), ts, Mode::exhaustive(), e); });
  const QuaternionField h;
  row("DerivedProps random on h0", reps,
      [&](Exec e) { (void)run_suite(derived_props_catalog(), h, Mode::random(0, 2000), e); });
  return 0;
}
