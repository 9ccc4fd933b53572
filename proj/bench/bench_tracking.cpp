// Serial reference kernel against the OpenMP kernel for the 6 x 81 line
// homotopy paths, plus the full line solve either way.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "affcubic/lines/homotopy.hpp"
#include "affcubic/lines/lines.hpp"

using namespace affcubic;
using namespace affcubic::lines;

namespace {

template <class F>
double median_ms(F&& f, int reps) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto a = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - a).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  const char* surfaces[] = {
      "x^3+y^3+z^3+w^3",
      "x^3+y^3+z^3+w^3-(x+y+z+w)^3",
      "4*(x^3+y^3+z^3+w^3)-(x+y+z+w)^3-1/100*(x+y+z+w)^3",
  };
  std::printf("threads %d, median of %d runs\n", omp_get_max_threads(), reps);
  std::printf("%-52s %10s %10s %8s %10s %10s\n", "surface", "serial ms", "omp ms", "speedup",
              "solve 1t", "solve omp");
  for (const char* s : surfaces) {
    const Poly f = parse_poly(s);
    const CubicTensor t(f);
    std::vector<ChartTask> tasks;
    for (int c = 0; c < 6; ++c)
      for (int k = 0; k < 81; ++k) tasks.push_back({c, k});
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    std::vector<cd> gammas(6);
    for (auto& g : gammas) g = std::polar(1.0, angle(rng));
    const TrackerOptions opts;

    std::vector<PathResult> a, b;
    const double ts = median_ms([&] { a = track_all_serial(t, tasks, gammas, opts); }, reps);
    const double tp = median_ms([&] { b = track_all_parallel(t, tasks, gammas, opts); }, reps);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].status != b[i].status || a[i].endpoint != b[i].endpoint) {
        std::printf("kernels disagree on path %zu\n", i);
        return 1;
      }
    SolveOptions so;
    so.parallel = false;
    const double ls = median_ms([&] { solve_lines(f, so); }, reps);
    so.parallel = true;
    const double lp = median_ms([&] { solve_lines(f, so); }, reps);
    std::printf("%-52s %10.1f %10.1f %8.2f %10.1f %10.1f\n", s, ts, tp, ts / tp, ls, lp);
  }
}
