// SPDX-License-Identifier: Apache-2.0
// Benchmark of the OpenMP counting kernels against the serial reference.
// Both paths must agree bit-for-bit; the table reports times and speedup.
#include <chrono>
#include <cstdio>

#include "lapmult/parallel.hpp"
#include "lapmult/spectra.hpp"
#include "lapmult/witness.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using lapmult::Exact;
using lapmult::Int;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& fn) {
  auto t0 = Clock::now();
  fn();
  return seconds(t0, Clock::now());
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-36s %9.3fs %9.3fs %6.2fx  %s\n", name, serial, parallel,
              serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  using namespace lapmult;
  std::printf("%-36s %10s %10s %7s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    qform::Form f{1, 1, 1};
    Int nmax(200000);
    std::map<long, long> hs, hp;
    parallel::set_enabled(false);
    double ts = timed([&] { hs = witness::multiplicity_histogram(f, nmax); });
    parallel::set_enabled(true);
    double tp = timed([&] { hp = witness::multiplicity_histogram(f, nmax); });
    report("histogram (1,1,1) n<=200000", ts, tp, hs == hp);
  }
  {
    auto spec = spectra::make_torus(Exact::parse("1/2"), Exact::parse("1"));
    Int nmax(100000);
    std::set<long> ss, sp;
    parallel::set_enabled(false);
    double ts = timed([&] { ss = spectra::multiplicity_set_sample(spec, nmax); });
    parallel::set_enabled(true);
    double tp = timed([&] { sp = spectra::multiplicity_set_sample(spec, nmax); });
    report("sample hexagonal n<=100000", ts, tp, ss == sp);
  }
  {
    auto spec = spectra::make_torus(Exact::parse("sqrt(2)"),
                                    Exact::parse("2+sqrt(2)"));
    Int box(24);
    std::set<long> ss, sp;
    parallel::set_enabled(false);
    double ts = timed([&] { ss = spectra::multiplicity_set_sample(spec, box); });
    parallel::set_enabled(true);
    double tp = timed([&] { sp = spectra::multiplicity_set_sample(spec, box); });
    report("irrational sample box 24", ts, tp, ss == sp);
  }
  {
    qform::Form f{2, 1, 3};
    Int n = Int("2144476897");  // 3 * 59^5
    long rs = 0, rp = 0;
    parallel::set_enabled(false);
    double ts = timed([&] { rs = repcount::count_R(f, n); });
    parallel::set_enabled(true);
    double tp = timed([&] { rp = repcount::count_R(f, n); });
    report("count_R (2,1,3) at 3*59^5", ts, tp, rs == rp);
  }
  parallel::set_enabled(true);
  return 0;
}
