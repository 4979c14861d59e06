// Benchmark comparing the serial reference kernels against the OpenMP ones.
// Each kernel is run on the same grid with both policies; the outputs must be
// bit-identical, only the wall time differs.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lgsim/sweep.hpp"

using namespace lgsim;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0, std::chrono::steady_clock::now());
}

bool identical(const std::vector<LGResult>& a, const std::vector<LGResult>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::memcmp(&a[i].k3, &b[i].k3, sizeof(double)) != 0 ||
        std::memcmp(&a[i].k3_prime, &b[i].k3_prime, sizeof(double)) != 0)
      return false;
  return true;
}

void report(const char* name, int cells, double serial, double parallel, bool same) {
  std::printf("%-22s %9d cells   serial %8.3f s   openmp %8.3f s   speedup %5.2fx   identical %s\n",
              name, cells, serial, parallel, serial / parallel, same ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both runs are serial\n");
#endif
  constexpr double pi = std::numbers::pi;
  const NoiseChannel rtn_nm = RtnParams(0.05, 0.001);

  {
    const GridSpec grid{Range::open_closed(0.0, 3000.0, 20000), Range::closed(-pi, pi, 81),
                        Range::fixed(0.0)};
    std::vector<LGResult> serial_out, parallel_out;
    const double ts = timed([&] { serial_out = evaluate_grid(rtn_nm, grid, ExecutionPolicy::Serial); });
    const double tp = timed([&] { parallel_out = evaluate_grid(rtn_nm, grid, ExecutionPolicy::Parallel); });
    report("closed-form grid", grid.cells(), ts, tp, identical(serial_out, parallel_out));
  }

  {
    const GridSpec grid{Range::fixed(10.5), Range::closed(-pi, pi, 181),
                        Range::closed(-pi / 2, pi / 2, 181)};
    const DensityMatrix rho0 = DensityMatrix::plus();
    std::vector<LGResult> serial_out, parallel_out;
    const double ts =
        timed([&] { serial_out = evaluate_grid_chain(rtn_nm, grid, rho0, ExecutionPolicy::Serial); });
    const double tp =
        timed([&] { parallel_out = evaluate_grid_chain(rtn_nm, grid, rho0, ExecutionPolicy::Parallel); });
    report("measurement-chain grid", grid.cells(), ts, tp, identical(serial_out, parallel_out));
  }

  {
    const std::vector<OracleTuple> tuples = random_tuples(rtn_nm, 20000, 99);
    OracleReport rs, rp;
    const double ts = timed([&] { rs = oracle_scan(rtn_nm, tuples, ExecutionPolicy::Serial); });
    const double tp = timed([&] { rp = oracle_scan(rtn_nm, tuples, ExecutionPolicy::Parallel); });
    const bool same = std::memcmp(&rs.max_dev_closed, &rp.max_dev_closed, sizeof(double)) == 0 &&
                      rs.worst_index == rp.worst_index;
    report("oracle scan", rs.samples, ts, tp, same);
  }
  return 0;
}
