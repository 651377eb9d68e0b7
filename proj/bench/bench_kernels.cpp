// Benchmark: serial reference implementations vs the OpenMP kernels.
// Each pair is also checked for identical output while timing.

#include "cantor/analysis.hpp"
#include "cantor/families.hpp"
#include "cantor/kernels.hpp"
#include "cantor/staircase.hpp"

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

using namespace cantor;

namespace {

struct Case {
  std::string name;
  std::function<bool()> run_pair;  // returns whether outputs matched
};

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-34s %10.3f ms %10.3f ms   x%.2f   %s\n", name.c_str(),
              serial_s * 1e3, parallel_s * 1e3,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              equal ? "outputs equal" : "OUTPUTS DIFFER");
}

bool bench_endpoints(unsigned p, unsigned q, unsigned n) {
  double t0 = omp_get_wtime();
  EndpointTable serial = gamma3_endpoints(p, q, n);
  double t1 = omp_get_wtime();
  EndpointTable parallel = kernels::gamma3_endpoint_table(p, q, n);
  double t2 = omp_get_wtime();
  bool equal = serial.rows == parallel.rows;
  report("endpoint table p=" + std::to_string(p) + " q=" + std::to_string(q) +
             " n=" + std::to_string(n),
         t1 - t0, t2 - t1, equal);
  return equal;
}

bool bench_digit_stage(const DigitIFS& spec, unsigned n) {
  double t0 = omp_get_wtime();
  IntervalSet serial = digit_stage(spec, n);
  double t1 = omp_get_wtime();
  IntervalSet parallel = kernels::digit_stage_by_addresses(spec, n);
  double t2 = omp_get_wtime();
  bool equal = serial == parallel;
  report("digit stage " + to_string(FamilySpec(spec)) + " n=" + std::to_string(n),
         t1 - t0, t2 - t1, equal);
  return equal;
}

bool bench_staircase(unsigned samples, unsigned n) {
  FamilySpec spec = DigitIFS{3, {0, 2}};
  WeightVector w({Rational(BigInt(1), BigInt(3)), Rational(BigInt(2), BigInt(3))});
  double t0 = omp_get_wtime();
  auto serial = staircase_samples(spec, w, samples, n);
  double t1 = omp_get_wtime();
  auto parallel = kernels::staircase_samples(spec, w, samples, n);
  double t2 = omp_get_wtime();
  bool equal = serial.size() == parallel.size();
  for (std::size_t i = 0; equal && i < serial.size(); ++i) {
    equal = serial[i].x == parallel[i].x && serial[i].lower == parallel[i].lower &&
            serial[i].upper == parallel[i].upper;
  }
  report("staircase m=" + std::to_string(samples) + " n=" + std::to_string(n),
         t1 - t0, t2 - t1, equal);
  return equal;
}

bool bench_sweep(unsigned offsets, unsigned n) {
  FamilySpec a = Gamma1{3};
  FamilySpec b = Gamma3{1, 4};
  std::vector<Rational> ts;
  ts.reserve(offsets);
  for (unsigned i = 0; i < offsets; ++i) {
    ts.push_back(Rational(BigInt(2 * (long long)i - offsets + 1), BigInt(offsets - 1)));
  }
  double t0 = omp_get_wtime();
  auto serial = intersection_sweep(a, b, ts, n);
  double t1 = omp_get_wtime();
  auto parallel = kernels::intersection_sweep(a, b, ts, n);
  double t2 = omp_get_wtime();
  bool equal = serial.size() == parallel.size();
  for (std::size_t i = 0; equal && i < serial.size(); ++i) {
    equal = serial[i].t == parallel[i].t && serial[i].length == parallel[i].length &&
            serial[i].components == parallel[i].components;
  }
  report("intersection sweep m=" + std::to_string(offsets) + " n=" + std::to_string(n),
         t1 - t0, t2 - t1, equal);
  return equal;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %13s %13s %7s\n", "case", "serial", "openmp", "speedup");

  bool ok = true;
  if (quick) {
    ok &= bench_endpoints(1, 4, 12);
    ok &= bench_digit_stage(DigitIFS{6, {0, 1, 4, 5}}, 7);
    ok &= bench_staircase(201, 10);
    ok &= bench_sweep(51, 5);
  } else {
    ok &= bench_endpoints(1, 4, 16);
    ok &= bench_endpoints(3, 10, 14);
    ok &= bench_digit_stage(DigitIFS{6, {0, 1, 4, 5}}, 9);
    ok &= bench_digit_stage(DigitIFS{3, {0, 2}}, 14);
    ok &= bench_staircase(2001, 14);
    ok &= bench_sweep(401, 7);
  }
  return ok ? 0 : 1;
}
