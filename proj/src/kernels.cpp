#include "cantor/kernels.hpp"

#include <stdexcept>

namespace cantor::kernels {

EndpointTable gamma3_endpoint_table(unsigned p, unsigned q, unsigned n) {
  validate(Gamma3{p, q});
  if (n > 20) {
    throw std::invalid_argument("gamma3_endpoint_table: full tables are limited to n <= 20");
  }
  std::vector<Rational> deltas(n + 1);
  for (unsigned m = 1; m <= n; ++m) deltas[m] = gamma3_delta(p, q, m);

  // Level-by-level expansion of the recursion; every slot of a level depends
  // only on one parent slot, so each level is a parallel map. 0-based slot i
  // has parent i/2; even i is the odd (left) child, odd i the even (right).
  std::vector<std::pair<Rational, Rational>> level{{Rational(0), Rational(1)}};
  for (unsigned m = 1; m <= n; ++m) {
    const long long width = 1ll << m;
    std::vector<std::pair<Rational, Rational>> next(width);
    const Rational& delta = deltas[m];
#pragma omp parallel for schedule(static) if (width >= 1024)
    for (long long i = 0; i < width; ++i) {
      const auto& [pa, pb] = level[i / 2];
      next[i] = (i % 2 == 0) ? std::pair{pa, pb - delta} : std::pair{pa + delta, pb};
    }
    level = std::move(next);
  }

  EndpointTable table;
  table.stage = n;
  table.rows = std::move(level);
  return table;
}

IntervalSet digit_stage_by_addresses(const DigitIFS& spec, unsigned n) {
  validate(spec);
  const unsigned K = static_cast<unsigned>(spec.alphabet.size());
  long long count = 1;
  for (unsigned m = 0; m < n; ++m) {
    if (count > (1ll << 22) / static_cast<long long>(K)) {
      throw std::invalid_argument("digit_stage_by_addresses: too many addresses");
    }
    count *= K;
  }

  std::vector<ClosedInterval> parts(count, ClosedInterval(Rational(0), Rational(0)));
  Rational width = pow(Rational(BigInt(1), BigInt(spec.base)), n);

#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    // Mixed-radix decode of the address, last digit first: the left
    // endpoint is (sum_j d_j base^(n-j)) / base^n. Lexicographic address
    // order is already sorted by left endpoint.
    BigInt numerator = 0;
    BigInt scale = 1;
    long long rem = i;
    for (unsigned pos = 0; pos < n; ++pos) {
      numerator += BigInt(spec.alphabet[rem % K]) * scale;
      rem /= K;
      scale *= spec.base;
    }
    Rational lo(std::move(numerator), scale);
    parts[i] = ClosedInterval(lo, lo + width);
  }
  return normalize(std::move(parts));
}

std::vector<CdfSample> staircase_samples(const FamilySpec& spec, const WeightVector& w,
                                         unsigned sample_count, unsigned n) {
  if (sample_count < 2) {
    throw std::invalid_argument("staircase_samples requires at least 2 samples");
  }
  // Anything that can throw must do so before the parallel region.
  validate(spec);
  if (w.size() != map_count(spec)) {
    throw std::invalid_argument("staircase_samples: weight count does not match map count");
  }
  std::vector<CdfSample> rows(sample_count);

#pragma omp parallel for schedule(dynamic)
  for (long long j = 0; j < static_cast<long long>(sample_count); ++j) {
    Rational x{BigInt(j), BigInt(sample_count - 1)};
    CdfBound bound = cdf_bounds(spec, w, x, n);
    rows[j] = {std::move(x), std::move(bound.lower), std::move(bound.upper)};
  }
  return rows;
}

std::vector<SweepRow> intersection_sweep(const FamilySpec& a, const FamilySpec& b,
                                         const std::vector<Rational>& offsets,
                                         unsigned n) {
  const IntervalSet stage_a = stage_set(a, n);
  const IntervalSet stage_b = stage_set(b, n);
  std::vector<SweepRow> rows(offsets.size());

#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(offsets.size()); ++i) {
    IntervalSet cut = intersect(stage_a, translate(stage_b, offsets[i]));
    rows[i] = {offsets[i], total_length(cut), cut.component_count()};
  }
  return rows;
}

}  // namespace cantor::kernels
