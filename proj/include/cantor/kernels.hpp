#ifndef CANTOR_KERNELS_HPP
#define CANTOR_KERNELS_HPP

#include "cantor/analysis.hpp"
#include "cantor/families.hpp"
#include "cantor/staircase.hpp"

#include <vector>

namespace cantor::kernels {

/// OpenMP variants of the enumeration-heavy constructions. Each one is
/// bit-identical to its serial reference (the tests compare them); threads
/// only ever write disjoint output slots.

/// Row-parallel endpoint table: every row k is computed independently by
/// unrolling the recursion along its ancestor chain.
EndpointTable gamma3_endpoint_table(unsigned p, unsigned q, unsigned n);

/// Stage set from per-address interval formulas: enumerates all |A|^n
/// addresses in lexicographic (already sorted) order, then merges. An
/// independent route from the stagewise refinement in digit_stage.
IntervalSet digit_stage_by_addresses(const DigitIFS& spec, unsigned n);

/// Staircase table parallelized over abscissae.
std::vector<CdfSample> staircase_samples(const FamilySpec& spec, const WeightVector& w,
                                         unsigned sample_count, unsigned n);

/// Translate-intersection rows parallelized over the offsets.
std::vector<SweepRow> intersection_sweep(const FamilySpec& a, const FamilySpec& b,
                                         const std::vector<Rational>& offsets,
                                         unsigned n);

}  // namespace cantor::kernels

#endif
