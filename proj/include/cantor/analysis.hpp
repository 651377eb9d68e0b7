#ifndef CANTOR_ANALYSIS_HPP
#define CANTOR_ANALYSIS_HPP

#include "cantor/families.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cantor {

struct GapStatistics {
  unsigned stage = 0;
  std::size_t count = 0;
  Rational min_gap;
  Rational max_gap;
  Rational total_gap;
  std::vector<std::pair<Rational, std::size_t>> histogram;  // (length, multiplicity)
};

/// log(map_count) / log(ratio_reciprocal), kept exact as the integer pair
/// plus a decimal approximation. For K maps of common ratio 1/R.
struct DimensionResult {
  unsigned map_count = 0;
  unsigned ratio_reciprocal = 0;
  double value = 0.0;
  std::string decimal;
};

DimensionResult hausdorff_dimension(unsigned map_count, unsigned ratio_reciprocal,
                                    unsigned precision = 6);

/// Dimension of a family's limit set. Thin families use the log formula;
/// a middle-alpha set with p/q < 1/3 has positive measure, hence dimension
/// exactly 1.
DimensionResult family_dimension(const FamilySpec& spec, unsigned precision = 6);

/// Exact histogram of the open complement of s inside hull.
GapStatistics gap_statistics(const IntervalSet& s, const ClosedInterval& hull,
                             unsigned stage = 0);

/// Finite-stage thickness surrogate: over every interior gap G (a gap
/// between two components), take the shorter of the two bridges flanking G
/// divided by |G|, where a bridge runs from the gap edge to the nearest gap
/// of length >= |G| or to the hull boundary; return the minimum ratio.
/// This is an artifact-defined proxy, not Astels' or Newhouse's thickness.
Rational thickness_proxy(const IntervalSet& s, const ClosedInterval& hull);

/// Stage-n set of a intersected with the stage-n set of b translated by t,
/// plus its total length.
std::pair<IntervalSet, Rational> translate_intersection(const FamilySpec& a,
                                                        const FamilySpec& b,
                                                        const Rational& t, unsigned n);

struct SweepRow {
  Rational t;
  Rational length;
  std::size_t components = 0;
};

/// Serial reference for the offset sweep (kernels::intersection_sweep is
/// the parallel variant).
std::vector<SweepRow> intersection_sweep(const FamilySpec& a, const FamilySpec& b,
                                         const std::vector<Rational>& offsets,
                                         unsigned n);

}  // namespace cantor

#endif
