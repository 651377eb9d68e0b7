#include "cantor/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>

namespace cantor {

DimensionResult hausdorff_dimension(unsigned map_count, unsigned ratio_reciprocal,
                                    unsigned precision) {
  if (map_count < 2 || ratio_reciprocal < 2) {
    throw std::invalid_argument("hausdorff_dimension requires K >= 2 and 1/r >= 2");
  }
  if (map_count > ratio_reciprocal) {
    throw std::domain_error("hausdorff_dimension: K > 1/r means overlapping maps");
  }
  DimensionResult result;
  result.map_count = map_count;
  result.ratio_reciprocal = ratio_reciprocal;
  result.value = std::log(static_cast<double>(map_count)) /
                 std::log(static_cast<double>(ratio_reciprocal));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", static_cast<int>(precision), result.value);
  result.decimal = buf;
  return result;
}

DimensionResult family_dimension(const FamilySpec& spec, unsigned precision) {
  validate(spec);
  struct Visitor {
    unsigned precision;
    DimensionResult operator()(const Gamma1& s) const {
      return hausdorff_dimension((s.q + 1) / 2, s.q, precision);
    }
    DimensionResult operator()(const Gamma2& s) const {
      return hausdorff_dimension(2, s.q, precision);
    }
    DimensionResult operator()(const Gamma3& s) const {
      if (3 * s.p == s.q) {
        // The thin case is the middle-third set: two maps of ratio 1/3.
        return hausdorff_dimension(2, 3, precision);
      }
      // Positive Lebesgue measure forces dimension exactly 1.
      DimensionResult result;
      result.map_count = 2;
      result.ratio_reciprocal = 1;
      result.value = 1.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*f", static_cast<int>(precision), 1.0);
      result.decimal = buf;
      return result;
    }
    DimensionResult operator()(const DigitIFS& s) const {
      return hausdorff_dimension(static_cast<unsigned>(s.alphabet.size()), s.base,
                                 precision);
    }
  };
  return std::visit(Visitor{precision}, spec);
}

GapStatistics gap_statistics(const IntervalSet& s, const ClosedInterval& hull,
                             unsigned stage) {
  GapList gaps = gaps_within(s, hull);
  GapStatistics stats;
  stats.stage = stage;
  stats.count = gaps.size();
  stats.total_gap = gaps.total_length();
  std::map<Rational, std::size_t> histogram;
  for (const Gap& g : gaps) ++histogram[g.length()];
  if (!gaps.empty()) {
    stats.min_gap = histogram.begin()->first;
    stats.max_gap = histogram.rbegin()->first;
  }
  stats.histogram.assign(histogram.begin(), histogram.end());
  return stats;
}

Rational thickness_proxy(const IntervalSet& s, const ClosedInterval& hull) {
  if (s.component_count() < 2) {
    throw std::domain_error("thickness_proxy undefined for fewer than 2 components");
  }
  GapList gap_list = gaps_within(s, hull);
  const auto& gaps = gap_list.gaps();

  // Interior gaps separate two components; gaps touching the hull boundary
  // only terminate bridges.
  std::optional<Rational> best;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const Gap& g = gaps[i];
    if (g.lo == hull.lo || g.hi == hull.hi) continue;
    Rational len = g.length();

    Rational left_edge = hull.lo;
    for (std::size_t j = i; j-- > 0;) {
      if (!(gaps[j].length() < len)) {
        left_edge = gaps[j].hi;
        break;
      }
    }
    Rational right_edge = hull.hi;
    for (std::size_t j = i + 1; j < gaps.size(); ++j) {
      if (!(gaps[j].length() < len)) {
        right_edge = gaps[j].lo;
        break;
      }
    }
    Rational ratio = min(g.lo - left_edge, right_edge - g.hi) / len;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  if (!best) {
    throw std::domain_error("thickness_proxy undefined: no interior gaps");
  }
  return *best;
}

std::pair<IntervalSet, Rational> translate_intersection(const FamilySpec& a,
                                                        const FamilySpec& b,
                                                        const Rational& t, unsigned n) {
  IntervalSet result = intersect(stage_set(a, n), translate(stage_set(b, n), t));
  Rational length = total_length(result);
  return {std::move(result), std::move(length)};
}

std::vector<SweepRow> intersection_sweep(const FamilySpec& a, const FamilySpec& b,
                                         const std::vector<Rational>& offsets,
                                         unsigned n) {
  IntervalSet stage_a = stage_set(a, n);
  IntervalSet stage_b = stage_set(b, n);
  std::vector<SweepRow> rows;
  rows.reserve(offsets.size());
  for (const Rational& t : offsets) {
    IntervalSet cut = intersect(stage_a, translate(stage_b, t));
    rows.push_back({t, total_length(cut), cut.component_count()});
  }
  return rows;
}

}  // namespace cantor
