#ifndef CANTOR_INTERVAL_SET_HPP
#define CANTOR_INTERVAL_SET_HPP

#include "cantor/rational.hpp"

#include <vector>

namespace cantor {

/// Closed interval [lo, hi] with rational endpoints. Degenerate point
/// intervals (lo == hi) are allowed.
struct ClosedInterval {
  Rational lo;
  Rational hi;

  ClosedInterval(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Open interval (lo, hi), lo < hi. The deleted pieces of a construction.
struct Gap {
  Rational lo;
  Rational hi;

  Gap(Rational lo_, Rational hi_);

  Rational length() const { return hi - lo; }

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Sorted list of pairwise-disjoint open intervals. Gaps may touch at a
/// point (they are disjoint as open sets) but must not overlap.
class GapList {
public:
  GapList() = default;
  explicit GapList(std::vector<Gap> gaps);

  const std::vector<Gap>& gaps() const { return gaps_; }
  bool empty() const { return gaps_.empty(); }
  std::size_t size() const { return gaps_.size(); }
  auto begin() const { return gaps_.begin(); }
  auto end() const { return gaps_.end(); }

  Rational total_length() const;

  friend bool operator==(const GapList&, const GapList&) = default;

private:
  std::vector<Gap> gaps_;
};

/// Canonical finite union of disjoint closed intervals: components are
/// sorted and strictly separated (previous.hi < next.lo); touching or
/// overlapping inputs are merged on construction. Equal sets therefore
/// have identical representations, which is what the cross-representation
/// oracle relies on.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(ClosedInterval iv) : parts_{std::move(iv)} {}

  /// [0, 1].
  static IntervalSet unit();

  const std::vector<ClosedInterval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t component_count() const { return parts_.size(); }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
  friend IntervalSet normalize(std::vector<ClosedInterval> raw);
  friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
  friend IntervalSet subtract_gaps(const IntervalSet& base, const GapList& gaps);
  friend IntervalSet translate(const IntervalSet& s, const Rational& t);
  friend IntervalSet reflect(const IntervalSet& s, const Rational& c);

  struct canonical {};
  IntervalSet(std::vector<ClosedInterval> parts, canonical) : parts_(std::move(parts)) {}

  std::vector<ClosedInterval> parts_;
};

/// Sort and merge arbitrary closed intervals into canonical form.
IntervalSet normalize(std::vector<ClosedInterval> raw);

/// Exact set intersection.
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

/// Remove a union of open gaps; endpoints of removed gaps survive as
/// closed (possibly degenerate) remainders.
IntervalSet subtract_gaps(const IntervalSet& base, const GapList& gaps);

/// Sum of component lengths. Point components count zero.
Rational total_length(const IntervalSet& s);

/// Open complement of s inside hull. Throws std::invalid_argument if s is
/// not contained in hull.
GapList gaps_within(const IntervalSet& s, const ClosedInterval& hull);

IntervalSet translate(const IntervalSet& s, const Rational& t);

/// Image of s under x -> c - x (c = 1 reflects within the unit interval).
IntervalSet reflect(const IntervalSet& s, const Rational& c = Rational(1));

bool contains_point(const IntervalSet& s, const Rational& x);

}  // namespace cantor

#endif
