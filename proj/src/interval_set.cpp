#include "cantor/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

ClosedInterval::ClosedInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) {
    throw std::invalid_argument("ClosedInterval: lo > hi");
  }
}

Gap::Gap(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) {
    throw std::invalid_argument("Gap: open interval requires lo < hi");
  }
}

GapList::GapList(std::vector<Gap> gaps) : gaps_(std::move(gaps)) {
  std::sort(gaps_.begin(), gaps_.end(),
            [](const Gap& a, const Gap& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < gaps_.size(); ++i) {
    if (gaps_[i].lo < gaps_[i - 1].hi) {
      throw std::invalid_argument("GapList: gaps overlap");
    }
  }
}

Rational GapList::total_length() const {
  Rational sum;
  for (const Gap& g : gaps_) sum += g.length();
  return sum;
}

IntervalSet IntervalSet::unit() {
  return IntervalSet(ClosedInterval(Rational(0), Rational(1)));
}

IntervalSet normalize(std::vector<ClosedInterval> raw) {
  if (raw.empty()) return {};
  std::sort(raw.begin(), raw.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<ClosedInterval> merged;
  merged.reserve(raw.size());
  merged.push_back(raw.front());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    // Touching closed intervals merge: [a,b] u [b,c] = [a,c].
    if (raw[i].lo <= merged.back().hi) {
      if (merged.back().hi < raw[i].hi) merged.back().hi = raw[i].hi;
    } else {
      merged.push_back(raw[i]);
    }
  }
  return IntervalSet(std::move(merged), IntervalSet::canonical{});
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<ClosedInterval> out;
  std::size_t i = 0, j = 0;
  while (i < a.parts_.size() && j < b.parts_.size()) {
    const ClosedInterval& x = a.parts_[i];
    const ClosedInterval& y = b.parts_[j];
    const Rational& lo = max(x.lo, y.lo);
    const Rational& hi = min(x.hi, y.hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    // Advance whichever side ends first; on ties both can advance.
    if (x.hi < y.hi) {
      ++i;
    } else if (y.hi < x.hi) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  // Pieces inherit the strict separation of their parents.
  return IntervalSet(std::move(out), IntervalSet::canonical{});
}

IntervalSet subtract_gaps(const IntervalSet& base, const GapList& gaps) {
  std::vector<ClosedInterval> out;
  const auto& gs = gaps.gaps();
  std::size_t start = 0;  // first gap that can still affect later components
  for (const ClosedInterval& part : base.parts()) {
    while (start < gs.size() && gs[start].hi <= part.lo) ++start;
    Rational cur = part.lo;
    for (std::size_t i = start; i < gs.size() && !(part.hi <= gs[i].lo); ++i) {
      // Removing the open (g.lo, g.hi) keeps both of its endpoints.
      if (cur <= gs[i].lo) {
        out.emplace_back(cur, gs[i].lo);
        cur = gs[i].hi;
      } else if (cur < gs[i].hi) {
        cur = gs[i].hi;  // gap straddles cur
      }
    }
    if (cur <= part.hi) out.emplace_back(cur, part.hi);
  }
  return IntervalSet(std::move(out), IntervalSet::canonical{});
}

Rational total_length(const IntervalSet& s) {
  Rational sum;
  for (const ClosedInterval& iv : s.parts()) sum += iv.length();
  return sum;
}

GapList gaps_within(const IntervalSet& s, const ClosedInterval& hull) {
  if (!s.empty() &&
      (s.parts().front().lo < hull.lo || hull.hi < s.parts().back().hi)) {
    throw std::invalid_argument("gaps_within: set not contained in hull");
  }
  std::vector<Gap> gaps;
  Rational cur = hull.lo;
  for (const ClosedInterval& iv : s.parts()) {
    if (cur < iv.lo) gaps.emplace_back(cur, iv.lo);
    cur = iv.hi;
  }
  if (cur < hull.hi) gaps.emplace_back(cur, hull.hi);
  return GapList(std::move(gaps));
}

IntervalSet translate(const IntervalSet& s, const Rational& t) {
  std::vector<ClosedInterval> out;
  out.reserve(s.parts_.size());
  for (const ClosedInterval& iv : s.parts_) {
    out.emplace_back(iv.lo + t, iv.hi + t);
  }
  return IntervalSet(std::move(out), IntervalSet::canonical{});
}

IntervalSet reflect(const IntervalSet& s, const Rational& c) {
  std::vector<ClosedInterval> out;
  out.reserve(s.parts_.size());
  for (auto it = s.parts_.rbegin(); it != s.parts_.rend(); ++it) {
    out.emplace_back(c - it->hi, c - it->lo);
  }
  return IntervalSet(std::move(out), IntervalSet::canonical{});
}

bool contains_point(const IntervalSet& s, const Rational& x) {
  const auto& parts = s.parts();
  auto it = std::upper_bound(parts.begin(), parts.end(), x,
                             [](const Rational& v, const ClosedInterval& iv) {
                               return v < iv.lo;
                             });
  if (it == parts.begin()) return false;
  return std::prev(it)->contains(x);
}

}  // namespace cantor
