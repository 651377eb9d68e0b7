#include "cantor/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace cantor {

namespace {

// Exact set-difference piece: closed sets minus closed sets have half-open
// remainders, so endpoint membership is tracked explicitly.
struct Piece {
  Rational lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool nonempty() const {
    return lo < hi || (lo == hi && lo_closed && hi_closed);
  }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

std::vector<Piece> difference_pieces(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Piece> out;
  const auto& bs = b.parts();
  std::size_t start = 0;
  for (const ClosedInterval& part : a.parts()) {
    while (start < bs.size() && bs[start].hi < part.lo) ++start;
    Rational cur = part.lo;
    bool cur_closed = true;
    for (std::size_t j = start; j < bs.size() && bs[j].lo <= part.hi; ++j) {
      if (cur < bs[j].lo) {
        Piece piece{cur, bs[j].lo, cur_closed, false};
        if (piece.nonempty()) out.push_back(std::move(piece));
      }
      if (cur <= bs[j].hi) {
        cur = bs[j].hi;
        cur_closed = false;
      }
    }
    if (cur < part.hi || (cur == part.hi && cur_closed)) {
      Piece piece{cur, part.hi, cur_closed, true};
      if (piece.nonempty()) out.push_back(std::move(piece));
    }
  }
  return out;
}

IntervalSet closure_of(const std::vector<Piece>& pieces) {
  std::vector<ClosedInterval> parts;
  parts.reserve(pieces.size());
  for (const Piece& piece : pieces) parts.emplace_back(piece.lo, piece.hi);
  return normalize(std::move(parts));
}

std::string gamma3_label(std::string_view kind, unsigned p, unsigned q) {
  return std::string(kind) + "(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
}

}  // namespace

ComparisonReport compare_stages(const IntervalSet& a, const IntervalSet& b,
                                std::string left_label, std::string right_label,
                                unsigned stage) {
  std::vector<Piece> left = difference_pieces(a, b);
  std::vector<Piece> right = difference_pieces(b, a);

  ComparisonReport report;
  report.left_label = std::move(left_label);
  report.right_label = std::move(right_label);
  report.stage = stage;
  report.equal = left.empty() && right.empty();
  report.left_minus_right = closure_of(left);
  report.right_minus_left = closure_of(right);
  // Witness: midpoint of the leftmost component of the symmetric difference.
  if (!left.empty() && (right.empty() || left.front().lo < right.front().lo)) {
    report.witness = left.front().midpoint();
  } else if (!right.empty()) {
    report.witness = right.front().midpoint();
  }
  return report;
}

std::vector<ComparisonReport> verify_gamma3(unsigned p, unsigned q, unsigned n_max) {
  validate(Gamma3{p, q});
  std::vector<ComparisonReport> reports;
  reports.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    reports.push_back(compare_stages(gamma3_endpoints(p, q, n).to_interval_set(),
                                     nested_middle_alpha_stage(p, q, n),
                                     gamma3_label("gamma3_endpoints", p, q),
                                     gamma3_label("nested_middle_alpha", p, q), n));
  }
  return reports;
}

std::vector<ComparisonReport> verify_digit_characterization(unsigned p, unsigned q,
                                                            unsigned n_max) {
  DigitIFS digits = gamma3_digit_spec(p, q);
  std::vector<ComparisonReport> reports;
  reports.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    reports.push_back(compare_stages(digit_stage(digits, n),
                                     nested_middle_alpha_stage(p, q, n),
                                     to_string(FamilySpec(digits)),
                                     gamma3_label("nested_middle_alpha", p, q), n));
  }
  return reports;
}

std::vector<ComparisonReport> verify_gamma2_formula(unsigned q, unsigned n_max) {
  DigitIFS digits = gamma2_digit_spec(q);
  std::vector<ComparisonReport> reports;
  reports.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    reports.push_back(compare_stages(gamma2_stage(q, n), digit_stage(digits, n),
                                     "gamma2_formula(q=" + std::to_string(q) + ")",
                                     to_string(FamilySpec(digits)), n));
  }
  return reports;
}

std::vector<ComparisonReport> verify_gamma2_conjectured(unsigned q, unsigned n_max) {
  DigitIFS digits = gamma2_digit_spec(q);
  std::vector<ComparisonReport> reports;
  reports.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    reports.push_back(
        compare_stages(gamma2_stage_conjectured(q, n), digit_stage(digits, n),
                       "gamma2_conjectured(q=" + std::to_string(q) + ")",
                       to_string(FamilySpec(digits)), n));
  }
  return reports;
}

std::vector<ComparisonReport> verify_corollary(unsigned n_max) {
  std::vector<ComparisonReport> reports;
  reports.reserve(3 * (n_max + 1));
  for (unsigned n = 0; n <= n_max; ++n) {
    IntervalSet g1 = gamma1_stage(3, n);
    reports.push_back(compare_stages(g1, gamma2_stage(3, n), "gamma1_stage(q=3)",
                                     "gamma2_stage(q=3)", n));
    reports.push_back(compare_stages(g1, gamma3_endpoints(1, 3, n).to_interval_set(),
                                     "gamma1_stage(q=3)",
                                     gamma3_label("gamma3_endpoints", 1, 3), n));
    reports.push_back(compare_stages(g1, digit_stage(DigitIFS{3, {0, 2}}, n),
                                     "gamma1_stage(q=3)", "digit:base=3,A=0,2", n));
  }
  return reports;
}

bool limit_membership(const DigitIFS& spec, const Rational& x) {
  validate(spec);
  if (x < Rational(0) || Rational(1) < x) return false;

  Rational base(spec.base);
  auto successors = [&](const Rational& y) {
    std::vector<Rational> out;
    Rational scaled = y * base;
    for (unsigned d : spec.alphabet) {
      Rational rem = scaled - Rational(d);
      if (!(rem < Rational(0)) && !(Rational(1) < rem)) out.push_back(std::move(rem));
    }
    return out;
  };

  // All states reachable from x have denominators dividing den(x), so the
  // graph is finite and small.
  std::map<Rational, std::vector<Rational>> graph;
  std::queue<Rational> frontier;
  frontier.push(x);
  graph[x];
  while (!frontier.empty()) {
    Rational y = std::move(frontier.front());
    frontier.pop();
    std::vector<Rational> next = successors(y);
    for (const Rational& z : next) {
      if (graph.emplace(z, std::vector<Rational>{}).second) frontier.push(z);
    }
    graph[y] = std::move(next);
  }

  // A point is in the limit set iff an infinite path exists, i.e. iff x
  // survives repeated deletion of states with no surviving successor.
  std::set<Rational> kept;
  for (const auto& [node, _] : graph) kept.insert(node);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = kept.begin(); it != kept.end();) {
      const auto& next = graph[*it];
      bool alive = std::any_of(next.begin(), next.end(),
                               [&](const Rational& z) { return kept.count(z) > 0; });
      if (!alive) {
        it = kept.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return kept.count(x) > 0;
}

std::vector<std::pair<Rational, bool>> exhaustive_digit_membership(
    const DigitIFS& spec, unsigned denominator_bound) {
  validate(spec);
  if (denominator_bound < 1) {
    throw std::invalid_argument("exhaustive_digit_membership requires bound >= 1");
  }
  std::vector<std::pair<Rational, bool>> verdicts;
  for (unsigned den = 1; den <= denominator_bound; ++den) {
    for (unsigned num = 0; num <= den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      Rational x{BigInt(num), BigInt(den)};
      verdicts.emplace_back(x, limit_membership(spec, x));
    }
  }
  std::sort(verdicts.begin(), verdicts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return verdicts;
}

}  // namespace cantor
