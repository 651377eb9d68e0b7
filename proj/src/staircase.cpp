#include "cantor/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantor {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("WeightVector: empty");
  }
  Rational sum;
  for (const Rational& w : weights_) {
    if (!(Rational(0) < w)) {
      throw std::invalid_argument("WeightVector: weights must be positive");
    }
    sum += w;
  }
  if (sum != Rational(1)) {
    throw std::invalid_argument("WeightVector: weights must sum to 1, got " +
                                sum.to_string());
  }
}

WeightVector WeightVector::uniform(unsigned k) {
  if (k == 0) throw std::invalid_argument("WeightVector: k must be positive");
  return WeightVector(std::vector<Rational>(k, Rational(BigInt(1), BigInt(k))));
}

bool WeightVector::is_palindromic() const {
  for (std::size_t i = 0, j = weights_.size() - 1; i < j; ++i, --j) {
    if (weights_[i] != weights_[j]) return false;
  }
  return true;
}

Rational WeightVector::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

Rational cylinder_mass(const WeightVector& w, const DigitIFS& spec, const Address& addr) {
  validate(spec);
  if (w.size() != spec.alphabet.size()) {
    throw std::invalid_argument("cylinder_mass: weight count does not match alphabet");
  }
  Rational mass(1);
  for (unsigned digit : addr.digits) {
    auto it = std::lower_bound(spec.alphabet.begin(), spec.alphabet.end(), digit);
    if (it == spec.alphabet.end() || *it != digit) {
      throw std::out_of_range("cylinder_mass: digit not in alphabet");
    }
    mass *= w[static_cast<std::size_t>(it - spec.alphabet.begin())];
  }
  return mass;
}

Rational cylinder_mass(const WeightVector& w, const std::vector<unsigned>& indices) {
  Rational mass(1);
  for (unsigned i : indices) {
    if (i >= w.size()) {
      throw std::out_of_range("cylinder_mass: weight index out of range");
    }
    mass *= w[i];
  }
  return mass;
}

namespace {

// One construction-tree node: a retained interval whose children partition
// its mass at the next stage.
struct TreeShape {
  // Children intervals of [lo, hi] (depth = stage of the children).
  virtual std::vector<ClosedInterval> children(const ClosedInterval& node,
                                               unsigned child_stage) const = 0;
  virtual ~TreeShape() = default;
};

struct DigitTree final : TreeShape {
  unsigned base;
  std::vector<unsigned> alphabet;

  std::vector<ClosedInterval> children(const ClosedInterval& node,
                                       unsigned) const override {
    Rational scale = node.length() / Rational(base);
    std::vector<ClosedInterval> out;
    out.reserve(alphabet.size());
    for (unsigned a : alphabet) {
      Rational lo = node.lo + Rational(a) * scale;
      out.emplace_back(lo, lo + scale);
    }
    return out;
  }
};

struct MiddleAlphaTree final : TreeShape {
  std::vector<Rational> lengths;  // lengths[m] = common component length at stage m

  std::vector<ClosedInterval> children(const ClosedInterval& node,
                                       unsigned child_stage) const override {
    const Rational& len = lengths[child_stage];
    return {ClosedInterval(node.lo, node.lo + len),
            ClosedInterval(node.hi - len, node.hi)};
  }
};

struct CdfAccumulator {
  const TreeShape& shape;
  const WeightVector& w;
  const Rational& x;
  unsigned target_stage;
  Rational lower;
  Rational bracket;

  // A cylinder [lo, hi] contributes its full mass when hi <= x (it lies
  // inside [0, x]; mu of a point is zero, so lo >= x contributes nothing).
  // Only a cylinder with x in its open interior stays undecided, and the
  // interiors at one stage are pairwise disjoint, so at most one does.
  void descend(const ClosedInterval& node, unsigned stage, const Rational& mass) {
    if (node.hi <= x) {
      lower += mass;
      return;
    }
    if (x <= node.lo) return;
    if (stage == target_stage) {
      bracket += mass;
      return;
    }
    std::vector<ClosedInterval> kids = shape.children(node, stage + 1);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      descend(kids[i], stage + 1, mass * w[i]);
    }
  }
};

}  // namespace

CdfBound cdf_bounds(const FamilySpec& spec, const WeightVector& w, const Rational& x,
                    unsigned n) {
  validate(spec);
  if (x < Rational(0) || Rational(1) < x) {
    throw std::invalid_argument("cdf_bounds requires 0 <= x <= 1");
  }
  if (w.size() != map_count(spec)) {
    throw std::invalid_argument("cdf_bounds: weight count does not match map count");
  }

  DigitTree digit_tree;
  MiddleAlphaTree alpha_tree;
  const TreeShape* shape = nullptr;
  if (const auto* g3 = std::get_if<Gamma3>(&spec)) {
    alpha_tree.lengths.resize(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
      alpha_tree.lengths[m] = gamma3_interval_length(g3->p, g3->q, m);
    }
    shape = &alpha_tree;
  } else {
    DigitIFS d;
    if (const auto* g1 = std::get_if<Gamma1>(&spec)) {
      d = gamma1_digit_spec(g1->q);
    } else if (const auto* g2 = std::get_if<Gamma2>(&spec)) {
      d = gamma2_digit_spec(g2->q);
    } else {
      d = std::get<DigitIFS>(spec);
    }
    digit_tree.base = d.base;
    digit_tree.alphabet = std::move(d.alphabet);
    shape = &digit_tree;
  }

  CdfAccumulator acc{*shape, w, x, n, Rational(0), Rational(0)};
  acc.descend(ClosedInterval(Rational(0), Rational(1)), 0, Rational(1));
  return CdfBound{acc.lower, acc.lower + acc.bracket, n};
}

std::vector<CdfSample> staircase_samples(const FamilySpec& spec, const WeightVector& w,
                                         unsigned sample_count, unsigned n) {
  if (sample_count < 2) {
    throw std::invalid_argument("staircase_samples requires at least 2 samples");
  }
  std::vector<CdfSample> rows;
  rows.reserve(sample_count);
  for (unsigned j = 0; j < sample_count; ++j) {
    Rational x{BigInt(j), BigInt(sample_count - 1)};
    CdfBound bound = cdf_bounds(spec, w, x, n);
    rows.push_back({std::move(x), std::move(bound.lower), std::move(bound.upper)});
  }
  return rows;
}

std::vector<std::pair<unsigned, Rational>> gamma3_measure_profile(unsigned p, unsigned q,
                                                                  unsigned n_max) {
  validate(Gamma3{p, q});
  Rational alpha{BigInt(p), BigInt(q)};
  std::vector<std::pair<unsigned, Rational>> rows;
  rows.reserve(n_max + 1);
  Rational removed;
  Rational term = alpha;  // 2^(m-1) alpha^m, starting at m = 1
  rows.emplace_back(0u, Rational(1));
  for (unsigned m = 1; m <= n_max; ++m) {
    removed += term;
    rows.emplace_back(m, Rational(1) - removed);
    term *= Rational(2) * alpha;
  }
  return rows;
}

}  // namespace cantor
