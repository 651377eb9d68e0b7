#ifndef CANTOR_STAIRCASE_HPP
#define CANTOR_STAIRCASE_HPP

#include "cantor/families.hpp"

#include <vector>

namespace cantor {

/// Per-map probabilities of the self-similar measure: strictly positive,
/// summing to exactly 1, one entry per IFS map (alphabet digit, or left/right
/// child for the middle-alpha construction tree).
class WeightVector {
public:
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector uniform(unsigned k);

  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  bool is_palindromic() const;
  Rational max_weight() const;

private:
  std::vector<Rational> weights_;
};

/// Exact stage-n bracket around the staircase CDF value F(x): lower counts
/// the cylinders lying inside [0, x]; upper additionally grants x's own
/// cylinder. The bracket collapses wherever F is determined at this stage
/// (gaps, cylinder endpoints, 0 and 1).
struct CdfBound {
  Rational lower;
  Rational upper;
  unsigned stage = 0;
};

struct CdfSample {
  Rational x;
  Rational lower;
  Rational upper;
};

/// Product of the weights along the address; the empty address has mass 1.
/// Digits index into w via their position in the alphabet.
Rational cylinder_mass(const WeightVector& w, const DigitIFS& spec, const Address& addr);

/// Same, with digits already given as weight indices (used for the
/// middle-alpha construction tree, whose alphabet is {left, right}).
Rational cylinder_mass(const WeightVector& w, const std::vector<unsigned>& indices);

/// Stage-n CDF bracket of the self-similar measure for the family. gamma1,
/// gamma2 and digit specs use their digit presentation; gamma3 propagates
/// mass down the endpoint-recursion tree (two children per interval).
CdfBound cdf_bounds(const FamilySpec& spec, const WeightVector& w, const Rational& x,
                    unsigned n);

/// m equally spaced abscissae across [0,1] with their stage-n brackets.
std::vector<CdfSample> staircase_samples(const FamilySpec& spec, const WeightVector& w,
                                         unsigned sample_count, unsigned n);

/// Rows (n, 1 - sum_{m<=n} 2^(m-1) (p/q)^m) for n = 0..n_max: the exact
/// stage measures, decreasing toward (1-3a)/(1-2a).
std::vector<std::pair<unsigned, Rational>> gamma3_measure_profile(unsigned p, unsigned q,
                                                                  unsigned n_max);

}  // namespace cantor

#endif
