#ifndef CANTOR_VERIFY_HPP
#define CANTOR_VERIFY_HPP

#include "cantor/families.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cantor {

/// Result of comparing two stage sets exactly. The difference sets shown are
/// the closures of the true set differences (a closed set minus a closed set
/// has half-open pieces); `equal` and `witness` are computed from the true
/// differences, and the witness - the midpoint of the first nonempty
/// difference piece - always lies in exactly one side.
struct ComparisonReport {
  std::string left_label;
  std::string right_label;
  unsigned stage = 0;
  bool equal = true;
  IntervalSet left_minus_right;
  IntervalSet right_minus_left;
  std::optional<Rational> witness;
};

ComparisonReport compare_stages(const IntervalSet& a, const IntervalSet& b,
                                std::string left_label = "left",
                                std::string right_label = "right",
                                unsigned stage = 0);

/// Endpoint recursion vs. the direct nested construction, stages 0..n_max.
/// Expected all-equal; a difference here is a bug, not a measurement.
std::vector<ComparisonReport> verify_gamma3(unsigned p, unsigned q, unsigned n_max);

/// Base-2q digit characterization vs. the nested construction. This is a
/// measurement: differences are reported data, not failures.
std::vector<ComparisonReport> verify_digit_characterization(unsigned p, unsigned q,
                                                            unsigned n_max);

/// The literal gamma2 gap formula vs. the {0, q-1} digit stages. Equal at
/// q = 3; measured (and expected to differ) for q >= 4.
std::vector<ComparisonReport> verify_gamma2_formula(unsigned q, unsigned n_max);

/// Same comparison against the conjectured widened deletions (non-paper
/// variant, for experiments only).
std::vector<ComparisonReport> verify_gamma2_conjectured(unsigned q, unsigned n_max);

/// Pairwise equality of the four middle-third representations:
/// gamma1_stage(3), gamma2_stage(3), the (1,3) endpoint recursion, and
/// digit_stage(base 3, {0,2}).
std::vector<ComparisonReport> verify_corollary(unsigned n_max);

/// Whether x belongs to the limit set of the digit IFS: does some infinite
/// digit expansion of x stay inside the alphabet? Decided exactly for
/// rationals by cycle detection over the finitely many remainder states.
bool limit_membership(const DigitIFS& spec, const Rational& x);

/// Membership verdicts for every reduced rational in [0,1] with denominator
/// at most `denominator_bound`, in increasing order.
std::vector<std::pair<Rational, bool>> exhaustive_digit_membership(
    const DigitIFS& spec, unsigned denominator_bound);

}  // namespace cantor

#endif
