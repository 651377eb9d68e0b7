#ifndef CANTOR_FAMILIES_HPP
#define CANTOR_FAMILIES_HPP

#include "cantor/family_spec.hpp"
#include "cantor/interval_set.hpp"

#include <utility>
#include <vector>

namespace cantor {

/// Endpoints (a_k, b_k) of the 2^n retained intervals at one stage of the
/// middle-alpha recursion, k = 1..2^n in increasing order.
struct EndpointTable {
  unsigned stage = 0;
  std::vector<std::pair<Rational, Rational>> rows;

  IntervalSet to_interval_set() const;
};

// --- gamma1: base-q digits restricted to even values (q odd) ---------------

/// The level-n deleted gaps ((qk + 2r - 1)/q^n, (qk + 2r)/q^n) for
/// k = 0..q^(n-1)-1, r = 1..(q-1)/2. Exactly q^(n-1)(q-1)/2 gaps of
/// length q^-n. Levels overlap, so stage sets must subtract cumulatively.
GapList gamma1_gaps(unsigned q, unsigned n);

/// [0,1] minus all level-m gaps for m = 1..n.
IntervalSet gamma1_stage(unsigned q, unsigned n);

// --- gamma2: base-q digits restricted to {0, q-1} ---------------------------

/// The level-n deleted gaps ((qk + 1)/q^n, (qk + 2)/q^n), k = 0..q^(n-1)-1,
/// taken literally from the stated formula.
GapList gamma2_gaps(unsigned q, unsigned n);
IntervalSet gamma2_stage(unsigned q, unsigned n);

/// Conjectured corrected gap family ((qk + 1)/q^n, (qk + q - 1)/q^n). This
/// is NOT the stated formula; it widens each deletion so that only the
/// digits {0, q-1} survive. Offered for comparison experiments only.
GapList gamma2_gaps_conjectured(unsigned q, unsigned n);
IntervalSet gamma2_stage_conjectured(unsigned q, unsigned n);

// --- gamma3: middle-alpha family, alpha = p/q <= 1/3 ------------------------

/// Common length of every stage-n retained interval:
/// ((2a)^(n+1) + 2(1-3a)) / (2^(n+1)(1-2a)).
Rational gamma3_interval_length(unsigned p, unsigned q, unsigned n);

/// Endpoint increment ((1-3a) + (1-a)(2a)^n) / ((1-2a) 2^n), n >= 1.
/// Equals gamma3_interval_length(p,q,n) + (p/q)^n.
Rational gamma3_delta(unsigned p, unsigned q, unsigned n);

/// Full endpoint table for k = 1..2^n via the first-order recursion:
/// odd k inherits a from its parent, even k adds delta; odd k subtracts
/// delta from the parent b, even k inherits. Memoized internally; the
/// result is identical to the naive recursion.
EndpointTable gamma3_endpoints(unsigned p, unsigned q, unsigned n);

/// Point query for one (a_{n,k}, b_{n,k}) pair. Throws std::out_of_range
/// unless 1 <= k <= 2^n.
std::pair<Rational, Rational> gamma3_endpoint(unsigned p, unsigned q, unsigned n,
                                              unsigned long long k);

/// Open middles removed at stage n: the 2^(n-1) gaps (b_{n,2k-1}, a_{n,2k}).
GapList gamma3_level_gaps(unsigned p, unsigned q, unsigned n);

/// Exact limit Lebesgue measure (1-3a)/(1-2a); zero iff p/q = 1/3.
Rational gamma3_measure(unsigned p, unsigned q);

/// Direct nested construction: start from [0,1]; at stage m remove from
/// each component its centered open interval of length (p/q)^m. The
/// independent oracle for the endpoint recursion.
IntervalSet nested_middle_alpha_stage(unsigned p, unsigned q, unsigned n);

/// Base-2q digit spec with alphabet {0..q-p-1} u {q+p..2q-1}.
DigitIFS gamma3_digit_spec(unsigned p, unsigned q);

/// Digit specs realizing the gamma1/gamma2 alphabets (second code path for
/// the verification oracle).
DigitIFS gamma1_digit_spec(unsigned q);
DigitIFS gamma2_digit_spec(unsigned q);

// --- digit IFS ---------------------------------------------------------------

/// [sum a_k base^-k, sum a_k base^-k + base^-n] for one address; never merges.
ClosedInterval address_interval(const DigitIFS& spec, const Address& addr);

/// Canonical union of all addressed stage-n intervals, computed by stagewise
/// refinement (apply every map to the previous stage, then normalize).
IntervalSet digit_stage(const DigitIFS& spec, unsigned n);

/// All base-`base` digit prefixes of length max_len realizable by some
/// expansion of x (at most two for rationals). Sorted lexicographically.
std::vector<std::vector<unsigned>> digit_expansions(const Rational& x, unsigned base,
                                                    unsigned max_len);

/// Stage-n set under the family's canonical construction: cumulative gap
/// subtraction for gamma1/gamma2, the endpoint recursion for gamma3,
/// stagewise refinement for digit specs.
IntervalSet stage_set(const FamilySpec& spec, unsigned n);

}  // namespace cantor

#endif
