#include "support/properties.hpp"

#include "cantor/analysis.hpp"
#include "cantor/families.hpp"
#include "cantor/kernels.hpp"
#include "cantor/staircase.hpp"
#include "cantor/verify.hpp"
#include "support/generators.hpp"

#include <sstream>

namespace cantor::props {

using namespace cantor::testgen;

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PropertyFailure(message);
}

const std::vector<Gamma3>& gamma3_matrix() {
  static const std::vector<Gamma3> matrix{{1, 3}, {1, 4}, {1, 5},
                                          {1, 6}, {2, 7}, {3, 10}};
  return matrix;
}

bool subset_of(const IntervalSet& inner, const IntervalSet& outer) {
  return intersect(inner, outer) == inner;
}

}  // namespace

void prop_rational_reduced(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    for (const Rational& v : {a + b, a - b, a * b, pow(a, 3)}) {
      require(v.den() > 0, "denominator must stay positive");
      require(boost::multiprecision::gcd(boost::multiprecision::abs(v.num()), v.den()) == 1,
              "value must stay reduced: " + v.to_string());
      if (v.num() == 0) require(v.den() == 1, "zero must be 0/1");
    }
  }
}

void prop_rational_field_axioms(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    Rational c = random_rational(rng);
    require((a + b) + c == a + (b + c), "addition must be associative");
    require((a * b) * c == a * (b * c), "multiplication must be associative");
    require(a * (b + c) == a * b + a * c, "multiplication must distribute");
    require(a + b == b + a && a * b == b * a, "operations must commute");
    require(a - a == Rational(0) && a + Rational(0) == a && a * Rational(1) == a,
            "identities must hold");
    if (!a.is_zero()) {
      require(a / a == Rational(1), "a/a must be 1");
    }
  }
}

void prop_rational_compare_sign(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    int by_compare = a < b ? -1 : (b < a ? 1 : 0);
    require(by_compare == (a - b).sign(), "compare must agree with sign(a - b)");
  }
}

void prop_gaps_round_trip(std::mt19937_64& rng, int instances) {
  ClosedInterval unit(Rational(0), Rational(1));
  for (int i = 0; i < instances; ++i) {
    GapList gaps = random_separated_gaps(rng);
    IntervalSet s = subtract_gaps(IntervalSet::unit(), gaps);
    require(gaps_within(s, unit) == gaps, "subtract then gaps_within must round-trip");
  }
}

void prop_intersection_length_bound(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = random_interval_set(rng);
    Rational len = total_length(intersect(a, b));
    require(len <= total_length(a) && len <= total_length(b),
            "intersection length must not exceed either side");
  }
}

void prop_intersect_algebra(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = random_interval_set(rng);
    IntervalSet c = random_interval_set(rng);
    require(intersect(a, b) == intersect(b, a), "intersect must commute");
    require(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)),
            "intersect must associate");
    require(intersect(a, a) == a, "intersect must be idempotent");
  }
}

void prop_translate_preserves_length(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    IntervalSet a = random_interval_set(rng);
    Rational t = random_rational(rng, 50);
    require(total_length(translate(a, t)) == total_length(a),
            "translate must preserve total length");
  }
}

void prop_closed_form_lengths(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    const Gamma3& spec = gamma3_matrix()[i % gamma3_matrix().size()];
    unsigned n = uniform_int(rng, 0, 12);
    EndpointTable table = gamma3_endpoints(spec.p, spec.q, n);
    Rational expected = gamma3_interval_length(spec.p, spec.q, n);
    for (const auto& [a, b] : table.rows) {
      require(b - a == expected, "row length must match the closed form at n=" +
                                     std::to_string(n));
    }
  }
}

void prop_delta_identity(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    Gamma3 spec = random_gamma3(rng);
    unsigned n = uniform_int(rng, 1, 12);
    Rational delta = gamma3_delta(spec.p, spec.q, n);
    Rational direct = gamma3_interval_length(spec.p, spec.q, n) + pow(spec.alpha(), n);
    require(delta == direct, "delta closed form must equal length + alpha^n");
  }
}

void prop_measure_conservation(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    Gamma3 spec = random_gamma3(rng);
    unsigned n = uniform_int(rng, 0, 12);
    Rational stage_len = total_length(gamma3_endpoints(spec.p, spec.q, n).to_interval_set());
    Rational removed;
    Rational term = spec.alpha();
    for (unsigned m = 1; m <= n; ++m) {
      removed += term;  // 2^(m-1) alpha^m
      term *= Rational(2) * spec.alpha();
    }
    require(stage_len + removed == Rational(1),
            "stage measure plus removed gap length must be exactly 1");
  }
}

void prop_monotone_stages(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    FamilySpec spec = random_family_spec(rng);
    unsigned n = capped_stage(spec, uniform_int(rng, 1, 8), 5000);
    require(subset_of(stage_set(spec, n), stage_set(spec, n - 1)),
            "stage n+1 must be contained in stage n for " + to_string(spec));
  }
}

void prop_thin_family_cumulative_nesting(std::mt19937_64& rng, int instances) {
  // The literal gap unions overlap across levels, so the decreasing-stage
  // check must use cumulative subtraction rather than disjoint bookkeeping.
  for (int i = 0; i < instances; ++i) {
    bool use_gamma1 = uniform_int(rng, 0, 1) == 0;
    unsigned q = use_gamma1 ? 2 * uniform_int(rng, 1, 3) + 1 : uniform_int(rng, 3, 6);
    unsigned max_n = q > 5 ? 4 : 5;
    for (unsigned n = 0; n < max_n; ++n) {
      IntervalSet coarse = use_gamma1 ? gamma1_stage(q, n) : gamma2_stage(q, n);
      IntervalSet fine = use_gamma1 ? gamma1_stage(q, n + 1) : gamma2_stage(q, n + 1);
      require(subset_of(fine, coarse), "thin-family stages must be weakly decreasing");
    }
  }
}

void prop_gamma3_oracle_equality(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    const Gamma3& spec = gamma3_matrix()[i % gamma3_matrix().size()];
    unsigned n = uniform_int(rng, 0, 8);
    require(gamma3_endpoints(spec.p, spec.q, n).to_interval_set() ==
                nested_middle_alpha_stage(spec.p, spec.q, n),
            "endpoint recursion must match the nested construction");
  }
}

void prop_stage_symmetry(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    FamilySpec spec = random_family_spec(rng);
    // Only bilaterally symmetric alphabets qualify for digit specs.
    if (const auto* d = std::get_if<DigitIFS>(&spec)) {
      std::vector<unsigned> mirrored;
      for (auto it = d->alphabet.rbegin(); it != d->alphabet.rend(); ++it) {
        mirrored.push_back(d->base - 1 - *it);
      }
      if (mirrored != d->alphabet) {
        --i;
        continue;
      }
    }
    // The literal gamma2 gap formula is asymmetric for q >= 4 (part of the
    // measured formula-vs-digits discrepancy); its {0, q-1} digit
    // presentation is the symmetric object.
    if (const auto* g2 = std::get_if<Gamma2>(&spec); g2 && g2->q > 3) {
      spec = gamma2_digit_spec(g2->q);
    }
    unsigned n = capped_stage(spec, uniform_int(rng, 0, 8), 5000);
    IntervalSet s = stage_set(spec, n);
    require(reflect(s) == s, "stage sets must be symmetric under x -> 1-x");
  }
}

void prop_endpoint_digit_membership(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    // gamma1/gamma2/digit stage endpoints must admit an all-alphabet prefix.
    DigitIFS spec;
    switch (uniform_int(rng, 0, 2)) {
      case 0: spec = gamma1_digit_spec(2 * uniform_int(rng, 1, 3) + 1); break;
      case 1: spec = gamma2_digit_spec(uniform_int(rng, 3, 6)); break;
      default: spec = random_digit_spec(rng, 6); break;
    }
    unsigned n = capped_stage(FamilySpec(spec), uniform_int(rng, 1, 4), 500);
    IntervalSet s = digit_stage(spec, n);
    for (const ClosedInterval& iv : s.parts()) {
      for (const Rational& e : {iv.lo, iv.hi}) {
        bool found = false;
        for (const auto& prefix : digit_expansions(e, spec.base, n)) {
          bool all = true;
          for (unsigned d : prefix) {
            if (!std::binary_search(spec.alphabet.begin(), spec.alphabet.end(), d)) {
              all = false;
              break;
            }
          }
          if (all) {
            found = true;
            break;
          }
        }
        require(found, "endpoint " + e.to_string() + " of " +
                           to_string(FamilySpec(spec)) +
                           " must have an in-alphabet digit prefix");
      }
    }
  }
}

void prop_equal_implies_equal_length(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = uniform_int(rng, 0, 1) ? a : random_interval_set(rng);
    ComparisonReport report = compare_stages(a, b);
    if (report.equal) {
      require(total_length(a) == total_length(b),
              "equal stage sets must have equal lengths");
    }
  }
}

void prop_membership_inside_stages(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    DigitIFS spec = random_digit_spec(rng, 5);
    Rational x = random_unit_rational(rng, 40);
    if (!limit_membership(spec, x)) {
      --i;
      continue;
    }
    unsigned n = capped_stage(FamilySpec(spec), 12);
    for (unsigned m = 0; m <= n; ++m) {
      require(contains_point(digit_stage(spec, m), x),
              "limit-set member " + x.to_string() + " must lie in every stage of " +
                  to_string(FamilySpec(spec)));
    }
  }
}

void prop_verify_gamma3_matrix(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    const Gamma3& spec = gamma3_matrix()[i % gamma3_matrix().size()];
    unsigned n_max = uniform_int(rng, 0, 8);
    for (const ComparisonReport& report : verify_gamma3(spec.p, spec.q, n_max)) {
      require(report.equal, "verify_gamma3 must report all-equal for the test matrix");
    }
  }
}

void prop_witness_soundness(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    IntervalSet a = random_interval_set(rng);
    IntervalSet b = random_interval_set(rng);
    ComparisonReport report = compare_stages(a, b);
    if (report.witness) {
      bool in_a = contains_point(a, *report.witness);
      bool in_b = contains_point(b, *report.witness);
      require(in_a != in_b, "witness must lie in exactly one side");
    } else {
      require(report.equal, "a missing witness means the sets are equal");
    }
  }
}

void prop_total_cylinder_mass(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    DigitIFS spec = random_digit_spec(rng, 6);
    unsigned K = static_cast<unsigned>(spec.alphabet.size());
    WeightVector w = random_weights(rng, K);
    unsigned n = capped_stage(FamilySpec(spec), 12, 4096);
    // Enumerate all stage-n addresses by mixed radix.
    unsigned long long count = 1;
    for (unsigned m = 0; m < n; ++m) count *= K;
    Rational sum;
    Address addr;
    addr.digits.assign(n, 0);
    for (unsigned long long idx = 0; idx < count; ++idx) {
      unsigned long long rem = idx;
      for (unsigned pos = n; pos-- > 0;) {
        addr.digits[pos] = spec.alphabet[rem % K];
        rem /= K;
      }
      sum += cylinder_mass(w, spec, addr);
    }
    require(sum == Rational(1), "total stage mass must be exactly 1");
  }
}

void prop_cdf_symmetry(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    // Symmetric specs with palindromic weights.
    FamilySpec spec = random_family_spec(rng);
    if (const auto* d = std::get_if<DigitIFS>(&spec)) {
      std::vector<unsigned> mirrored;
      for (auto it = d->alphabet.rbegin(); it != d->alphabet.rend(); ++it) {
        mirrored.push_back(d->base - 1 - *it);
      }
      if (mirrored != d->alphabet) {
        --i;
        continue;
      }
    }
    unsigned K = map_count(spec);
    std::vector<Rational> half;
    for (unsigned j = 0; j < (K + 1) / 2; ++j) {
      half.push_back(Rational(uniform_int(rng, 1, 9)));
    }
    std::vector<Rational> raw(K);
    Rational sum;
    for (unsigned j = 0; j < K; ++j) {
      raw[j] = half[std::min(j, K - 1 - j)];
      sum += raw[j];
    }
    for (auto& v : raw) v /= sum;
    WeightVector w(raw);

    unsigned n = capped_stage(spec, uniform_int(rng, 0, 8));
    Rational x = random_unit_rational(rng);
    CdfBound at_x = cdf_bounds(spec, w, x, n);
    CdfBound at_mirror = cdf_bounds(spec, w, Rational(1) - x, n);
    require(at_x.lower + at_mirror.upper == Rational(1),
            "palindromic weights must give lower(x) + upper(1-x) = 1");
  }
}

void prop_cdf_gap_constancy(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    FamilySpec spec = random_family_spec(rng);
    unsigned n = capped_stage(spec, uniform_int(rng, 1, 8));
    WeightVector w = random_weights(rng, map_count(spec));
    GapList gaps = gaps_within(stage_set(spec, n), ClosedInterval(Rational(0), Rational(1)));
    if (gaps.empty()) {
      --i;
      continue;
    }
    const Gap& g = gaps.gaps()[uniform_int(rng, 0, static_cast<int>(gaps.size()) - 1)];
    CdfBound at_lo = cdf_bounds(spec, w, g.lo, n);
    CdfBound at_mid = cdf_bounds(spec, w, (g.lo + g.hi) / Rational(2), n);
    CdfBound at_hi = cdf_bounds(spec, w, g.hi, n);
    require(at_lo.lower == at_mid.lower && at_mid.lower == at_hi.lower &&
                at_lo.upper == at_mid.upper && at_mid.upper == at_hi.upper,
            "cdf bounds must agree across the closure of a gap");
  }
}

void prop_cdf_bracket_nesting(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    FamilySpec spec = random_family_spec(rng);
    WeightVector w = random_weights(rng, map_count(spec));
    Rational x = random_unit_rational(rng);
    unsigned n = capped_stage(spec, uniform_int(rng, 0, 7));
    CdfBound coarse = cdf_bounds(spec, w, x, n);
    CdfBound fine = cdf_bounds(spec, w, x, n + 1);
    require(coarse.lower <= fine.lower && fine.upper <= coarse.upper,
            "brackets must be nested as the stage increases");
    require(fine.upper - fine.lower <= pow(w.max_weight(), n + 1),
            "bracket width must not exceed (max weight)^stage");
    require(Rational(0) <= fine.lower && fine.upper <= Rational(1),
            "brackets must stay within [0, 1]");
  }
}

void prop_gap_stats_conservation(std::mt19937_64& rng, int instances) {
  ClosedInterval unit(Rational(0), Rational(1));
  for (int i = 0; i < instances; ++i) {
    IntervalSet s = random_interval_set(rng);
    GapStatistics stats = gap_statistics(s, unit);
    require(stats.total_gap + total_length(s) == unit.length(),
            "gap total plus set length must equal the hull length");
    std::size_t count = 0;
    Rational total;
    for (const auto& [len, mult] : stats.histogram) {
      count += mult;
      total += len * Rational(BigInt(mult));
    }
    require(count == stats.count && total == stats.total_gap,
            "histogram must be consistent with count and total");
  }
}

void prop_thickness_invariance(std::mt19937_64& rng, int instances) {
  ClosedInterval unit(Rational(0), Rational(1));
  for (int i = 0; i < instances; ++i) {
    FamilySpec spec = random_family_spec(rng);
    unsigned n = capped_stage(spec, uniform_int(rng, 1, 6));
    IntervalSet s = stage_set(spec, n);
    if (s.component_count() < 2) {
      --i;
      continue;
    }
    Rational proxy = thickness_proxy(s, unit);
    require(thickness_proxy(reflect(s), unit) == proxy,
            "thickness proxy must be reflection-invariant");
    Rational t = random_unit_rational(rng, 20);
    ClosedInterval hull(unit.lo + t, unit.hi + t);
    require(thickness_proxy(translate(s, t), hull) == proxy,
            "thickness proxy must be translation-invariant");
  }
}

void prop_sweep_symmetry(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    FamilySpec a = random_family_spec(rng);
    FamilySpec b = random_family_spec(rng);
    unsigned n = std::min(capped_stage(a, 6), capped_stage(b, 6));
    Rational t = random_rational(rng, 20);
    auto [ab, len_ab] = translate_intersection(a, b, t, n);
    auto [ba, len_ba] = translate_intersection(b, a, -t, n);
    require(len_ab == len_ba, "sweep lengths must be symmetric under swap + negate");
    require(translate(ba, t) == ab, "swapped intersection must be a translate");
  }
}

void prop_intersection_monotone(std::mt19937_64& rng, int instances) {
  for (int i = 0; i < instances; ++i) {
    FamilySpec a = random_family_spec(rng);
    FamilySpec b = random_family_spec(rng);
    unsigned n = std::min(capped_stage(a, 6), capped_stage(b, 6));
    if (n == 0) {
      --i;
      continue;
    }
    Rational t = random_rational(rng, 20);
    auto [_, len_coarse] = translate_intersection(a, b, t, n - 1);
    auto [__, len_fine] = translate_intersection(a, b, t, n);
    require(len_fine <= len_coarse,
            "intersection length must be nonincreasing in the stage");
  }
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> properties{
      {"exact-numbers", "reduced_form", prop_rational_reduced},
      {"exact-numbers", "field_axioms", prop_rational_field_axioms},
      {"exact-numbers", "compare_sign", prop_rational_compare_sign},
      {"interval-algebra", "gaps_round_trip", prop_gaps_round_trip},
      {"interval-algebra", "intersection_length_bound", prop_intersection_length_bound},
      {"interval-algebra", "intersect_algebra", prop_intersect_algebra},
      {"interval-algebra", "translate_preserves_length", prop_translate_preserves_length},
      {"cantor-families", "closed_form_lengths", prop_closed_form_lengths},
      {"cantor-families", "delta_identity", prop_delta_identity},
      {"cantor-families", "measure_conservation", prop_measure_conservation},
      {"cantor-families", "monotone_stages", prop_monotone_stages},
      {"cantor-families", "thin_family_cumulative_nesting",
       prop_thin_family_cumulative_nesting},
      {"cantor-families", "gamma3_oracle_equality", prop_gamma3_oracle_equality},
      {"cantor-families", "stage_symmetry", prop_stage_symmetry},
      {"cantor-families", "endpoint_digit_membership", prop_endpoint_digit_membership},
      {"verification-oracle", "equal_implies_equal_length",
       prop_equal_implies_equal_length},
      {"verification-oracle", "membership_inside_stages", prop_membership_inside_stages},
      {"verification-oracle", "verify_gamma3_matrix", prop_verify_gamma3_matrix},
      {"verification-oracle", "witness_soundness", prop_witness_soundness},
      {"staircase-measures", "total_cylinder_mass", prop_total_cylinder_mass},
      {"staircase-measures", "cdf_symmetry", prop_cdf_symmetry},
      {"staircase-measures", "cdf_gap_constancy", prop_cdf_gap_constancy},
      {"staircase-measures", "cdf_bracket_nesting", prop_cdf_bracket_nesting},
      {"fractal-analysis", "gap_stats_conservation", prop_gap_stats_conservation},
      {"fractal-analysis", "thickness_invariance", prop_thickness_invariance},
      {"fractal-analysis", "sweep_symmetry", prop_sweep_symmetry},
      {"fractal-analysis", "intersection_monotone", prop_intersection_monotone},
  };
  return properties;
}

}  // namespace cantor::props
