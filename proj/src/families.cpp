#include "cantor/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cantor {

namespace {

BigInt int_pow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e--) r *= base;
  return r;
}

void check_stage_size(const BigInt& count) {
  if (count > BigInt(1) << 22) {
    throw std::invalid_argument("stage too large: would enumerate " + count.str() +
                                " intervals");
  }
}

}  // namespace

IntervalSet EndpointTable::to_interval_set() const {
  std::vector<ClosedInterval> parts;
  parts.reserve(rows.size());
  for (const auto& [a, b] : rows) parts.emplace_back(a, b);
  // Rows are strictly increasing and separated by positive gaps.
  return normalize(std::move(parts));
}

GapList gamma1_gaps(unsigned q, unsigned n) {
  validate(Gamma1{q});
  if (n < 1) throw std::invalid_argument("gamma1_gaps requires stage n >= 1");
  BigInt qn = int_pow(q, n);
  BigInt blocks = int_pow(q, n - 1);
  check_stage_size(blocks * ((q - 1) / 2));
  std::vector<Gap> gaps;
  for (BigInt k = 0; k < blocks; ++k) {
    BigInt base = q * k;
    for (unsigned r = 1; 2 * r <= q - 1; ++r) {
      gaps.emplace_back(Rational(base + (2 * r - 1), qn), Rational(base + 2 * r, qn));
    }
  }
  return GapList(std::move(gaps));
}

IntervalSet gamma1_stage(unsigned q, unsigned n) {
  validate(Gamma1{q});
  IntervalSet s = IntervalSet::unit();
  for (unsigned m = 1; m <= n; ++m) {
    s = subtract_gaps(s, gamma1_gaps(q, m));
  }
  return s;
}

GapList gamma2_gaps(unsigned q, unsigned n) {
  validate(Gamma2{q});
  if (n < 1) throw std::invalid_argument("gamma2_gaps requires stage n >= 1");
  BigInt qn = int_pow(q, n);
  BigInt blocks = int_pow(q, n - 1);
  check_stage_size(blocks);
  std::vector<Gap> gaps;
  for (BigInt k = 0; k < blocks; ++k) {
    BigInt base = q * k;
    gaps.emplace_back(Rational(base + 1, qn), Rational(base + 2, qn));
  }
  return GapList(std::move(gaps));
}

IntervalSet gamma2_stage(unsigned q, unsigned n) {
  validate(Gamma2{q});
  IntervalSet s = IntervalSet::unit();
  for (unsigned m = 1; m <= n; ++m) {
    s = subtract_gaps(s, gamma2_gaps(q, m));
  }
  return s;
}

GapList gamma2_gaps_conjectured(unsigned q, unsigned n) {
  validate(Gamma2{q});
  if (n < 1) throw std::invalid_argument("gamma2_gaps_conjectured requires stage n >= 1");
  BigInt qn = int_pow(q, n);
  BigInt blocks = int_pow(q, n - 1);
  check_stage_size(blocks);
  std::vector<Gap> gaps;
  for (BigInt k = 0; k < blocks; ++k) {
    BigInt base = q * k;
    gaps.emplace_back(Rational(base + 1, qn), Rational(base + (q - 1), qn));
  }
  return GapList(std::move(gaps));
}

IntervalSet gamma2_stage_conjectured(unsigned q, unsigned n) {
  validate(Gamma2{q});
  IntervalSet s = IntervalSet::unit();
  for (unsigned m = 1; m <= n; ++m) {
    s = subtract_gaps(s, gamma2_gaps_conjectured(q, m));
  }
  return s;
}

Rational gamma3_interval_length(unsigned p, unsigned q, unsigned n) {
  validate(Gamma3{p, q});
  Rational alpha{BigInt(p), BigInt(q)};
  Rational two_alpha = Rational(2) * alpha;
  Rational num = pow(two_alpha, n + 1) + Rational(2) * (Rational(1) - Rational(3) * alpha);
  Rational den = Rational(BigInt(1) << (n + 1)) * (Rational(1) - two_alpha);
  return num / den;
}

Rational gamma3_delta(unsigned p, unsigned q, unsigned n) {
  validate(Gamma3{p, q});
  if (n < 1) throw std::invalid_argument("gamma3_delta requires stage n >= 1");
  Rational alpha{BigInt(p), BigInt(q)};
  Rational two_alpha = Rational(2) * alpha;
  Rational num = (Rational(1) - Rational(3) * alpha) +
                 (Rational(1) - alpha) * pow(two_alpha, n);
  Rational den = (Rational(1) - two_alpha) * Rational(BigInt(1) << n);
  return num / den;
}

namespace {

// Memoized evaluation of the endpoint recursion in its indicator form. The cache is local
// to one table construction, so the function stays pure.
struct EndpointRecursion {
  std::vector<Rational> deltas;  // deltas[m] = delta_m, m >= 1
  std::vector<std::vector<std::pair<bool, Rational>>> memo_a;  // [m][k-1]
  std::vector<std::vector<std::pair<bool, Rational>>> memo_b;

  EndpointRecursion(unsigned p, unsigned q, unsigned n) {
    deltas.resize(n + 1);
    for (unsigned m = 1; m <= n; ++m) deltas[m] = gamma3_delta(p, q, m);
    memo_a.resize(n + 1);
    memo_b.resize(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
      memo_a[m].assign(std::size_t{1} << m, {false, Rational()});
      memo_b[m].assign(std::size_t{1} << m, {false, Rational()});
    }
  }

  Rational a(unsigned n, unsigned long long k) {
    if (n == 0) return Rational(0);
    auto& slot = memo_a[n][k - 1];
    if (!slot.first) {
      slot.second = (k % 2 == 1) ? a(n - 1, (k + 1) / 2)
                                 : a(n - 1, k / 2) + deltas[n];
      slot.first = true;
    }
    return slot.second;
  }

  Rational b(unsigned n, unsigned long long k) {
    if (n == 0) return Rational(1);
    auto& slot = memo_b[n][k - 1];
    if (!slot.first) {
      slot.second = (k % 2 == 1) ? b(n - 1, (k + 1) / 2) - deltas[n]
                                 : b(n - 1, k / 2);
      slot.first = true;
    }
    return slot.second;
  }
};

}  // namespace

EndpointTable gamma3_endpoints(unsigned p, unsigned q, unsigned n) {
  validate(Gamma3{p, q});
  if (n > 20) {
    throw std::invalid_argument("gamma3_endpoints: full tables are limited to n <= 20");
  }
  EndpointRecursion rec(p, q, n);
  EndpointTable table;
  table.stage = n;
  table.rows.reserve(std::size_t{1} << n);
  for (unsigned long long k = 1; k <= (1ull << n); ++k) {
    table.rows.emplace_back(rec.a(n, k), rec.b(n, k));
  }
  return table;
}

std::pair<Rational, Rational> gamma3_endpoint(unsigned p, unsigned q, unsigned n,
                                              unsigned long long k) {
  validate(Gamma3{p, q});
  if (n >= 63 || k < 1 || k > (1ull << n)) {
    throw std::out_of_range("gamma3_endpoint: k must satisfy 1 <= k <= 2^n");
  }
  // Point query: unroll the recursion along the single ancestor chain
  // k_n = k, k_{m-1} = ceil(k_m / 2). Even indices add delta_m to a; odd
  // indices subtract it from b.
  Rational a(0), b(1);
  unsigned long long km = k;
  for (unsigned m = n; m >= 1; --m) {
    if (km % 2 == 0) {
      a += gamma3_delta(p, q, m);
      km /= 2;
    } else {
      b -= gamma3_delta(p, q, m);
      km = (km + 1) / 2;
    }
  }
  return {a, b};
}

GapList gamma3_level_gaps(unsigned p, unsigned q, unsigned n) {
  if (n < 1) throw std::invalid_argument("gamma3_level_gaps requires stage n >= 1");
  EndpointTable table = gamma3_endpoints(p, q, n);
  std::vector<Gap> gaps;
  gaps.reserve(table.rows.size() / 2);
  for (std::size_t k = 0; k + 1 < table.rows.size(); k += 2) {
    gaps.emplace_back(table.rows[k].second, table.rows[k + 1].first);
  }
  return GapList(std::move(gaps));
}

Rational gamma3_measure(unsigned p, unsigned q) {
  validate(Gamma3{p, q});
  Rational alpha{BigInt(p), BigInt(q)};
  return (Rational(1) - Rational(3) * alpha) / (Rational(1) - Rational(2) * alpha);
}

IntervalSet nested_middle_alpha_stage(unsigned p, unsigned q, unsigned n) {
  validate(Gamma3{p, q});
  check_stage_size(BigInt(1) << n);
  Rational alpha{BigInt(p), BigInt(q)};
  std::vector<ClosedInterval> parts{ClosedInterval(Rational(0), Rational(1))};
  Rational gap = Rational(1);
  for (unsigned m = 1; m <= n; ++m) {
    gap *= alpha;  // (p/q)^m
    std::vector<ClosedInterval> next;
    next.reserve(parts.size() * 2);
    for (const ClosedInterval& iv : parts) {
      Rational len = iv.length();
      if (!(gap < len)) {
        throw std::logic_error("nested construction: removal does not fit component");
      }
      Rational half = (len - gap) / Rational(2);
      next.emplace_back(iv.lo, iv.lo + half);
      next.emplace_back(iv.hi - half, iv.hi);
    }
    parts = std::move(next);
  }
  return normalize(std::move(parts));
}

DigitIFS gamma3_digit_spec(unsigned p, unsigned q) {
  validate(Gamma3{p, q});
  DigitIFS spec;
  spec.base = 2 * q;
  spec.alphabet.clear();
  for (unsigned a = 0; a + p <= q - 1; ++a) spec.alphabet.push_back(a);  // 0..q-p-1
  for (unsigned a = q + p; a <= 2 * q - 1; ++a) spec.alphabet.push_back(a);
  validate(spec);
  return spec;
}

DigitIFS gamma1_digit_spec(unsigned q) {
  validate(Gamma1{q});
  DigitIFS spec;
  spec.base = q;
  spec.alphabet.clear();
  for (unsigned a = 0; a <= q - 1; a += 2) spec.alphabet.push_back(a);
  validate(spec);
  return spec;
}

DigitIFS gamma2_digit_spec(unsigned q) {
  validate(Gamma2{q});
  return DigitIFS{q, {0, q - 1}};
}

ClosedInterval address_interval(const DigitIFS& spec, const Address& addr) {
  validate(spec);
  Rational lo(0);
  Rational scale(1);
  Rational inv_base(BigInt(1), BigInt(spec.base));
  for (unsigned digit : addr.digits) {
    if (!std::binary_search(spec.alphabet.begin(), spec.alphabet.end(), digit)) {
      throw std::out_of_range("address digit " + std::to_string(digit) +
                              " not in alphabet");
    }
    scale *= inv_base;
    lo += Rational(digit) * scale;
  }
  return ClosedInterval(lo, lo + scale);
}

IntervalSet digit_stage(const DigitIFS& spec, unsigned n) {
  validate(spec);
  IntervalSet s = IntervalSet::unit();
  Rational inv_base(BigInt(1), BigInt(spec.base));
  for (unsigned m = 0; m < n; ++m) {
    check_stage_size(BigInt(s.component_count()) * spec.alphabet.size());
    std::vector<ClosedInterval> next;
    next.reserve(s.component_count() * spec.alphabet.size());
    for (unsigned digit : spec.alphabet) {
      Rational offset = Rational(digit) * inv_base;
      for (const ClosedInterval& iv : s.parts()) {
        next.emplace_back(iv.lo * inv_base + offset, iv.hi * inv_base + offset);
      }
    }
    s = normalize(std::move(next));
  }
  return s;
}

std::vector<std::vector<unsigned>> digit_expansions(const Rational& x, unsigned base,
                                                    unsigned max_len) {
  if (base < 2) throw std::invalid_argument("digit_expansions requires base >= 2");
  if (x < Rational(0) || Rational(1) < x) {
    throw std::invalid_argument("digit_expansions requires 0 <= x <= 1");
  }
  std::set<std::vector<unsigned>> prefixes;
  std::vector<unsigned> current;

  // Digit d can start an expansion of y iff d/base <= y <= (d+1)/base;
  // the remainder is then y*base - d. Branching (two valid digits) happens
  // only when y*base is a positive integer.
  auto walk = [&](auto&& self, const Rational& y, unsigned depth) -> void {
    if (depth == max_len) {
      prefixes.insert(current);
      return;
    }
    Rational scaled = y * Rational(base);
    BigInt lowest = scaled.floor();
    for (BigInt d = lowest == 0 ? BigInt(0) : lowest - 1; d <= lowest; ++d) {
      if (d < 0 || d >= base) continue;
      Rational rem = scaled - Rational(d);
      if (rem < Rational(0) || Rational(1) < rem) continue;
      current.push_back(d.convert_to<unsigned>());
      self(self, rem, depth + 1);
      current.pop_back();
    }
  };
  walk(walk, x, 0);
  return {prefixes.begin(), prefixes.end()};
}

IntervalSet stage_set(const FamilySpec& spec, unsigned n) {
  struct Visitor {
    unsigned n;
    IntervalSet operator()(const Gamma1& s) const { return gamma1_stage(s.q, n); }
    IntervalSet operator()(const Gamma2& s) const { return gamma2_stage(s.q, n); }
    IntervalSet operator()(const Gamma3& s) const {
      return gamma3_endpoints(s.p, s.q, n).to_interval_set();
    }
    IntervalSet operator()(const DigitIFS& s) const { return digit_stage(s, n); }
  };
  return std::visit(Visitor{n}, spec);
}

}  // namespace cantor
