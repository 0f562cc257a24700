#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cr/cantor.hpp"
#include "cr/detail/parallel.hpp"
#include "cr/detail/u64.hpp"
#include "cr/errors.hpp"
#include "cr/orbit.hpp"

namespace cr {

namespace {

using detail::u128;
using detail::u64;

// Leaves of the cylinder descent hold at most this many numerators.
constexpr u64 kLeafWidth = 4;

// Finds the numerators r in [0, d) with r/d in C for one denominator d whose
// coprime-to-b part exceeds 1. Such a/d (in lowest terms) never terminate,
// so their base-b expansion is unique and membership is a property of the
// digit sequence alone.
//
// The search descends through digit cylinders: a node covers the numerators
// [lo, hi] sharing the first j digits, tracked through the remainder
// s_j(lo) = lo * b^j mod d and the step b^j (exact). Once a cylinder holds
// at most kLeafWidth numerators, each is finished by walking T_b on
// remainders until the walk leaves D or closes its cycle. Cycles that pass
// are cached, since T_b permutes the members of a cycle.
class CylinderScan {
 public:
  CylinderScan(const DigitSet& ds, u64 d, unsigned preperiod)
      : ds_(ds), b_(ds.base()), d_(d), preperiod_(preperiod) {}

  template <typename Visit>
  void run(Visit&& visit) {
    descend(0, d_ - 1, 0, 1, 0, visit);
  }

 private:
  bool allowed(u64 digit) const { return ds_.contains(static_cast<unsigned>(digit)); }

  // Advances a remainder by one digit; returns the digit.
  u64 step(u64& x) const {
    const u64 t = x * b_;
    const u64 digit = t / d_;
    x = t - digit * d_;
    return digit;
  }

  // x is the remainder after `done` digits, all of which were allowed.
  bool finish(u64 x, unsigned done) {
    for (; done < preperiod_; ++done) {
      if (!good_.empty() && good_.contains(x)) {
        return true;
      }
      if (!allowed(step(x))) {
        return false;
      }
    }
    const u64 start = x;
    do {
      if (!good_.empty() && good_.contains(x)) {
        return true;
      }
      if (!allowed(step(x))) {
        return false;
      }
    } while (x != start);
    do {
      good_.insert(x);
      step(x);
    } while (x != start);
    return true;
  }

  // First numerator offset (from lo) whose next digit is >= c.
  u64 boundary(u64 c, u64 s_lo, u64 scaled_step) const {
    const u64 target = c * d_;
    const u64 have = s_lo * b_;
    if (target <= have) {
      return 0;
    }
    return (target - have + scaled_step - 1) / scaled_step;
  }

  template <typename Visit>
  void descend(u64 lo, u64 hi, u64 s_lo, u64 step_size, unsigned depth, Visit& visit) {
    const u64 scaled_step = step_size * b_;
    const u64 width = hi - lo + 1;
    for (unsigned c : ds_.digits()) {
      const u64 first = boundary(c, s_lo, scaled_step);
      if (first >= width) {
        break;
      }
      const u64 last = std::min(width, boundary(c + 1, s_lo, scaled_step));
      if (last <= first) {
        continue;
      }
      const u64 child_lo = lo + first;
      const u64 child_hi = lo + last - 1;
      // Remainder of child_lo after depth + 1 digits.
      const u64 child_s = (s_lo + first * step_size) * b_ - c * d_;
      if (child_hi - child_lo + 1 <= kLeafWidth) {
        u64 s = child_s;
        for (u64 r = child_lo; r <= child_hi; ++r, s += scaled_step) {
          if (finish(s, depth + 1) && std::gcd(r, d_) == 1) {
            visit(r);
          }
        }
      } else {
        descend(child_lo, child_hi, child_s, scaled_step, depth + 1, visit);
      }
    }
  }

  const DigitSet& ds_;
  const u64 b_;
  const u64 d_;
  const unsigned preperiod_;
  std::unordered_set<u64> good_;
};

// Preperiod length of a/d in base b for gcd(a, d) = 1, and d's coprime part.
std::pair<unsigned, u64> preperiod_and_coprime_part(const DigitSet& ds, u64 d) {
  unsigned preperiod = 0;
  for (const auto& [p, e] : ds.base_factors()) {
    unsigned v = 0;
    while (d % p == 0) {
      d /= p;
      ++v;
    }
    preperiod = std::max(preperiod, (v + e - 1) / e);
  }
  return {preperiod, d};
}

// Membership of a/d when d divides a power of b: the expansion terminates
// after `preperiod` digits and both representations are checked.
bool terminating_member(const DigitSet& ds, u64 a, u64 d, unsigned preperiod) {
  const u64 b = ds.base();
  std::vector<u64> digits;
  digits.reserve(preperiod);
  u64 x = a;
  for (unsigned i = 0; i < preperiod; ++i) {
    const u64 t = x * b;
    digits.push_back(t / d);
    x = t % d;
  }
  auto prefix_ok = [&](std::size_t n) {
    return std::all_of(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(n),
                       [&](u64 g) { return ds.contains(static_cast<unsigned>(g)); });
  };
  if (prefix_ok(digits.size()) && ds.contains(0)) {
    return true;
  }
  std::size_t last = digits.size();
  while (last > 0 && digits[last - 1] == 0) {
    --last;
  }
  if (last == 0 || !ds.contains(ds.base() - 1)) {
    return false;
  }
  return prefix_ok(last - 1) && ds.contains(static_cast<unsigned>(digits[last - 1] - 1));
}

// Exact membership of a reduced a/d, d < 2^40, by walking remainders past
// the preperiod and once around the cycle.
bool member_u64(const DigitSet& ds, u64 a, u64 d) {
  if (d == 1) {
    return ds.contains(a == 0 ? 0 : ds.base() - 1);
  }
  const auto [preperiod, coprime] = preperiod_and_coprime_part(ds, d);
  if (coprime == 1) {
    return terminating_member(ds, a, d, preperiod);
  }
  const u64 b = ds.base();
  u64 x = a;
  auto next_ok = [&] {
    const u64 t = x * b;
    const u64 digit = t / d;
    x = t - digit * d;
    return ds.contains(static_cast<unsigned>(digit));
  };
  for (unsigned i = 0; i < preperiod; ++i) {
    if (!next_ok()) {
      return false;
    }
  }
  const u64 start = x;
  do {
    if (!next_ok()) {
      return false;
    }
  } while (x != start);
  return true;
}

// Fraction of least denominator in the closed interval [ln/ld, hn/hd]
// (0 <= ln/ld <= hn/hd). It is the first Stern-Brocot node inside the
// interval, so it is in lowest terms and also has the least numerator.
template <typename U>
std::pair<U, U> simplest_in(U ln, U ld, U hn, U hd) {
  const U fl = ln / ld;
  if (fl * ld == ln) {
    return {fl, 1};
  }
  if ((fl + 1) * hd <= hn) {
    return {fl + 1, 1};
  }
  const auto [n, d] = simplest_in<U>(hd, hn - fl * hd, ld, ln - fl * ld);
  return {fl * n + d, n};
}

// Collects every reduced a/d in C with d <= T in one pass over the digit
// cylinders of C, for all denominators at once.
//
// The node for a digit word w of length L is the hull of C inside the
// cylinder of w: [lo/q, (lo + span)/q] with q = (b - 1) b^L,
// lo = w (b - 1) + min D and span = max D - min D. A node whose simplest
// fraction has denominator > T holds no candidate and is dropped. Two
// distinct fractions with denominators <= T are at least 1/T^2 apart, so a
// hull shorter than that holds at most one candidate, which is then
// checked exactly. Adjacent hulls can share an endpoint; callers dedup.
template <typename U>
class HullDescent {
 public:
  struct Node {
    U lo;
    U q;
  };

  HullDescent(const DigitSet& ds, u64 max_denominator)
      : ds_(ds),
        b_(ds.base()),
        min_digit_(ds.digits().front()),
        span_(ds.digits().back() - ds.digits().front()),
        T_(max_denominator),
        span_t2_(static_cast<U>(span_) * T_ * T_) {}

  Node root() const { return {min_digit_, b_ - 1}; }

  // Handles one node: records its candidate if it is a leaf, otherwise
  // passes each child to `push`.
  template <typename Push>
  void expand(const Node& node, std::vector<std::pair<u64, u64>>& found, Push&& push) const {
    // The prune test costs a continued-fraction expansion, so it only runs
    // once hulls are short enough to plausibly miss every candidate.
    if (span_t2_ < kPruneReach * node.q) {
      const auto [n, d] = simplest_in<U>(node.lo, node.q, node.lo + span_, node.q);
      if (d > T_) {
        return;
      }
      if (span_t2_ < node.q) {
        if (member_u64(ds_, static_cast<u64>(n), static_cast<u64>(d))) {
          found.emplace_back(static_cast<u64>(n), static_cast<u64>(d));
        }
        return;
      }
    }
    const U base_lo = (node.lo - min_digit_) * b_ + min_digit_;
    const U q = node.q * b_;
    for (unsigned c : ds_.digits()) {
      push(Node{base_lo + static_cast<U>(c) * (b_ - 1), q});
    }
  }

  void run(const Node& node, std::vector<std::pair<u64, u64>>& found) const {
    expand(node, found, [&](const Node& child) { run(child, found); });
  }

 private:
  static constexpr U kPruneReach = 64;

  const DigitSet& ds_;
  const U b_;
  const U min_digit_;
  const U span_;
  const U T_;
  const U span_t2_;
};

template <typename U>
std::vector<std::pair<u64, u64>> descend_all(const DigitSet& ds, u64 max_denominator, unsigned threads) {
  const HullDescent<U> descent(ds, max_denominator);
  std::vector<std::pair<u64, u64>> found;

  // Breadth-first down to a frontier wide enough to share out; the frontier
  // depends only on the inputs, never on the thread count.
  constexpr std::size_t kFrontier = 1024;
  std::vector<typename HullDescent<U>::Node> frontier = {descent.root()};
  while (!frontier.empty() && frontier.size() < kFrontier) {
    std::vector<typename HullDescent<U>::Node> next;
    for (const auto& node : frontier) {
      descent.expand(node, found, [&](const auto& child) { next.push_back(child); });
    }
    frontier.swap(next);
  }
  std::vector<std::vector<std::pair<u64, u64>>> parts(frontier.size());
  detail::parallel_for(frontier.size(), threads, 4, [&](std::size_t i) { descent.run(frontier[i], parts[i]); });
  for (const auto& part : parts) {
    found.insert(found.end(), part.begin(), part.end());
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second < y.second : x.first < y.first;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// Reduced members (a, d) with d <= T, ordered by denominator then numerator.
std::vector<std::pair<u64, u64>> all_members(const DigitSet& ds, u64 max_denominator, unsigned threads) {
  if (max_denominator < 1 || max_denominator >= (u64{1} << 32)) {
    throw PreconditionError("max denominator must be in [1, 2^32)");
  }
  // Leaf hulls have q < b * span * T^2; the simplest-fraction step needs one
  // spare bit above q.
  const u128 leaf_q = static_cast<u128>(ds.base()) * (ds.digits().back() - ds.digits().front() + 1) *
                      max_denominator * max_denominator;
  if (leaf_q < (u128{1} << 61)) {
    return descend_all<u64>(ds, max_denominator, threads);
  }
  return descend_all<u128>(ds, max_denominator, threads);
}

// Number of k in [1, n] that count as denominators: all of them, or those
// coprime to b (inclusion-exclusion over the primes of b).
u64 eligible_upto(const DigitSet& ds, u64 n, bool coprime_to_base_only) {
  if (!coprime_to_base_only) {
    return n;
  }
  const auto& f = ds.base_factors();
  u64 total = 0;
  for (u64 mask = 0; mask < (u64{1} << f.size()); ++mask) {
    u64 prod = 1;
    int sign = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (mask >> i & 1) {
        prod *= f[i].first;
        sign = -sign;
      }
    }
    total += sign > 0 ? n / prod : -(n / prod);
  }
  return total;
}

void check_denominator(u64 d) {
  if (d == 0) {
    throw PreconditionError("denominator must be >= 1");
  }
  if (d > kMaxEnumerationDenominator) {
    throw PreconditionError("denominator " + std::to_string(d) + " exceeds the enumeration limit 2^40");
  }
}

template <typename Visit>
void for_each_member_numerator(const DigitSet& ds, u64 d, Visit&& visit) {
  check_denominator(d);
  if (d == 1) {
    if (ds.contains(0)) {
      visit(u64{0});
    }
    if (ds.contains(ds.base() - 1)) {
      visit(u64{1});
    }
    return;
  }
  const auto [preperiod, coprime] = preperiod_and_coprime_part(ds, d);
  if (coprime == 1) {
    for (u64 a = 1; a < d; ++a) {
      if (std::gcd(a, d) == 1 && terminating_member(ds, a, d, preperiod)) {
        visit(a);
      }
    }
    return;
  }
  CylinderScan scan(ds, d, preperiod);
  scan.run(visit);
}

}  // namespace

std::vector<std::uint64_t> member_numerators(const DigitSet& ds, std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for_each_member_numerator(ds, d, [&out](u64 a) { out.push_back(a); });
  return out;
}

std::uint64_t count_reduced_members(const DigitSet& ds, std::uint64_t d) {
  std::uint64_t n = 0;
  for_each_member_numerator(ds, d, [&n](u64) { ++n; });
  return n;
}

std::vector<ReducedFraction> enumerate_members(const DigitSet& ds, std::span<const Integer> denominators,
                                               unsigned threads) {
  std::vector<u64> dens;
  dens.reserve(denominators.size());
  for (const auto& d : denominators) {
    if (d < 1 || !fits_u64(d) || to_u64(d) > kMaxEnumerationDenominator) {
      throw PreconditionError("denominator " + d.get_str() + " is outside [1, 2^40]");
    }
    dens.push_back(to_u64(d));
  }
  {
    auto sorted = dens;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("denominators must be distinct");
    }
  }
  std::vector<std::vector<u64>> found(dens.size());
  detail::parallel_for(dens.size(), threads, 16, [&](std::size_t i) { found[i] = member_numerators(ds, dens[i]); });

  std::vector<ReducedFraction> out;
  for (std::size_t i = 0; i < dens.size(); ++i) {
    for (u64 a : found[i]) {
      out.emplace_back(from_u64(a), from_u64(dens[i]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReducedFraction> members_up_to(const DigitSet& ds, std::uint64_t max_denominator,
                                           bool coprime_to_base_only, unsigned threads) {
  std::vector<ReducedFraction> out;
  for (const auto& [a, d] : all_members(ds, max_denominator, threads)) {
    if (!coprime_to_base_only || std::gcd(d, u64{ds.base()}) == 1) {
      out.emplace_back(from_u64(a), from_u64(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MemberCounts count_members(const DigitSet& ds, std::uint64_t max_denominator, bool coprime_to_base_only,
                           unsigned threads) {
  const u64 T = max_denominator;
  const u64 b = ds.base();
  MemberCounts out;
  out.max_denominator = T;
  out.coprime_to_base_only = coprime_to_base_only;
  u64 endpoints = 0;
  for (const auto& [a, d] : all_members(ds, T, threads)) {
    if (coprime_to_base_only && std::gcd(d, b) != 1) {
      continue;
    }
    // a/d also appears unreduced as (k a)/(k d) for every eligible k d <= T;
    // with the coprime filter, k d is eligible iff k is.
    ++out.reduced;
    out.all += eligible_upto(ds, T / d, coprime_to_base_only);
    endpoints += d == 1 ? 1 : 0;
  }
  out.reduced_without_endpoints = out.reduced - endpoints;
  out.all_without_endpoints = out.all - endpoints * eligible_upto(ds, T, coprime_to_base_only);
  return out;
}

std::uint64_t count_members_up_to(const DigitSet& ds, std::uint64_t max_denominator, bool reduced_only,
                                  bool coprime_to_base_only, unsigned threads) {
  const MemberCounts c = count_members(ds, max_denominator, coprime_to_base_only, threads);
  return reduced_only ? c.reduced : c.all;
}

std::vector<std::uint64_t> smooth_numbers(std::span<const Integer> primes, std::uint64_t limit) {
  std::vector<u64> out;
  if (limit == 0) {
    return out;
  }
  out.push_back(1);
  for (const auto& p : primes) {
    const u64 q = to_u64(p);
    if (q < 2) {
      throw PreconditionError("smooth_numbers expects primes >= 2");
    }
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      u64 x = out[i];
      while (x <= limit / q) {
        x *= q;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SIntegerCertificate enumerate_s_integers(const DigitSet& ds, const OrderProfile& profile, const Rational& epsilon,
                                         unsigned threads) {
  if (profile.base() != ds.base()) {
    throw PreconditionError("profile base " + profile.base().get_str() + " differs from digit-set base " +
                            std::to_string(ds.base()));
  }
  if (epsilon <= 0) {
    throw PreconditionError("epsilon must be > 0");
  }
  if (epsilon > ds.gap_radius()) {
    throw PreconditionError("epsilon " + to_string(epsilon) + " exceeds the gap radius " + to_string(ds.gap_radius()) +
                            " of C(" + std::to_string(ds.base()) + ", {" + ds.digits_str() +
                            "}); the certificate would be unsound");
  }
  SIntegerCertificate cert;
  cert.base = ds.base();
  cert.digits.assign(ds.digits().begin(), ds.digits().end());
  cert.primes = profile.primes();
  cert.epsilon = epsilon;
  cert.gap_radius = ds.gap_radius();
  cert.bound = density_bound(profile, epsilon);
  cert.max_denominator = floor(cert.bound);
  if (cert.max_denominator > Integer(static_cast<unsigned long>(kMaxEnumerationDenominator))) {
    throw PreconditionError("bound D = " + to_string(cert.bound) + " is beyond the exhaustive search limit 2^40");
  }
  const auto dens = smooth_numbers(cert.primes, to_u64(cert.max_denominator));
  cert.denominators_checked = dens.size();

  std::vector<Integer> as_integers;
  as_integers.reserve(dens.size());
  for (u64 d : dens) {
    as_integers.push_back(from_u64(d));
  }
  cert.members = enumerate_members(ds, as_integers, threads);
  cert.count_with_endpoints = cert.members.size();
  cert.count_without_endpoints = static_cast<std::uint64_t>(
      std::count_if(cert.members.begin(), cert.members.end(), [](const auto& x) { return !x.is_zero() && !x.is_one(); }));
  return cert;
}

}  // namespace cr
