#include "cr/cantor.hpp"

#include <algorithm>
#include <map>

#include "cr/errors.hpp"

namespace cr {

namespace {

struct GapShape {
  Rational min_point;
  Rational max_point;
  Rational widest_interior;  // widest first-level gap strictly inside [min C, max C]
};

GapShape gap_shape(unsigned base, std::span<const unsigned> digits) {
  const Rational bm1(base - 1);
  GapShape g;
  g.min_point = Rational(digits.front()) / bm1;
  g.max_point = Rational(digits.back()) / bm1;
  const Rational span = g.max_point - g.min_point;
  g.widest_interior = 0;
  for (std::size_t i = 1; i < digits.size(); ++i) {
    Rational gap = (Rational(digits[i] - digits[i - 1]) - span) / base;
    if (gap > g.widest_interior) {
      g.widest_interior = gap;
    }
  }
  for (auto* r : {&g.min_point, &g.max_point, &g.widest_interior}) {
    r->canonicalize();
  }
  return g;
}

}  // namespace

DigitSet::DigitSet(unsigned base, std::vector<unsigned> digits) : base_(base), digits_(std::move(digits)) {
  if (base_ < 2 || base_ > kMaxBase) {
    throw PreconditionError("base must be in [2, " + std::to_string(kMaxBase) + "], got " + std::to_string(base_));
  }
  if (digits_.empty()) {
    throw PreconditionError("digit set must be non-empty");
  }
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
  if (digits_.back() >= base_) {
    throw PreconditionError("digit " + std::to_string(digits_.back()) + " is not below the base " +
                            std::to_string(base_));
  }
  mask_.assign(base_, false);
  for (unsigned d : digits_) {
    mask_[d] = true;
  }
  unsigned run = 0;
  for (unsigned d = 0; d < base_; ++d) {
    run = mask_[d] ? 0 : run + 1;
    missing_run_ = std::max(missing_run_, run);
  }

  const GapShape g = gap_shape(base_, digits_);
  epsilon_exact_ = std::max({g.min_point, Rational(1 - g.max_point), Rational(g.widest_interior / 2)});
  epsilon_exact_.canonicalize();
  gap_radius_ = std::max(g.widest_interior, Rational(g.min_point + 1 - g.max_point)) / 2;
  gap_radius_.canonicalize();

  unsigned rest = base_;
  for (unsigned p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      base_factors_.emplace_back(p, e);
    }
  }
  if (rest > 1) {
    base_factors_.emplace_back(rest, 1);
  }
}

Rational DigitSet::epsilon_claimed() const {
  Rational r(missing_run_, 2 * base_);
  r.canonicalize();
  return r;
}

Rational DigitSet::min_point() const {
  Rational r(digits_.front(), base_ - 1);
  r.canonicalize();
  return r;
}

Rational DigitSet::max_point() const {
  Rational r(digits_.back(), base_ - 1);
  r.canonicalize();
  return r;
}

std::string DigitSet::digits_str() const {
  std::string out;
  for (unsigned d : digits_) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(d);
  }
  return out;
}

Expansion expand(unsigned base, const ReducedFraction& x) {
  if (base < 2) {
    throw PreconditionError("base must be >= 2");
  }
  if (x.is_one()) {
    throw PreconditionError("expand expects x in [0, 1); got 1");
  }
  const Integer& d = x.den();
  std::map<Integer, std::size_t> seen;
  std::vector<unsigned> digits;
  Integer r = x.num();
  while (seen.find(r) == seen.end()) {
    seen.emplace(r, digits.size());
    r *= base;
    Integer q;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    digits.push_back(static_cast<unsigned>(q.get_ui()));
  }
  const std::size_t start = seen.at(r);
  Expansion e;
  e.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
  e.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
  return e;
}

Rational expansion_value(unsigned base, const Expansion& e) {
  if (e.period.empty()) {
    throw PreconditionError("expansion period must be non-empty");
  }
  Integer head = 0;
  for (unsigned digit : e.preperiod) {
    head = head * base + digit;
  }
  Integer cycle = 0;
  for (unsigned digit : e.period) {
    cycle = cycle * base + digit;
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), base, e.preperiod.size());
  Integer cycle_den;
  mpz_ui_pow_ui(cycle_den.get_mpz_t(), base, e.period.size());
  cycle_den -= 1;
  Rational value = (Rational(head) + Rational(cycle, cycle_den)) / scale;
  value.canonicalize();
  return value;
}

std::optional<Expansion> dual_expansion(unsigned base, const Expansion& e) {
  if (e.period.size() != 1 || e.period[0] != 0) {
    return std::nullopt;
  }
  auto last = std::find_if(e.preperiod.rbegin(), e.preperiod.rend(), [](unsigned d) { return d != 0; });
  if (last == e.preperiod.rend()) {
    return std::nullopt;
  }
  const auto keep = static_cast<std::size_t>(e.preperiod.rend() - last);
  Expansion out;
  out.preperiod.assign(e.preperiod.begin(), e.preperiod.begin() + static_cast<std::ptrdiff_t>(keep));
  out.preperiod.back() -= 1;
  out.period = {base - 1};
  return out;
}

bool member(const DigitSet& ds, const ReducedFraction& x) {
  if (x.is_one()) {
    return ds.contains(ds.base() - 1);
  }
  auto all_allowed = [&ds](const Expansion& e) {
    return std::all_of(e.preperiod.begin(), e.preperiod.end(), [&](unsigned d) { return ds.contains(d); }) &&
           std::all_of(e.period.begin(), e.period.end(), [&](unsigned d) { return ds.contains(d); });
  };
  const Expansion e = expand(ds.base(), x);
  if (all_allowed(e)) {
    return true;
  }
  const auto dual = dual_expansion(ds.base(), e);
  return dual && all_allowed(*dual);
}

Rational sup_distance(const DigitSet& ds) { return ds.epsilon_exact(); }

}  // namespace cr
