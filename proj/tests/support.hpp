#ifndef GTS_TESTS_SUPPORT_HPP
#define GTS_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "gts/realset.hpp"

namespace gts::testing {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }
inline ExtRat ninf() { return ExtRat::neg_inf(); }
inline ExtRat pinf() { return ExtRat::pos_inf(); }

inline RealSet set_of(std::initializer_list<Interval> parts) {
  std::vector<Interval> v(parts);
  return RealSet::normalize(v);
}

inline RealSet left_tail_set(std::vector<Interval> pattern, Rational period, Rational cut) {
  return RealSet::normalize({}, PeriodicTail{std::move(pattern), std::move(period), std::move(cut)});
}

inline RealSet right_tail_set(std::vector<Interval> pattern, Rational period, Rational cut) {
  return RealSet::normalize({}, std::nullopt,
                            PeriodicTail{std::move(pattern), std::move(period), std::move(cut)});
}

/// Grid points a + k*step over [lo, hi].
inline std::vector<Rational> grid(const Rational& lo, const Rational& hi, const Rational& step) {
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

/// Unnormalized pieces of a set together with a direct membership test that
/// does not go through the canonical representation.
struct RawSet {
  std::vector<Interval> parts;
  std::optional<PeriodicTail> left;
  std::optional<PeriodicTail> right;

  RealSet build() const { return RealSet::normalize(parts, left, right); }

  static bool in_interval(const Interval& i, const Rational& x) {
    ExtRat e(x);
    bool lo_ok = i.lo_closed ? i.lo <= e : i.lo < e;
    bool hi_ok = i.hi_closed ? e <= i.hi : e < i.hi;
    return lo_ok && hi_ok;
  }

  static bool in_tail(const PeriodicTail& t, const Rational& x) {
    Rational r = x - rat_floor(Rational(x / t.period)) * t.period;
    for (const auto& i : t.pattern)
      if (in_interval(i, r)) return true;
    return false;
  }

  bool contains(const Rational& x) const {
    for (const auto& i : parts)
      if (in_interval(i, x)) return true;
    if (left && x < left->cut && in_tail(*left, x)) return true;
    if (right && x > right->cut && in_tail(*right, x)) return true;
    return false;
  }
};

/// Random sets built from small dyadic endpoints, optionally with tails.
class SetGen {
public:
  explicit SetGen(std::uint64_t seed) : rng_(seed) {}

  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(int pct = 50) { return pick(0, 99) < pct; }
  std::mt19937_64& rng() { return rng_; }

  Rational dyadic(long lo, long hi, long den = 4) { return q(pick(lo * den, hi * den), den); }

  Interval interval(long lo = -6, long hi = 6, long den = 4) {
    if (coin(15)) return Interval::point(dyadic(lo, hi, den));
    Rational a = dyadic(lo, hi, den), b = dyadic(lo, hi, den);
    if (a == b) b += Rational(1, den);
    if (b < a) std::swap(a, b);
    ExtRat ea = a, eb = b;
    bool ca = coin(), cb = coin();
    if (coin(8)) {
      ea = ExtRat::neg_inf();
      ca = false;
    }
    if (coin(8)) {
      eb = ExtRat::pos_inf();
      cb = false;
    }
    return Interval::make(ea, ca, eb, cb);
  }

  std::vector<Interval> pattern(const Rational& period) {
    std::vector<Interval> out;
    long n = pick(1, 2);
    for (long i = 0; i < n; ++i) {
      long den = 8;
      long top = static_cast<long>(mpz_class(period * den).get_si());
      long a = pick(0, top - 1), b = pick(a, top - 1);
      bool ca = coin(), cb = coin();
      if (a == b) {
        out.push_back(Interval::point(q(a, den)));
      } else {
        out.push_back(Interval::make(q(a, den), ca, q(b, den), cb));
      }
    }
    return out;
  }

  RealSet finite_set(int max_parts = 4) {
    std::vector<Interval> parts;
    long n = pick(0, max_parts);
    for (long i = 0; i < n; ++i) parts.push_back(interval());
    return RealSet::normalize(parts);
  }

  RawSet raw(bool tails = true) {
    RawSet r;
    long n = pick(0, 4);
    for (long i = 0; i < n; ++i) r.parts.push_back(interval());
    if (tails && coin(35)) {
      Rational p = q(pick(1, 4), 2);
      r.left = PeriodicTail{pattern(p), p, q(pick(-8, 4), 2)};
    }
    if (tails && coin(35)) {
      Rational p = q(pick(1, 4), 2);
      r.right = PeriodicTail{pattern(p), p, q(pick(-4, 8), 2)};
    }
    return r;
  }

  RealSet set(bool tails = true) { return raw(tails).build(); }

private:
  std::mt19937_64 rng_;
};

}  // namespace gts::testing

#endif  // GTS_TESTS_SUPPORT_HPP
