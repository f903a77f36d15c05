#ifndef GTS_TESTS_QMETRIC_LAWS_HPP
#define GTS_TESTS_QMETRIC_LAWS_HPP

#include "gts/qmetric.hpp"
#include "realset_laws.hpp"

namespace gts::testing {

inline Rational random_rational(SetGen& gen, long range = 10) {
  long den = gen.pick(1, 12);
  return q(gen.pick(-range * den, range * den), den);
}

inline Rational random_radius(SetGen& gen) {
  long den = gen.pick(1, 16);
  return q(gen.pick(1, 3 * den), den);
}

inline std::vector<QuasiMetric> exact_metrics_with_conjugates() {
  std::vector<QuasiMetric> out;
  for (auto n : all_metric_names()) {
    out.push_back(metric(n));
    out.push_back(conjugate(metric(n)));
  }
  return out;
}

/// Non-negativity, d(x,x) = 0 and the triangle inequality.
inline LawResult law_metric_axioms(const QuasiMetric& d, long n, std::uint64_t seed) {
  LawResult res{"quasi-pseudometric axioms " + to_string(d)};
  SetGen gen(seed);
  for (long i = 0; i < n; ++i) {
    Rational x = random_rational(gen), y = random_rational(gen), z = random_rational(gen);
    if (gen.coin(10)) y = x;
    Rational dxy = eval(d, x, y);
    bool ok = dxy >= 0 && eval(d, x, x) == 0 && dxy <= eval(d, x, z) + eval(d, z, y);
    ok = ok && eval(conjugate(d), x, y) == eval(d, y, x);
    res.record(ok, [&] { return "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z); });
  }
  return res;
}

/// Ball membership agrees with eval, both at random points and at the ball's
/// own endpoints; every ball is a single interval.
inline LawResult law_ball_eval(const QuasiMetric& d, long n, std::uint64_t seed) {
  LawResult res{"ball-eval agreement " + to_string(d)};
  SetGen gen(seed);
  for (long i = 0; i < n; ++i) {
    Rational x = random_rational(gen), r = random_radius(gen);
    RealSet b = ball(d, x, r);
    auto core = b.core();
    bool ok = core.size() == 1 && !b.has_tails() && contains_point(b, x);
    std::vector<Rational> ys{random_rational(gen), random_rational(gen)};
    for (const auto& c : core) {
      if (c.lo.is_finite()) ys.push_back(c.lo.value());
      if (c.hi.is_finite()) ys.push_back(c.hi.value());
    }
    for (const auto& y : ys) ok = ok && contains_point(b, y) == (eval(d, x, y) < r);
    res.record(ok, [&] { return "x=" + to_string(x) + " r=" + to_string(r) + " ball=" + to_string(b); });
  }
  return res;
}

/// nbhd(A u B) = nbhd(A) u nbhd(B), A is inside nbhd(A), each ball centred in
/// A lies inside nbhd(A).
inline LawResult law_nbhd(const QuasiMetric& d, long n, std::uint64_t seed) {
  LawResult res{"neighbourhood laws " + to_string(d)};
  SetGen gen(seed);
  bool tails = translation_invariant(d);
  for (long i = 0; i < n; ++i) {
    RealSet a = gen.set(tails), b = gen.set(tails);
    Rational delta = random_radius(gen);
    RealSet na = nbhd(d, a, delta), nb = nbhd(d, b, delta);
    bool ok = nbhd(d, unite(a, b), delta) == unite(na, nb) && is_subset(a, na);
    for (const auto& x : law_grid())
      if (contains_point(a, x) && gen.coin(5)) ok = ok && is_subset(ball(d, x, delta), na);
    res.record(ok, [&] { return to_string(a) + " ; " + to_string(b) + " delta=" + to_string(delta); });
  }
  return res;
}

}  // namespace gts::testing

#endif  // GTS_TESTS_QMETRIC_LAWS_HPP
