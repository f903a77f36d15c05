#include "gts/qmetric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gts {

namespace {

struct NameEntry {
  MetricName name;
  std::string_view text;
};

constexpr NameEntry kNames[] = {
    {MetricName::d_n, "d_n"},       {MetricName::d_n1, "d_n1"},       {MetricName::d_n_plus, "d_n_plus"},
    {MetricName::d_n_plus_1, "d_n_plus_1"},                           {MetricName::d_u, "d_u"},
    {MetricName::rho_u, "rho_u"},   {MetricName::rho_u1, "rho_u1"},   {MetricName::rho_S, "rho_S"},
    {MetricName::rho_S1, "rho_S1"}, {MetricName::rho_L, "rho_L"},     {MetricName::rho_0, "rho_0"},
    {MetricName::rho_0_1, "rho_0_1"},                                 {MetricName::rho_S_minus, "rho_S_minus"},
};

}  // namespace

std::string_view to_string(MetricName m) {
  for (const auto& e : kNames)
    if (e.name == m) return e.text;
  return "?";
}

std::optional<MetricName> parse_metric_name(std::string_view s) {
  for (const auto& e : kNames)
    if (e.text == s) return e.name;
  return std::nullopt;
}

const std::vector<MetricName>& all_metric_names() {
  static const std::vector<MetricName> names = [] {
    std::vector<MetricName> v;
    for (const auto& e : kNames) v.push_back(e.name);
    return v;
  }();
  return names;
}

QuasiMetric conjugate(const QuasiMetric& d) {
  QuasiMetric c = d;
  c.conjugated = !d.conjugated;
  return c;
}

std::string to_string(const QuasiMetric& d) {
  std::string s(to_string(d.name));
  if (uses_phi(d) && d.phi_mode == PhiMode::FloatPaper) s += "@float";
  return d.conjugated ? "conj(" + s + ")" : s;
}

bool uses_phi(const QuasiMetric& d) {
  return d.name == MetricName::d_n_plus || d.name == MetricName::d_n_plus_1 || d.name == MetricName::rho_S_minus;
}

bool is_exact(const QuasiMetric& d) { return !uses_phi(d) || d.phi_mode == PhiMode::ExactSurrogate; }

bool translation_invariant(const QuasiMetric& d) {
  switch (d.name) {
    case MetricName::d_n_plus:
    case MetricName::d_n_plus_1:
    case MetricName::d_u:
    case MetricName::rho_S_minus: return false;
    default: return true;
  }
}

bool separates_points(const QuasiMetric& d) { return d.name != MetricName::rho_u && d.name != MetricName::rho_u1; }

bool symmetric(const QuasiMetric& d) {
  switch (d.name) {
    case MetricName::d_n:
    case MetricName::d_n1:
    case MetricName::d_n_plus:
    case MetricName::d_n_plus_1:
    case MetricName::d_u: return true;
    default: return false;
  }
}

BoundedClass bounded_class(const QuasiMetric& d) {
  BoundedClass c = BoundedClass::All;
  switch (d.name) {
    case MetricName::d_n:
    case MetricName::rho_0: c = BoundedClass::Bounded; break;
    case MetricName::d_n_plus:
    case MetricName::d_u:
    case MetricName::rho_u:
    case MetricName::rho_S: c = BoundedClass::Above; break;
    case MetricName::rho_L: c = BoundedClass::Below; break;
    default: c = BoundedClass::All; break;
  }
  // Conjugate balls of rho_S_minus are (lb, x] or (lb, +inf) with lb finite.
  if (d.conjugated && d.name == MetricName::rho_S_minus) return BoundedClass::Below;
  if (d.conjugated && !symmetric(d)) {
    if (c == BoundedClass::Above) return BoundedClass::Below;
    if (c == BoundedClass::Below) return BoundedClass::Above;
  }
  return c;
}

TopologyKind topology_of(const QuasiMetric& d) {
  TopologyKind t = TopologyKind::Nat;
  switch (d.name) {
    case MetricName::rho_u:
    case MetricName::rho_u1: t = TopologyKind::Upper; break;
    case MetricName::rho_S:
    case MetricName::rho_S1:
    case MetricName::rho_L:
    case MetricName::rho_0:
    case MetricName::rho_0_1:
    case MetricName::rho_S_minus: t = TopologyKind::SorgR; break;
    default: t = TopologyKind::Nat; break;
  }
  if (!d.conjugated) return t;
  switch (t) {
    case TopologyKind::Upper: return TopologyKind::Lower;
    case TopologyKind::SorgR: return TopologyKind::SorgL;
    default: return t;
  }
}

Rational phi_q(const Rational& x) {
  if (x < 0) return Rational(1 / (1 - x));
  return Rational(1 + x);
}

Rational phi_q_inverse(const Rational& t) {
  if (t <= 0) throw std::invalid_argument("phi inverse outside (0, +inf)");
  if (t < 1) return Rational(1 - 1 / t);
  return Rational(t - 1);
}

namespace {

// Definitions with x as the first argument, before conjugation.
template <class T, class Phi>
T raw_eval(MetricName m, const T& x, const T& y, const Phi& phi) {
  const T zero(0), one(1);
  auto absd = [](const T& v) { return v < 0 ? T(-v) : v; };
  auto cap = [&](const T& v) { return std::min(v, one); };
  auto rho_s = [&](const T& a, const T& b) { return a <= b ? T(b - a) : one; };
  auto rho_0 = [&](const T& a, const T& b) { return a <= b ? T(b - a) : T(one + a - b); };
  switch (m) {
    case MetricName::d_n: return absd(T(x - y));
    case MetricName::d_n1: return cap(absd(T(x - y)));
    case MetricName::d_n_plus: return absd(T(phi(x) - phi(y)));
    case MetricName::d_n_plus_1: return cap(absd(T(phi(x) - phi(y))));
    case MetricName::d_u:
      return T(cap(absd(T(x - y))) + absd(T(std::max(y, zero) - std::max(x, zero))));
    case MetricName::rho_u: return std::max(zero, T(y - x));
    case MetricName::rho_u1: return cap(std::max(zero, T(y - x)));
    case MetricName::rho_S: return rho_s(x, y);
    case MetricName::rho_S1: return cap(rho_s(x, y));
    case MetricName::rho_L: return x <= y ? cap(T(y - x)) : T(one + x - y);
    case MetricName::rho_0: return rho_0(x, y);
    case MetricName::rho_0_1: return cap(rho_0(x, y));
    case MetricName::rho_S_minus: return rho_s(phi(T(-y)), phi(T(-x)));
  }
  return zero;
}

void require_exact(const QuasiMetric& d, const char* what) {
  if (!is_exact(d))
    throw UnsupportedOperation(std::string(what) + " is not available for the approximate metric " + to_string(d));
}

void require_positive(const Rational& r, const char* what) {
  if (r <= 0) throw std::invalid_argument(std::string(what) + " must be a positive rational");
}

RealSet interval_set(const ExtRat& lo, bool lo_closed, const ExtRat& hi, bool hi_closed) {
  return RealSet::of(Interval::make(lo, lo_closed, hi, hi_closed));
}

const ExtRat kNegInf = ExtRat::neg_inf();
const ExtRat kPosInf = ExtRat::pos_inf();

// Where a continuous function that is monotone away from x first reaches r,
// searching in direction dir (+1 or -1). Breakpoints include every kink.
ExtRat crossing(const std::function<Rational(const Rational&)>& f, const Rational& x, int dir,
                std::vector<Rational> breaks, const Rational& r) {
  std::erase_if(breaks, [&](const Rational& b) { return dir > 0 ? b <= x : b >= x; });
  breaks.push_back(x);
  std::sort(breaks.begin(), breaks.end());
  if (dir < 0) std::reverse(breaks.begin(), breaks.end());
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Rational a = breaks[i], b = breaks[i + 1];
    Rational fa = f(a), fb = f(b);
    if (fb >= r) return ExtRat(Rational(a + (r - fa) * (b - a) / (fb - fa)));
  }
  Rational b = breaks.back();
  Rational fb = f(b), slope = f(Rational(b + dir)) - fb;
  if (slope <= 0) return dir > 0 ? kPosInf : kNegInf;
  return ExtRat(Rational(b + dir * (r - fb) / slope));
}

RealSet raw_ball(MetricName m, const Rational& x, const Rational& r) {
  const bool big = r > 1;
  switch (m) {
    case MetricName::d_n: return interval_set(Rational(x - r), false, Rational(x + r), false);
    case MetricName::d_n1:
      return big ? RealSet::reals() : interval_set(Rational(x - r), false, Rational(x + r), false);
    case MetricName::rho_u: return interval_set(kNegInf, false, Rational(x + r), false);
    case MetricName::rho_u1: return big ? RealSet::reals() : interval_set(kNegInf, false, Rational(x + r), false);
    case MetricName::rho_S:
      return big ? interval_set(kNegInf, false, Rational(x + r), false)
                 : interval_set(x, true, Rational(x + r), false);
    case MetricName::rho_S1: return big ? RealSet::reals() : interval_set(x, true, Rational(x + r), false);
    case MetricName::rho_L:
      return big ? interval_set(Rational(x + 1 - r), false, kPosInf, false)
                 : interval_set(x, true, Rational(x + r), false);
    case MetricName::rho_0:
      return big ? interval_set(Rational(x + 1 - r), false, Rational(x + r), false)
                 : interval_set(x, true, Rational(x + r), false);
    case MetricName::rho_0_1: return big ? RealSet::reals() : interval_set(x, true, Rational(x + r), false);
    case MetricName::d_n_plus_1:
      if (big) return RealSet::reals();
      [[fallthrough]];
    case MetricName::d_n_plus: {
      Rational px = phi_q(x);
      Rational t = px - r;
      ExtRat lo = t <= 0 ? kNegInf : ExtRat(phi_q_inverse(t));
      return interval_set(lo, false, phi_q_inverse(Rational(px + r)), false);
    }
    case MetricName::d_u: {
      auto f = [&](const Rational& y) { return raw_eval<Rational>(m, x, y, phi_q); };
      std::vector<Rational> breaks{Rational(x - 1), Rational(x + 1), Rational(0)};
      return interval_set(crossing(f, x, -1, breaks, r), false, crossing(f, x, +1, breaks, r), false);
    }
    case MetricName::rho_S_minus: {
      Rational pm = phi_q(Rational(-x));
      ExtRat hi = pm > r ? ExtRat(Rational(-phi_q_inverse(Rational(pm - r)))) : kPosInf;
      return big ? interval_set(kNegInf, false, hi, false) : interval_set(x, true, hi, false);
    }
  }
  return RealSet();
}

}  // namespace

Rational eval(const QuasiMetric& d, const Rational& x, const Rational& y) {
  require_exact(d, "exact evaluation");
  return d.conjugated ? raw_eval<Rational>(d.name, y, x, phi_q) : raw_eval<Rational>(d.name, x, y, phi_q);
}

double eval_approx(const QuasiMetric& d, double x, double y) {
  std::function<double(double)> phi;
  if (d.phi_mode == PhiMode::FloatPaper)
    phi = [](double v) { return v < 0 ? std::exp(v) : 1 + v; };
  else
    phi = [](double v) { return v < 0 ? 1 / (1 - v) : 1 + v; };
  return d.conjugated ? raw_eval<double>(d.name, y, x, phi) : raw_eval<double>(d.name, x, y, phi);
}

RealSet ball(const QuasiMetric& d, const Rational& x, const Rational& r) {
  require_exact(d, "symbolic ball");
  require_positive(r, "ball radius");
  if (!d.conjugated || symmetric(d)) return raw_ball(d.name, x, r);
  if (translation_invariant(d)) return affine_image(raw_ball(d.name, Rational(0), r), Rational(-1), x);
  // conjugate of rho_S_minus: {y : rho_S(phi(-x), phi(-y)) < r}
  ExtRat lo(Rational(-phi_q_inverse(Rational(phi_q(Rational(-x)) + r))));
  return r > 1 ? interval_set(lo, false, kPosInf, false) : interval_set(lo, false, x, true);
}

namespace {

Interval only_interval(const RealSet& s) {
  auto parts = s.core();
  if (parts.size() != 1 || s.has_tails()) throw std::logic_error("ball is not a single interval");
  return parts.front();
}

// The union of the balls centred in one connected piece. Ball ends move
// monotonically and continuously with the centre, so the ends of the union
// come from the balls at the ends of the piece.
Interval component_nbhd(const QuasiMetric& d, const Interval& c, const Rational& delta) {
  ExtRat lo = kNegInf, hi = kPosInf;
  bool lo_closed = false, hi_closed = false;
  if (c.lo.is_finite()) {
    Interval b = only_interval(ball(d, c.lo.value(), delta));
    if (b.lo == c.lo && b.lo_closed) {
      lo = c.lo;
      lo_closed = c.lo_closed;
    } else {
      lo = b.lo;
      lo_closed = b.lo_closed;
    }
  }
  if (c.hi.is_finite()) {
    Interval b = only_interval(ball(d, c.hi.value(), delta));
    if (b.hi == c.hi && b.hi_closed) {
      hi = c.hi;
      hi_closed = c.hi_closed;
    } else {
      hi = b.hi;
      hi_closed = b.hi_closed;
    }
  }
  return Interval::make(lo, lo_closed, hi, hi_closed);
}

RealSet finite_nbhd(const QuasiMetric& d, const std::vector<Interval>& parts, const Rational& delta) {
  std::vector<Interval> out;
  out.reserve(parts.size());
  for (const auto& c : parts) out.push_back(component_nbhd(d, c, delta));
  return RealSet::normalize(out);
}

detail::CellList cells_of(const RealSet& s) {
  detail::CellList out;
  for (const auto& i : s.core()) out.push_back(detail::to_cell(i));
  return out;
}

std::vector<Interval> intervals_of(const detail::CellList& cells) {
  std::vector<Interval> out;
  for (const auto& c : cells) out.push_back(detail::to_interval(c));
  return out;
}

// Translation-invariant metric, bounded ball around 0 of half-width w: the
// neighbourhood is the Minkowski sum with that ball, computed per region.
RealSet tail_nbhd(const QuasiMetric& d, const RealSet& a, const Rational& delta, const Rational& w) {
  const detail::Layout& l = a.layout();
  auto side = [&](const detail::Pattern& p) {
    if (p.is_empty()) return detail::empty_pattern();
    auto window = detail::closed_window(Rational(-2 * w - p.period), Rational(2 * p.period + 2 * w));
    RealSet n = finite_nbhd(d, intervals_of(detail::expand(p, window)), delta);
    return detail::Pattern{p.period, detail::cells_clip(cells_of(n), detail::half_open_window(0, p.period))};
  };
  Rational lo = l.cut_lo - w, hi = l.cut_hi + w;
  auto window = detail::closed_window(Rational(l.cut_lo - 2 * w), Rational(l.cut_hi + 2 * w));
  RealSet mid = finite_nbhd(d, intervals_of(detail::window_set(l, window)), delta);
  detail::Layout out{side(l.left), lo, detail::cells_clip(cells_of(mid), detail::closed_window(lo, hi)), hi,
                     side(l.right)};
  return RealSet::from_layout(std::move(out));
}

}  // namespace

RealSet nbhd(const QuasiMetric& d, const RealSet& a, const Rational& delta) {
  require_exact(d, "symbolic neighbourhood");
  require_positive(delta, "neighbourhood radius");
  if (a.is_empty()) return a;
  if (!a.has_tails()) return finite_nbhd(d, a.core(), delta);
  if (!translation_invariant(d))
    throw UnsupportedOperation("neighbourhood of a periodic tail needs a translation-invariant metric, got " +
                               to_string(d));
  Interval b0 = only_interval(ball(d, Rational(0), delta));
  if (!b0.lo.is_finite() && !b0.hi.is_finite()) return RealSet::reals();
  if (!b0.lo.is_finite() || !b0.hi.is_finite()) {
    // Every ball reaches one infinity: only the extreme piece on the other
    // side matters.
    bool down = !b0.lo.is_finite();
    auto ext = down ? supremum(a) : infimum(a);
    if (!ext->is_finite()) return RealSet::reals();
    const Rational& e = ext->value();
    auto parts = components_in(a, down ? Interval::closed(Rational(e - 1), e) : Interval::closed(e, Rational(e + 1)));
    return RealSet::of(component_nbhd(d, down ? parts.back() : parts.front(), delta));
  }
  Rational w = std::max(abs(b0.lo.value()), abs(b0.hi.value()));
  return tail_nbhd(d, a, delta, w);
}

bool is_bounded_set(const QuasiMetric& d, const RealSet& a) {
  if (a.is_empty()) return true;
  Boundedness b = boundedness(a);
  switch (bounded_class(d)) {
    case BoundedClass::Bounded: return b.bounded;
    case BoundedClass::Above: return b.bounded_above;
    case BoundedClass::Below: return b.bounded_below;
    case BoundedClass::All: return true;
  }
  return false;
}

RefuteVerdict uniform_equiv_refute(const QuasiMetric& d1, const QuasiMetric& d2, const Rational& eps,
                                   const std::vector<std::pair<Rational, Rational>>& pairs) {
  require_exact(d1, "uniform equivalence refutation");
  require_exact(d2, "uniform equivalence refutation");
  require_positive(eps, "eps");
  RefuteVerdict v;
  Rational delta(1);
  for (int k = 0; k <= 20; ++k, delta /= 2) {
    bool found = false;
    for (const auto& [x, y] : pairs) {
      if (eval(d1, x, y) < delta && eval(d2, x, y) >= eps) {
        v.witnesses.push_back({delta, {x, y}});
        found = true;
        break;
      }
    }
    if (!found) {
      v.open_delta = delta;
      v.witnesses.clear();
      return v;
    }
  }
  v.refuted = true;
  return v;
}

}  // namespace gts
