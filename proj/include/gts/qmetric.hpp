#ifndef GTS_QMETRIC_HPP
#define GTS_QMETRIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gts/realset.hpp"

namespace gts {

enum class MetricName {
  d_n,
  d_n1,
  d_n_plus,
  d_n_plus_1,
  d_u,
  rho_u,
  rho_u1,
  rho_S,
  rho_S1,
  rho_L,
  rho_0,
  rho_0_1,
  rho_S_minus,
};

std::string_view to_string(MetricName m);
std::optional<MetricName> parse_metric_name(std::string_view s);
const std::vector<MetricName>& all_metric_names();

/// exact_surrogate uses phi(x) = 1/(1-x) on x < 0; float_paper uses exp(x)
/// and supports approximate evaluation only.
enum class PhiMode { ExactSurrogate, FloatPaper };

struct QuasiMetric {
  MetricName name = MetricName::d_n;
  PhiMode phi_mode = PhiMode::ExactSurrogate;
  bool conjugated = false;

  friend bool operator==(const QuasiMetric&, const QuasiMetric&) = default;
};

inline QuasiMetric metric(MetricName n) { return QuasiMetric{n}; }
QuasiMetric conjugate(const QuasiMetric& d);
std::string to_string(const QuasiMetric& d);

/// Which sets are d-bounded: bounded sets, sets bounded above, sets bounded
/// below, or every set.
enum class BoundedClass { Bounded, Above, Below, All };

bool uses_phi(const QuasiMetric& d);
bool is_exact(const QuasiMetric& d);
bool translation_invariant(const QuasiMetric& d);
/// d(x,y) = d(y,x) = 0 forces x = y.
bool separates_points(const QuasiMetric& d);
bool symmetric(const QuasiMetric& d);
BoundedClass bounded_class(const QuasiMetric& d);
TopologyKind topology_of(const QuasiMetric& d);

Rational phi_q(const Rational& x);
/// Inverse of phi_q on (0, +inf).
Rational phi_q_inverse(const Rational& t);

/// Exact value. Throws UnsupportedOperation for float_paper metrics.
Rational eval(const QuasiMetric& d, const Rational& x, const Rational& y);
/// Approximate value; the only evaluation available in float_paper mode.
double eval_approx(const QuasiMetric& d, double x, double y);

/// {y : d(x, y) < r}, always a single interval.
RealSet ball(const QuasiMetric& d, const Rational& x, const Rational& r);
/// Union of the balls of radius delta centred in A.
RealSet nbhd(const QuasiMetric& d, const RealSet& a, const Rational& delta);
bool is_bounded_set(const QuasiMetric& d, const RealSet& a);

struct RefuteVerdict {
  bool refuted = false;
  /// For each tested delta, the pair with d1 < delta and d2 >= eps.
  std::vector<std::pair<Rational, std::pair<Rational, Rational>>> witnesses;
  /// First delta without a witness when not refuted.
  std::optional<Rational> open_delta;
};

/// Refuter for uniform equivalence over deltas 2^-k, k = 0..20.
RefuteVerdict uniform_equiv_refute(const QuasiMetric& d1, const QuasiMetric& d2, const Rational& eps,
                                   const std::vector<std::pair<Rational, Rational>>& pairs);

}  // namespace gts

#endif  // GTS_QMETRIC_HPP
