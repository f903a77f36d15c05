#include "doctest.h"
#include "qmetric_laws.hpp"

using namespace gts;
using namespace gts::testing;

TEST_SUITE("qmetric") {

TEST_CASE("evaluation") {
  CHECK(eval(metric(MetricName::rho_S), q(0), q(1, 2)) == q(1, 2));
  CHECK(eval(metric(MetricName::rho_S), q(1, 2), q(0)) == 1);
  CHECK(eval(metric(MetricName::d_n_plus), q(-1), q(0)) == q(1, 2));
  CHECK(eval(metric(MetricName::rho_0), q(1), q(0)) == 2);
  CHECK(eval(metric(MetricName::rho_L), q(0), q(5)) == 1);
  CHECK(eval(metric(MetricName::d_u), q(-3), q(2)) == 3);
  // phi(-(-1)) = 2, phi(-0) = 1: rho_S(1, 2) = 1 for the pair (x, y) = (-1, 0)
  CHECK(eval(metric(MetricName::rho_S_minus), q(-1), q(0)) == 1);
  CHECK(eval(metric(MetricName::rho_S_minus), q(0), q(1)) == q(1, 2));
  for (auto n : all_metric_names())
    for (long k = -3; k <= 3; ++k) CHECK(eval(metric(n), q(k, 3), q(k, 3)) == 0);
}

TEST_CASE("phi surrogate") {
  CHECK(phi_q(q(-1)) == q(1, 2));
  CHECK(phi_q(q(0)) == 1);
  CHECK(phi_q_inverse(q(1, 7)) == -6);
  CHECK(phi_q_inverse(q(29, 4)) == q(25, 4));
  for (long k = -20; k <= 20; ++k) CHECK(phi_q_inverse(phi_q(q(k, 4))) == q(k, 4));
}

TEST_CASE("float mode is evaluation only") {
  QuasiMetric f{MetricName::d_n_plus, PhiMode::FloatPaper};
  CHECK(eval_approx(f, -1.0, 0.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-9));
  CHECK_THROWS_AS(ball(f, q(0), q(1)), UnsupportedOperation);
  CHECK_THROWS_AS(eval(f, q(0), q(1)), UnsupportedOperation);
  CHECK_THROWS_AS(nbhd(f, RealSet::point(q(0)), q(1)), UnsupportedOperation);
  CHECK(eval_approx(QuasiMetric{MetricName::rho_S, PhiMode::FloatPaper}, 0.0, 0.5) == 0.5);
}

TEST_CASE("balls") {
  CHECK(ball(metric(MetricName::rho_S), q(0), q(1, 2)) == RealSet::of(Interval::closed_open(q(0), q(1, 2))));
  CHECK(ball(metric(MetricName::rho_u), q(0), q(1)) == RealSet::of(Interval::open(ninf(), q(1))));
  CHECK(ball(conjugate(metric(MetricName::rho_S)), q(0), q(1, 2)) ==
        RealSet::of(Interval::open_closed(q(-1, 2), q(0))));
  CHECK(ball(metric(MetricName::rho_0), q(0), q(2)) == RealSet::of(Interval::open(q(-1), q(2))));
  CHECK(ball(metric(MetricName::rho_S1), q(0), q(2)) == RealSet::reals());
  CHECK(ball(metric(MetricName::rho_L), q(0), q(3, 2)) == RealSet::of(Interval::open(q(-1, 2), pinf())));
  // d_u around -3 with radius 3: left end where 1 + 0 stays below 3, right end at 2.
  CHECK(ball(metric(MetricName::d_u), q(-3), q(3)) == RealSet::of(Interval::open(ninf(), q(2))));
  CHECK_THROWS_AS(ball(metric(MetricName::d_n), q(0), q(0)), std::invalid_argument);
}

TEST_CASE("ball closed forms match a sampling oracle") {
  for (auto d : exact_metrics_with_conjugates()) {
    for (const auto& x : {q(-2), q(0), q(3, 2)}) {
      for (const auto& r : {q(1, 2), q(1), q(5, 2)}) {
        RealSet b = ball(d, x, r);
        for (const auto& y : grid(q(-6), q(6), q(1, 64))) REQUIRE(contains_point(b, y) == (eval(d, x, y) < r));
      }
    }
  }
}

TEST_CASE("conjugation") {
  QuasiMetric s = metric(MetricName::rho_S);
  CHECK(conjugate(conjugate(s)) == s);
  for (const auto& x : grid(q(-2), q(2), q(1, 4)))
    for (const auto& y : grid(q(-2), q(2), q(1, 4))) {
      CHECK(eval(conjugate(conjugate(s)), x, y) == eval(s, x, y));
      CHECK(eval(conjugate(metric(MetricName::d_n)), x, y) == eval(metric(MetricName::d_n), x, y));
    }
  CHECK(topology_of(conjugate(metric(MetricName::rho_u))) == TopologyKind::Lower);
  CHECK(topology_of(conjugate(metric(MetricName::rho_S))) == TopologyKind::SorgL);
  CHECK(topology_of(conjugate(metric(MetricName::d_n))) == TopologyKind::Nat);
}

TEST_CASE("induced topologies") {
  CHECK(topology_of(metric(MetricName::rho_L)) == TopologyKind::SorgR);
  CHECK(topology_of(metric(MetricName::rho_u)) == TopologyKind::Upper);
  CHECK(topology_of(metric(MetricName::rho_0)) == TopologyKind::SorgR);
  CHECK(topology_of(metric(MetricName::d_n_plus)) == TopologyKind::Nat);
  CHECK(topology_of(metric(MetricName::d_u)) == TopologyKind::Nat);
  // Small balls of rho_S_minus are [x, ub) with ub -> x, so they generate the
  // right half-open topology.
  CHECK(topology_of(metric(MetricName::rho_S_minus)) == TopologyKind::SorgR);
  RealSet small = ball(metric(MetricName::rho_S_minus), q(1), q(1, 100));
  CHECK(small.core().front().lo_closed);
  CHECK(small.core().front().lo == q(1));
}

TEST_CASE("neighbourhoods") {
  CHECK(nbhd(metric(MetricName::d_n), RealSet::of(Interval::closed(-1, 1)), q(1, 2)) ==
        RealSet::of(Interval::open(q(-3, 2), q(3, 2))));
  CHECK(nbhd(metric(MetricName::d_n_plus), RealSet::of(Interval::closed(-6, 6)), q(1, 4)) ==
        RealSet::of(Interval::open(ninf(), q(25, 4))));
  CHECK(nbhd(metric(MetricName::rho_u1), RealSet::point(q(0)), q(2)) == RealSet::reals());
  CHECK(nbhd(metric(MetricName::rho_S), RealSet::of(Interval::open(0, 1)), q(1, 2)) ==
        RealSet::of(Interval::open(q(0), q(3, 2))));
  RealSet tail = right_tail_set({Interval::point(q(0))}, q(1), q(0));
  RealSet nt = nbhd(metric(MetricName::d_n), tail, q(1, 4));
  CHECK(contains_point(nt, q(9, 8)));
  CHECK(contains_point(nt, q(15, 8)));
  CHECK_FALSE(contains_point(nt, q(5, 4)));
  CHECK_FALSE(contains_point(nt, q(1, 2)));
  CHECK_FALSE(contains_point(nt, q(-1, 2)));
  CHECK(nbhd(metric(MetricName::rho_u), tail, q(1)) == RealSet::reals());
  CHECK_THROWS_AS(nbhd(metric(MetricName::d_n_plus), tail, q(1)), UnsupportedOperation);
  CHECK_THROWS_AS(nbhd(metric(MetricName::d_u), tail, q(1)), UnsupportedOperation);
  CHECK_THROWS_AS(nbhd(metric(MetricName::rho_S_minus), tail, q(1)), UnsupportedOperation);
}

TEST_CASE("bounded sets") {
  CHECK_FALSE(is_bounded_set(metric(MetricName::rho_u), RealSet::of(Interval::open(q(0), pinf()))));
  CHECK(is_bounded_set(metric(MetricName::rho_u), RealSet::of(Interval::open(ninf(), q(0)))));
  CHECK(is_bounded_set(metric(MetricName::rho_u1), RealSet::reals()));
  CHECK(is_bounded_set(metric(MetricName::d_n_plus), RealSet::of(Interval::open(ninf(), q(0)))));
  CHECK_FALSE(is_bounded_set(metric(MetricName::d_n_plus), RealSet::of(Interval::open(q(0), pinf()))));
  for (auto n : {MetricName::d_n1, MetricName::d_n_plus_1, MetricName::rho_u1, MetricName::rho_S1,
                 MetricName::rho_0_1})
    CHECK(is_bounded_set(metric(n), RealSet::reals()));
  // The bounded class agrees with containment in one large ball.
  for (auto d : exact_metrics_with_conjugates()) {
    for (const auto& a : {RealSet::of(Interval::closed(-3, 3)), RealSet::of(Interval::open(ninf(), q(0))),
                          RealSet::of(Interval::open(q(0), pinf())), RealSet::reals()}) {
      bool inside = false;
      for (const auto& x : {q(-1000), q(-5), q(0), q(5), q(1000)})
        for (const auto& r : {q(1, 2), q(2), q(20), q(2000)}) inside = inside || is_subset(a, ball(d, x, r));
      CHECK_MESSAGE(inside == is_bounded_set(d, a), to_string(d) << " " << to_string(a));
    }
  }
}

TEST_CASE("uniform equivalence refuter") {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (long k = 0; k <= 40; ++k) {
    Rational p = Rational(mpz_class(1) << k);
    pairs.push_back({Rational(-p), Rational(-2 * p)});
  }
  auto v = uniform_equiv_refute(metric(MetricName::d_n_plus), metric(MetricName::d_n), q(1), pairs);
  CHECK(v.refuted);
  CHECK(v.witnesses.size() == 21);
  CHECK_FALSE(uniform_equiv_refute(metric(MetricName::d_n), metric(MetricName::d_n1), q(1), pairs).refuted);
  std::vector<std::pair<Rational, Rational>> shifted;
  for (long k = -10; k <= 10; ++k) shifted.push_back({q(k), q(4 * k + 1, 4)});
  auto w = uniform_equiv_refute(metric(MetricName::rho_S), metric(MetricName::rho_0), q(1, 2), shifted);
  CHECK_FALSE(w.refuted);
  CHECK(w.open_delta.has_value());
}

TEST_CASE("metric laws") {
  long seed = 100;
  for (auto d : exact_metrics_with_conjugates()) {
    for (const auto& r : {law_metric_axioms(d, 400, ++seed), law_ball_eval(d, 300, ++seed), law_nbhd(d, 40, ++seed)}) {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.failures == 0);
    }
  }
}

}  // TEST_SUITE
