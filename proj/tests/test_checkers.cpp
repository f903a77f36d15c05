#include "covers_laws.hpp"
#include "doctest.h"
#include "gts/checkers.hpp"
#include "support.hpp"

using namespace gts;
using namespace gts::testing;

namespace {

LineId std_line(LineVariant v) { return line(LineFamily::Standard, v); }
LineId sorg_line(LineVariant v) { return line(LineFamily::Sorgenfrey, v); }

RealSet closed_iv(long a, long b) { return RealSet::of(Interval::closed(q(a), q(b))); }

// B_n = [-(n+1), n+1].
BaseSchema growing_closed() {
  return BaseSchema::intervals({{AffineEnd{q(-1), q(-1)}, true, AffineEnd{q(1), q(1)}, true}});
}

// B_n = (-inf, n).
BaseSchema growing_below() {
  return BaseSchema::intervals({{AffineEnd{ninf()}, false, AffineEnd{q(0), q(1)}, false}});
}

}  // namespace

TEST_SUITE("checkers") {

TEST_CASE("piecewise affine maps") {
  auto f = PiecewiseAffineMap::make({q(0)}, {AffinePiece{q(-1), q(0)}, AffinePiece{q(2), q(0)}});
  CHECK(f.apply(q(-3)) == q(3));
  CHECK(f.apply(q(0)) == q(0));
  CHECK(f.apply(q(5, 2)) == q(5));
  CHECK(preimage(f, RealSet::of(Interval::open(q(1), q(4)))) ==
        unite(RealSet::of(Interval::open(q(-4), q(-1))), RealSet::of(Interval::open(q(1, 2), q(2)))));
  CHECK(image(PiecewiseAffineMap::affine(q(-1), q(1)), RealSet::of(Interval::closed_open(q(0), q(2)))) ==
        RealSet::of(Interval::open_closed(q(-1), q(1))));
  CHECK_THROWS_AS(PiecewiseAffineMap::make({q(1), q(0)}, {{}, {}, {}}), ConstructionError);
  CHECK_THROWS_AS(PiecewiseAffineMap::make({q(0)}, {{}}), ConstructionError);
  CHECK(PiecewiseAffineMap::identity().apply(q(7, 3)) == q(7, 3));
}

TEST_CASE("preimages of families commute with unions") {
  FamilyGen gen(0x5eed01);
  long checked = 0;
  for (int i = 0; i < 300; ++i) {
    SetGen& g = gen.sets();
    Rational slope = g.coin() ? q(g.pick(1, 3), g.pick(1, 2)) : -q(g.pick(1, 3), g.pick(1, 2));
    auto f = PiecewiseAffineMap::affine(slope, g.dyadic(-2, 2));
    FamilySpec fam = gen.family();
    auto pre = preimage_family(f, fam);
    if (!pre) continue;
    ++checked;
    INFO(to_string(f) << " " << to_string(fam));
    CHECK(union_of(*pre) == preimage(f, union_of(fam)));
    RealSet k = closed_iv(-3, 3);
    CHECK(ess_finite_on(*pre, preimage(f, k)).essentially_finite == ess_finite_on(fam, k).essentially_finite);
  }
  CHECK(checked >= 200);
}

TEST_CASE("properness examples") {
  CHECK(proper_check(Bornology::ub(), TopologyKind::Upper, TopologyKind::Lower).proper);
  ProperReport lb = proper_check(Bornology::lb(), TopologyKind::Upper, TopologyKind::Nat);
  CHECK_FALSE(lb.proper);
  CHECK(lb.failing_index.has_value());
  CHECK_FALSE(proper_check(Bornology::fb(), TopologyKind::SorgR, TopologyKind::Nat).proper);
  CHECK(proper_check(Bornology::nat_bounded(), TopologyKind::Nat, TopologyKind::Nat).proper);
}

TEST_CASE("open base examples") {
  CHECK(base_check(Bornology::nat_bounded(), TopologyKind::Nat));
  CHECK_FALSE(base_check(Bornology::fb(), TopologyKind::SorgR));
  CHECK(base_check(Bornology::ub(), TopologyKind::Upper));
}

TEST_CASE("properness of a base passes to its subsets") {
  // If cl(B_n) ⊆ int(B_m) then cl(A) ⊆ int(B_m) for A ⊆ B_n.
  SetGen g(0x5eed02);
  BaseSchema s = growing_closed();
  ProperReport r = proper_check(Bornology::nat_bounded(), TopologyKind::Nat, TopologyKind::Nat);
  REQUIRE(r.proper);
  for (int i = 0; i < 200; ++i) {
    long n = g.pick(0, 6);
    RealSet a = intersect(g.set(), s.at(n));
    CHECK(is_subset(a, s.at(n + 1)));
  }
}

TEST_CASE("chain examples") {
  ChainReport dn = chain_check(metric(MetricName::d_n), growing_closed(), q(1, 2), 16);
  CHECK(dn.verdict == ChainReport::Verdict::Pass);
  CHECK(dn.index_uniform);
  CHECK(verdict_string(dn) == "pass");
  CHECK(reverify(metric(MetricName::d_n), dn));

  ChainReport plus = chain_check(metric(MetricName::d_n_plus), growing_closed(), q(1, 8), 16);
  CHECK(plus.verdict == ChainReport::Verdict::FailAt);
  CHECK(plus.index == 1);
  CHECK(verdict_string(plus) == "fail_at(1)");
  CHECK_FALSE(plus.missing.is_empty());

  ChainReport below = uniform_chain_check(metric(MetricName::d_n_plus), growing_below(), 16);
  CHECK(below.verdict == ChainReport::Verdict::Pass);
  CHECK(below.delta_used == q(1, 2));

  ChainReport truncated = chain_search(metric(MetricName::d_n_plus), growing_closed(), 4);
  CHECK(truncated.verdict == ChainReport::Verdict::Truncated);
  CHECK(verdict_string(truncated) == "truncated(4)");
}

TEST_CASE("the asymmetric chain fails no later than the inverse radius") {
  for (long k = 2; k <= 12; ++k) {
    Rational delta = q(1, 1L << k);
    ChainReport r = chain_check(metric(MetricName::d_n_plus), growing_closed(), delta, 64);
    INFO("k = " << k);
    REQUIRE(r.verdict == ChainReport::Verdict::FailAt);
    CHECK(r.index <= (1L << k));
  }
}

TEST_CASE("chain certificates reverify") {
  SetGen g(0x5eed03);
  const auto& names = all_metric_names();
  for (int i = 0; i < 60; ++i) {
    QuasiMetric d = metric(names[static_cast<std::size_t>(g.pick(0, static_cast<long>(names.size()) - 1))]);
    BaseSchema s = g.coin() ? growing_closed() : growing_below();
    Rational delta = q(1, 1L << g.pick(0, 5));
    ChainReport r;
    try {
      r = chain_check(d, s, delta, 8);
    } catch (const UnsupportedOperation&) {
      continue;
    }
    INFO(to_string(d.name) << " " << to_string(delta));
    CHECK(reverify(d, r));
  }
}

TEST_CASE("metrizability verdict examples") {
  const auto& probes = probe_corpus();
  auto a = metrizable_verdict(std_line(LineVariant::lst), Bornology::nat_bounded(), metric(MetricName::d_n), probes);
  CHECK(a.consistent);
  QuasiMetric rho0 = metric(MetricName::rho_0);
  auto b = metrizable_verdict(sorg_line(LineVariant::lst), Bornology::metric_bounded(rho0), rho0, probes);
  CHECK(b.consistent);
  auto c = metrizable_verdict(std_line(LineVariant::ut), Bornology::fb(), metric(MetricName::d_n), probes);
  CHECK_FALSE(c.consistent);
  CHECK(c.failed(VerdictPart::Bornology));
  REQUIRE(c.first_failure().has_value());
  CHECK(c.parts.size() == 5);
}

TEST_CASE("every example claim agrees") {
  const auto& claims = metrizability_claims();
  CHECK(claims.size() >= 90);
  for (const auto& c : claims) {
    INFO(c.anchor << " " << to_string(c.line));
    ClaimOutcome o = check_claim(c, probe_corpus());
    CHECK(o.agrees);
  }
}

TEST_CASE("consistent verdicts imply proper bases") {
  for (const auto& c : metrizability_claims()) {
    if (!c.holds || !bornology_base(c.bornology)) continue;
    INFO(c.anchor << " " << to_string(c.line));
    CHECK(proper_check(c.bornology, topology_of(c.metric), topology_of(conjugate(c.metric))).proper);
  }
}

TEST_CASE("strict continuity examples") {
  FamilySpec shifts = FamilySpec::periodic(RealSet::of(Interval::open(q(0), q(2))), q(1));
  auto id = PiecewiseAffineMap::identity();
  auto refuted = strict_cont_refute(id, std_line(LineVariant::st), std_line(LineVariant::ut), {shifts});
  CHECK(refuted.verdict == StrictContReport::Verdict::Refuted);
  REQUIRE(refuted.witness_preimage.has_value());
  CHECK_FALSE(cov_member(std_line(LineVariant::st), *refuted.witness_preimage));

  auto battery = sm_refuter_battery(std_line(LineVariant::lst), closed_iv(-2, 3));
  battery.push_back(shifts);
  CHECK(strict_cont_refute(id, std_line(LineVariant::ut), std_line(LineVariant::lst), battery).verdict ==
        StrictContReport::Verdict::Unrefuted);
  CHECK(strict_cont_refute(PiecewiseAffineMap::affine(q(1), q(1)), std_line(LineVariant::lst),
                           std_line(LineVariant::lst), battery)
            .verdict == StrictContReport::Verdict::Unrefuted);
}

TEST_CASE("strict continuity witnesses are sound") {
  SetGen g(0x5eed04);
  const auto& lines = all_lines();
  for (int i = 0; i < 40; ++i) {
    LineId src = lines[static_cast<std::size_t>(g.pick(0, 25))];
    LineId dst = lines[static_cast<std::size_t>(g.pick(0, 25))];
    auto f = PiecewiseAffineMap::affine(q(g.pick(1, 3)), g.dyadic(-2, 2));
    auto r = strict_cont_refute(f, src, dst, sm_refuter_battery(dst, closed_iv(-2, 2)));
    if (r.verdict != StrictContReport::Verdict::Refuted) continue;
    INFO(to_string(src) << " <- " << to_string(dst));
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_preimage.has_value());
    CHECK(cov_member(dst, *r.witness));
    CHECK_FALSE(cov_member(src, *r.witness_preimage));
  }
}

TEST_CASE("axiom probes") {
  AxiomReport om = axiom_probe(std_line(LineVariant::om), default_axiom_samples(std_line(LineVariant::om)));
  CHECK(om.all_pass());
  for (const auto& a : om.axioms) CHECK(a.checked > 0);
  LineId slst = sorg_line(LineVariant::lst);
  CHECK(axiom_probe(slst, default_axiom_samples(slst)).all_pass());
  AxiomReport empty = axiom_probe(slst, AxiomSamples{});
  CHECK(empty.all_pass());
}

TEST_CASE("initial bornology") {
  std::vector<PiecewiseAffineMap> maps{PiecewiseAffineMap::identity(), PiecewiseAffineMap::affine(q(-1), q(0))};
  std::vector<Bornology> borns{Bornology::ub(), Bornology::ub()};
  CHECK(initial_bornology_member(maps, borns, closed_iv(0, 1)));
  CHECK_FALSE(initial_bornology_member(maps, borns, RealSet::of(Interval::closed_open(q(0), pinf()))));
  CHECK(initial_bornology_member({}, {}, RealSet::reals()));
  CHECK_THROWS_AS(initial_bornology_member(maps, {Bornology::ub()}, closed_iv(0, 1)), std::invalid_argument);
}

}  // TEST_SUITE
