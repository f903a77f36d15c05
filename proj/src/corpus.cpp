#include <algorithm>
#include <initializer_list>

#include "gts/cli.hpp"

namespace gts {

namespace {

using V = LineVariant;
using Rel = BornologyIdentity::Relation;

LineId std_line(V v) { return line(LineFamily::Standard, v); }
LineId sorg_line(V v) { return line(LineFamily::Sorgenfrey, v); }

void add(std::vector<BornologyIdentity>& out, std::initializer_list<LineId> lines,
         std::initializer_list<LineBornKind> kinds, Rel rel, const Bornology& ref, const std::string& anchor) {
  for (LineId id : lines)
    for (LineBornKind k : kinds) {
      // A reference to the line's own bornology is written with the line left open.
      Bornology r = ref;
      if (r.kind == Bornology::Kind::OfLine) r.line = id;
      out.push_back(BornologyIdentity{id, k, rel, r, anchor});
    }
}

Bornology own(LineBornKind k) { return Bornology::of_line(LineId{}, k); }
Bornology bounded_by(MetricName m) { return Bornology::metric_bounded(metric(m)); }

std::vector<BornologyIdentity> build_identities() {
  using K = LineBornKind;
  std::vector<BornologyIdentity> t;
  LineId uu = upper_line(V::uu), ul = upper_line(V::ul), uf = upper_line(V::uf);
  add(t, {uu}, {K::ACB, K::Sm}, Rel::Equal, Bornology::ub(), "ACB(uu) = Sm(uu) = UB");
  add(t, {ul}, {K::ACB, K::Sm}, Rel::Equal, Bornology::all(), "ACB(ul) = Sm(ul) = all subsets");
  add(t, {uf}, {K::ACB, K::CB}, Rel::Equal, Bornology::ub(), "ACB(uf) = CB(uf) = UB");
  add(t, {uf}, {K::Sm}, Rel::Subset, Bornology::ub(), "Sm(uf) consists of sets bounded above with largest elements");
  add(t, {uu, ul, uf}, {K::CB}, Rel::Equal, bounded_by(MetricName::rho_u), "upper lines: CB = B(rho_u)");

  LineId ut = std_line(V::ut);
  add(t, {ut}, {K::Sm}, Rel::Equal, Bornology::fb(), "ut: FB = Sm");
  add(t, {ut}, {K::Sm}, Rel::Subset, own(K::CB), "ut: Sm within CB");
  add(t, {ut}, {K::CB}, Rel::Equal, own(K::ACB), "ut: CB = ACB");
  add(t, {ut}, {K::ACB}, Rel::Equal, bounded_by(MetricName::d_n), "ut: ACB = B(d_n)");
  add(t, {std_line(V::lst), std_line(V::lom)}, {K::Sm, K::CB, K::ACB}, Rel::Equal, bounded_by(MetricName::d_n),
      "lst, lom: Sm = CB = ACB = B(d_n)");
  std::initializer_list<LineId> l_plus{std_line(V::l_plus_om), std_line(V::l_plus_st)};
  add(t, l_plus, {K::CB}, Rel::Equal, Bornology::nat_bounded(), "l+om, l+st: CB = CB_nat");
  add(t, l_plus, {K::CB}, Rel::Subset, own(K::Sm), "l+om, l+st: CB within Sm");
  add(t, l_plus, {K::Sm, K::ACB}, Rel::Equal, bounded_by(MetricName::d_n_plus), "l+om, l+st: Sm = ACB = B(d+_n)");
  std::initializer_list<LineId> small{std_line(V::om), std_line(V::slom), std_line(V::rom), std_line(V::st)};
  add(t, small, {K::CB}, Rel::Subset, own(K::Sm), "om, slom, rom, st: CB within Sm");
  add(t, small, {K::Sm, K::ACB}, Rel::Equal, Bornology::all(), "om, slom, rom, st: Sm = ACB = all subsets");

  add(t, {sorg_line(V::lst), sorg_line(V::lom)}, {K::Sm, K::ACB}, Rel::Equal, bounded_by(MetricName::rho_0),
      "Sorgenfrey lst, lom: Sm = ACB = B(rho_0)");
  add(t, {sorg_line(V::l_plus_st), sorg_line(V::l_plus_om)}, {K::Sm, K::ACB}, Rel::Equal,
      bounded_by(MetricName::rho_S), "Sorgenfrey l+st, l+om: Sm = ACB = B(rho_S)");
  add(t, {sorg_line(V::l_minus_st), sorg_line(V::l_minus_om)}, {K::Sm, K::ACB}, Rel::Equal,
      bounded_by(MetricName::rho_L), "Sorgenfrey l-st, l-om: Sm = ACB = B(rho_L)");
  add(t, {sorg_line(V::om), sorg_line(V::slom), sorg_line(V::st), sorg_line(V::sl_plus_om)}, {K::Sm, K::ACB},
      Rel::Equal, bounded_by(MetricName::rho_S1), "Sorgenfrey om, slom, st, sl+om: Sm = ACB = B(rho_S1)");
  for (LineId id : all_lines())
    if (id.family == LineFamily::Sorgenfrey)
      add(t, {id}, {K::CB}, Rel::Equal, Bornology::fb(), "relatively compact Sorgenfrey sets are countable: CB = FB");
  return t;
}

std::string identity_name(const BornologyIdentity& i) {
  return std::string(to_string(i.kind)) + "(" + to_string(i.line) + ")" + (i.relation == Rel::Equal ? " = " : " <= ") +
         to_string(i.reference);
}

ReportEntry entry(std::string section, std::string name, bool ok, std::string verdict) {
  return ReportEntry{std::move(section), std::move(name), ok, std::move(verdict), {}};
}

// ---- sections ----

LineId expected_pt(LineId id) {
  switch (id.variant) {
    case V::om:
    case V::slom:
    case V::rom:
    case V::sl_plus_om:
    case V::sl_minus_om: return {id.family, V::st};
    case V::lom: return {id.family, V::lst};
    case V::l_plus_om: return {id.family, V::l_plus_st};
    case V::l_minus_om: return {id.family, V::l_minus_st};
    default: return id;
  }
}

void pt_section(Report& r, const LineCatalog& cat) {
  for (LineId id : all_lines()) {
    LineId got = cat.pt(id);
    r.entries.push_back(entry("pt", to_string(id), got == expected_pt(id), to_string(got)));
  }
}

// Sets on which a per-line predicate fails, as a verdict.
template <class P>
void per_line(Report& r, const std::string& section, const std::vector<RealSet>& probes, P&& holds) {
  for (LineId id : all_lines()) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& a : probes)
      if (!holds(id, a) && bad++ == 0) first = to_string(a);
    ReportEntry e = entry(section, to_string(id), bad == 0,
                          bad == 0 ? "holds on " + std::to_string(probes.size()) + " probes"
                                   : std::to_string(bad) + " violations");
    if (bad) e.fields.emplace_back("first_violation", first);
    r.entries.push_back(std::move(e));
  }
}

void nesting_section(Report& r, const LineCatalog& cat, const std::vector<RealSet>& probes) {
  per_line(r, "nesting", probes, [&](LineId id, const RealSet& a) {
    return !(cat.sm(id, a) || cat.cb(id, a)) || cat.acb(id, a);
  });
}

void pt_invariance_section(Report& r, const LineCatalog& cat, const std::vector<RealSet>& probes) {
  per_line(r, "pt_invariance", probes, [&](LineId id, const RealSet& a) {
    if (pt_flagged(id)) return true;
    LineId p = cat.pt(id);
    return cat.sm(id, a) == cat.sm(p, a) && cat.cb(id, a) == cat.cb(p, a);
  });
}

void refuter_section(Report& r, const LineCatalog& cat, const std::vector<RealSet>& probes) {
  per_line(r, "refuter", probes, [&](LineId id, const RealSet& a) { return cat.sm(id, a) == !sm_refute(id, a); });
}

void ef_section(Report& r, const LineCatalog& cat, const std::vector<RealSet>& probes) {
  LineId lst = std_line(V::lst);
  std::size_t bad = 0;
  for (const auto& a : probes)
    if (cat.sm(lst, a) != bornology_member(Bornology::nat_bounded(), a)) ++bad;
  r.entries.push_back(entry("ef", "Sm(EF(Nat, CB_nat)) = CB_nat", bad == 0,
                            bad == 0 ? "agrees on " + std::to_string(probes.size()) + " probes"
                                     : std::to_string(bad) + " disagreements"));
}

void local_smallness_section(Report& r, const LineCatalog& cat) {
  for (LineId id : all_lines()) {
    bool expect_cover = !(id.variant == V::ut || id.variant == V::uf);
    auto cover = small_open_cover(id);
    bool ok = cover.has_value() == expect_cover;
    if (cover) {
      ok = ok && union_of(*cover) == RealSet::reals();
      for (const auto& m : representative_members(*cover)) ok = ok && op_member(id, m) && cat.sm(id, m);
    }
    r.entries.push_back(entry("local_smallness", to_string(id), ok, cover ? "small open cover" : "no small open cover"));
  }
}

void chain_section(Report& r, const Caps& caps) {
  BaseSchema grow = BaseSchema::intervals({{AffineEnd{Rational(-1), Rational(-1)}, true,
                                            AffineEnd{Rational(1), Rational(1)}, true}});
  BaseSchema below = BaseSchema::intervals({{AffineEnd{ExtRat::neg_inf()}, false, AffineEnd{Rational(0), Rational(1)},
                                             false}});
  auto record = [&](std::string name, const ChainReport& c, bool ok) {
    ReportEntry e = entry("chain", std::move(name), ok, verdict_string(c));
    e.fields.emplace_back("delta", to_string(c.delta_used));
    e.fields.emplace_back("index_uniform", c.index_uniform ? "true" : "false");
    r.entries.push_back(std::move(e));
  };
  ChainReport dn = chain_check(metric(MetricName::d_n), grow, Rational(1, 2), caps.chain);
  record("d_n on [-(n+1), n+1], delta 1/2", dn,
         dn.verdict == ChainReport::Verdict::Pass && dn.index_uniform && reverify(metric(MetricName::d_n), dn));
  ChainReport plus = chain_check(metric(MetricName::d_n_plus), grow, Rational(1, 8), caps.chain);
  bool fails_in_time = plus.verdict == ChainReport::Verdict::FailAt && plus.index <= 8;
  // Below the failing index the cap decides: a short run may only truncate.
  bool truncated = plus.verdict == ChainReport::Verdict::Truncated && caps.chain < 8;
  record("d+_n on [-(n+1), n+1], delta 1/8", plus, fails_in_time || truncated);
  ChainReport uni = uniform_chain_check(metric(MetricName::d_n_plus), below, caps.chain);
  record("d+_n on (-inf, n), uniform", uni, uni.verdict == ChainReport::Verdict::Pass && uni.delta_used == Rational(1, 2));
}

void metrizability_section(Report& r, const Caps& caps, const std::vector<RealSet>& probes) {
  for (const auto& c : metrizability_claims()) {
    ClaimOutcome o = check_claim(c, probes, caps.chain);
    std::string name = std::string(c.kind == MetrizabilityClaim::Kind::Metrizable ? "metrizable " : "uniform ") +
                       to_string(c.line) + " " + to_string(c.bornology) + " " + to_string(c.metric);
    ReportEntry e = entry("metrizability", name, o.agrees, o.report.consistent ? "CONSISTENT" : "INCONSISTENT");
    e.fields.emplace_back("anchor", c.anchor);
    e.fields.emplace_back("expected", c.holds ? "CONSISTENT" : "INCONSISTENT");
    if (auto f = o.report.first_failure()) e.fields.emplace_back("failing_part", std::string(to_string(*f)));
    if (c.blamed) e.fields.emplace_back("blamed", std::string(to_string(*c.blamed)));
    r.entries.push_back(std::move(e));
  }
}

void axiom_section(Report& r, const Caps& caps) {
  for (LineId id : all_lines()) {
    AxiomReport a = axiom_probe(id, default_axiom_samples(id), std::min<long>(caps.depth, 3));
    long checked = 0;
    for (const auto& x : a.axioms) checked += x.checked;
    ReportEntry e = entry("axioms", to_string(id), a.all_pass(),
                          a.all_pass() ? std::to_string(checked) + " instances" : "violation");
    for (std::size_t i = 0; i < a.axioms.size(); ++i)
      if (a.axioms[i].violation) e.fields.emplace_back("axiom_" + std::to_string(i + 1), *a.axioms[i].violation);
    r.entries.push_back(std::move(e));
  }
}

}  // namespace

LineCatalog LineCatalog::standard() {
  return LineCatalog{
      [](LineId id, const RealSet& a) { return sm_member(id, a); },
      [](LineId id, const RealSet& a) { return cb_member(id, a); },
      [](LineId id, const RealSet& a) { return acb_member(id, a); },
      [](LineId id) { return pt_of(id); },
  };
}

bool LineCatalog::member(LineId id, LineBornKind k, const RealSet& a) const {
  switch (k) {
    case LineBornKind::Sm: return sm(id, a);
    case LineBornKind::CB: return cb(id, a);
    case LineBornKind::ACB: return acb(id, a);
  }
  return false;
}

const std::vector<BornologyIdentity>& bornology_identities() {
  static const std::vector<BornologyIdentity> table = build_identities();
  return table;
}

std::vector<ReportEntry> identity_entries(const LineCatalog& cat, const std::vector<RealSet>& probes) {
  std::vector<ReportEntry> out;
  for (const auto& i : bornology_identities()) {
    auto in_ref = [&](const RealSet& a) {
      if (i.reference.kind == Bornology::Kind::OfLine) return cat.member(i.reference.line, i.reference.which, a);
      return bornology_member(i.reference, a);
    };
    std::size_t bad = 0;
    std::string first;
    for (const auto& a : probes) {
      bool lhs = cat.member(i.line, i.kind, a), rhs = in_ref(a);
      bool ok = i.relation == Rel::Equal ? lhs == rhs : (!lhs || rhs);
      if (!ok && bad++ == 0) first = to_string(a);
    }
    ReportEntry e = entry("identity", identity_name(i), bad == 0,
                          bad == 0 ? "agrees on " + std::to_string(probes.size()) + " probes"
                                   : std::to_string(bad) + " disagreements");
    e.fields.emplace_back("anchor", i.anchor);
    if (bad) e.fields.emplace_back("first_disagreement", first);
    out.push_back(std::move(e));
  }
  return out;
}

Report corpus_verify(const Caps& caps, const LineCatalog& cat) {
  Report r;
  r.caps = caps;
  const auto& probes = probe_corpus();
  for (auto& e : identity_entries(cat, probes)) r.entries.push_back(std::move(e));
  pt_section(r, cat);
  nesting_section(r, cat, probes);
  pt_invariance_section(r, cat, probes);
  refuter_section(r, cat, probes);
  ef_section(r, cat, probes);
  local_smallness_section(r, cat);
  chain_section(r, caps);
  metrizability_section(r, caps, probes);
  axiom_section(r, caps);
  return r;
}

}  // namespace gts
