#include "gts/checkers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gts {

namespace {

const ExtRat kNegInf = ExtRat::neg_inf();
const ExtRat kPosInf = ExtRat::pos_inf();

Rational dyadic(long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r /= 2;
  return r;
}

long ceil_inverse(const Rational& delta) {
  Rational c = rat_ceil(Rational(1 / delta));
  return c.get_num().get_si();
}

}  // namespace

// ---- piecewise affine maps ----

PiecewiseAffineMap PiecewiseAffineMap::make(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces) {
  if (pieces.size() != breakpoints.size() + 1)
    throw ConstructionError("a piecewise map needs one more piece than breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i])) throw ConstructionError("breakpoints must ascend strictly");
  return PiecewiseAffineMap{std::move(breakpoints), std::move(pieces)};
}

PiecewiseAffineMap PiecewiseAffineMap::affine(Rational slope, Rational intercept) {
  return PiecewiseAffineMap{{}, {AffinePiece{std::move(slope), std::move(intercept)}}};
}

Rational PiecewiseAffineMap::apply(const Rational& x) const {
  std::size_t i = std::upper_bound(breakpoints.begin(), breakpoints.end(), x) - breakpoints.begin();
  return Rational(pieces[i].slope * x + pieces[i].intercept);
}

RealSet PiecewiseAffineMap::piece_domain(std::size_t i) const {
  ExtRat lo = i == 0 ? kNegInf : ExtRat(breakpoints[i - 1]);
  ExtRat hi = i == breakpoints.size() ? kPosInf : ExtRat(breakpoints[i]);
  return RealSet::of(Interval::make(lo, lo.is_finite(), hi, false));
}

std::string to_string(const PiecewiseAffineMap& f) {
  auto piece = [](const AffinePiece& p) { return to_string(p.slope) + "*x + " + to_string(p.intercept); };
  if (f.breakpoints.empty()) return "affine(" + piece(f.pieces[0]) + ")";
  std::string s = "piecewise(" + piece(f.pieces[0]);
  for (std::size_t i = 0; i < f.breakpoints.size(); ++i)
    s += " | from " + to_string(f.breakpoints[i]) + ": " + piece(f.pieces[i + 1]);
  return s + ")";
}

RealSet preimage(const PiecewiseAffineMap& f, const RealSet& u) {
  RealSet out;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const AffinePiece& p = f.pieces[i];
    RealSet part = p.slope == 0
                       ? (contains_point(u, p.intercept) ? f.piece_domain(i) : RealSet())
                       : intersect(f.piece_domain(i), affine_image(u, Rational(1 / p.slope), Rational(-p.intercept / p.slope)));
    out = unite(out, part);
  }
  return out;
}

RealSet image(const PiecewiseAffineMap& f, const RealSet& a) {
  RealSet out;
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    RealSet part = intersect(a, f.piece_domain(i));
    if (part.is_empty()) continue;
    const AffinePiece& p = f.pieces[i];
    out = unite(out, p.slope == 0 ? RealSet::point(p.intercept) : affine_image(part, p.slope, p.intercept));
  }
  return out;
}

namespace {

IndexRange negated(const IndexRange& r) {
  switch (r.kind) {
    case IndexRange::Kind::All: return r;
    case IndexRange::Kind::From: return IndexRange::upto(-r.first);
    case IndexRange::Kind::Upto: return IndexRange::from(-r.last);
    case IndexRange::Kind::Finite: return IndexRange::between(-r.last, -r.first);
  }
  return r;
}

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

// Preimage under x -> a*x + b, a != 0.
std::optional<FamilySpec> affine_preimage(const Rational& a, const Rational& b, const FamilySpec& fam) {
  const Rational inv(1 / a), off(-b / a);
  auto pre = [&](const RealSet& s) { return affine_image(s, inv, off); };
  auto pre_point = [&](const Rational& y) { return Rational((y - b) / a); };
  using Out = std::optional<FamilySpec>;
  return std::visit(
      Overload{
          [&](const FiniteFamily& x) -> Out {
            std::vector<RealSet> ms;
            for (const auto& m : x.members) ms.push_back(pre(m));
            return FamilySpec::finite(std::move(ms));
          },
          [&](const PeriodicFamily& x) -> Out {
            Rational period(x.period / abs(a));
            return FamilySpec::periodic(pre(x.seed), period, a > 0 ? x.range : negated(x.range));
          },
          [&](const SplitFamily& x) -> Out {
            auto l = affine_preimage(a, b, *x.left), r = affine_preimage(a, b, *x.right);
            if (!l || !r) return std::nullopt;
            Rational cut = pre_point(x.cut);
            if (a > 0) return FamilySpec::split(cut, *l, *r);
            return FamilySpec::union_of_families(
                {FamilySpec::restricted(*l, RealSet::of(Interval::open(cut, kPosInf))),
                 FamilySpec::restricted(*r, RealSet::of(Interval::make(kNegInf, false, cut, true)))});
          },
          [&](const RestrictedFamily& x) -> Out {
            auto base = affine_preimage(a, b, *x.base);
            if (!base) return std::nullopt;
            return FamilySpec::restricted(*base, pre(x.window));
          },
          [&](const LadderFamily& x) -> Out {
            bool below = x.direction == LadderFamily::Direction::Below;
            bool flips = a < 0;
            ExtRat limit = x.limit;
            Rational scale(x.scale / abs(a));
            if (limit.is_finite()) {
              limit = ExtRat(pre_point(limit.value()));
            } else {
              // (-inf, s*k) maps onto a ladder only without a translation.
              if (b != 0) return std::nullopt;
              limit = flips ? -limit : limit;
            }
            return below != flips ? FamilySpec::ladder_below(limit, scale, x.closed_end)
                                  : FamilySpec::ladder_above(limit, scale, x.closed_end);
          },
          [&](const UnionFamily& x) -> Out {
            std::vector<FamilySpec> parts;
            for (const auto& p : x.parts) {
              auto q = affine_preimage(a, b, p);
              if (!q) return std::nullopt;
              parts.push_back(std::move(*q));
            }
            return FamilySpec::union_of_families(std::move(parts));
          },
      },
      fam.node);
}

}  // namespace

std::optional<FamilySpec> preimage_family(const PiecewiseAffineMap& f, const FamilySpec& fam) {
  if (auto ms = explicit_members(fam)) {
    std::vector<RealSet> out;
    for (const auto& m : *ms) out.push_back(preimage(f, m));
    return FamilySpec::finite(std::move(out));
  }
  if (f.pieces.size() != 1 || f.pieces[0].slope == 0) return std::nullopt;
  return affine_preimage(f.pieces[0].slope, f.pieces[0].intercept, fam);
}

// ---- properness and bases ----

namespace {

// Members of a bornology without a base contain no interval.
bool intervals_free(const Bornology& b) { return class_of(b) == BornClass::DiscreteAbove; }

}  // namespace

ProperReport proper_check(const Bornology& b, TopologyKind t1, TopologyKind t2, long n_cap) {
  ProperReport r;
  auto base = bornology_base(b);
  if (!base) {
    if (intervals_free(b) && t1 != TopologyKind::Discrete) {
      r.witness = RealSet::point(Rational(0));
      r.detail = "members contain no interval, so every interior is empty; cl {0} is non-empty";
      return r;
    }
    r.detail = "no countable base";
    return r;
  }
  // Interiors grow with m, so the largest allowed base element decides.
  const long top = base->start + n_cap + kProperMargin;
  const RealSet widest = interior(base->at(top), t1);
  for (long n = base->start; n <= base->start + n_cap; ++n) {
    RealSet cl = closure(base->at(n), t2);
    r.checked_upto = n;
    if (!is_subset(cl, widest)) {
      r.failing_index = n;
      r.witness = base->at(n);
      r.detail = "cl(B_" + std::to_string(n) + ") = " + to_string(cl) + " lies in no interior of B_m, m <= " +
                 std::to_string(top);
      return r;
    }
  }
  r.proper = true;
  r.detail = "checked B_n for n <= " + std::to_string(base->start + n_cap);
  return r;
}

bool base_check(const Bornology& b, TopologyKind t, long n_cap) {
  auto base = bornology_base(b);
  if (!base) return t == TopologyKind::Discrete;
  // B_n sits in an open member iff it sits in the interior of some later B_m;
  // interiors grow with m.
  const RealSet widest = interior(base->at(base->start + n_cap + kProperMargin), t);
  for (long n = base->start; n <= base->start + n_cap; ++n)
    if (!is_subset(base->at(n), widest)) return false;
  return true;
}

// ---- chain conditions ----

std::string verdict_string(const ChainReport& r) {
  switch (r.verdict) {
    case ChainReport::Verdict::Pass: return "pass";
    case ChainReport::Verdict::FailAt: return "fail_at(" + std::to_string(r.index) + ")";
    case ChainReport::Verdict::Truncated: return "truncated(" + std::to_string(r.index) + ")";
  }
  return "?";
}

namespace {

bool constant_schema(const BaseSchema& s) {
  if (s.kind != BaseSchema::Kind::Intervals) return false;
  return std::all_of(s.parts.begin(), s.parts.end(), [](const SchemaInterval& p) {
    return (p.lo.beta == 0 || !p.lo.alpha.is_finite()) && (p.hi.beta == 0 || !p.hi.alpha.is_finite());
  });
}

// With a translation-invariant metric and one affine interval, the inclusion
// at n is a translate of the inclusion at every other n.
bool index_uniform(const QuasiMetric& d, const BaseSchema& s) {
  if (constant_schema(s)) return true;
  return translation_invariant(d) && s.kind == BaseSchema::Kind::Intervals && s.parts.size() == 1;
}

RealSet checked_nbhd(const QuasiMetric& d, const RealSet& a, const Rational& delta, long n) {
  try {
    return nbhd(d, a, delta);
  } catch (const UnsupportedOperation& e) {
    throw UnsupportedOperation("chain at n = " + std::to_string(n) + " with " + to_string(d) + ": " + e.what());
  }
}

void finish_pass(ChainReport& r, const QuasiMetric& d, const BaseSchema& s, long n_cap) {
  r.index_uniform = index_uniform(d, s);
  if (r.index_uniform) {
    r.note = "inclusion is index-uniform: holds for every n";
  } else if (n_cap < ceil_inverse(r.delta_used)) {
    r.verdict = ChainReport::Verdict::Truncated;
    r.index = n_cap;
    r.note = "passed up to the cap, which is below ceil(1/delta)";
  } else {
    r.note = "passed for n <= " + std::to_string(r.checked_upto);
  }
}

}  // namespace

ChainReport chain_check(const QuasiMetric& d, const BaseSchema& s, const Rational& delta, long n_cap) {
  ChainReport r;
  r.delta_used = delta;
  for (long n = s.start; n <= s.start + n_cap; ++n) {
    RealSet bn = s.at(n), next = s.at(n + 1);
    RealSet nb = checked_nbhd(d, bn, delta, n);
    r.checked_upto = n;
    if (!is_subset(nb, next)) {
      r.verdict = ChainReport::Verdict::FailAt;
      r.index = n;
      r.missing = difference(nb, next);
      r.note = "[B_" + std::to_string(n) + "]^" + to_string(delta) + " leaves " + to_string(r.missing);
      return r;
    }
    r.certificates.push_back({n, delta, std::move(bn), std::move(nb), std::move(next)});
  }
  finish_pass(r, d, s, n_cap);
  return r;
}

ChainReport chain_search(const QuasiMetric& d, const BaseSchema& s, long n_cap) {
  constexpr long kMaxExponent = 20;
  ChainReport r;
  std::optional<Rational> smallest;
  for (long n = s.start; n <= s.start + n_cap; ++n) {
    RealSet bn = s.at(n), next = s.at(n + 1);
    r.checked_upto = n;
    bool found = false;
    RealSet nb;
    for (long k = 0; k <= kMaxExponent && !found; ++k) {
      Rational delta = dyadic(k);
      nb = checked_nbhd(d, bn, delta, n);
      if (is_subset(nb, next)) {
        found = true;
        if (!smallest || delta < *smallest) smallest = delta;
        r.certificates.push_back({n, delta, bn, nb, next});
      }
    }
    if (!found) {
      r.verdict = ChainReport::Verdict::FailAt;
      r.index = n;
      r.delta_used = dyadic(kMaxExponent);
      r.missing = difference(nb, next);
      r.note = "no delta 2^-k (k <= 20) works at n = " + std::to_string(n);
      return r;
    }
  }
  r.delta_used = smallest.value_or(Rational(1));
  finish_pass(r, d, s, n_cap);
  return r;
}

ChainReport uniform_chain_check(const QuasiMetric& d, const BaseSchema& s, long n_cap) {
  constexpr long kMaxExponent = 12;
  ChainReport last;
  for (long k = 1; k <= kMaxExponent; ++k) {
    ChainReport r = chain_check(d, s, dyadic(k), n_cap);
    if (r.verdict != ChainReport::Verdict::FailAt) return r;
    last = std::move(r);
  }
  last.note = "no single delta 2^-k (1 <= k <= 12) works; at the smallest, " + last.note;
  return last;
}

bool reverify(const QuasiMetric& d, const ChainReport& r) {
  const Interval window = Interval::closed(Rational(-8), Rational(8));
  const Rational step(1, 16);
  return std::all_of(r.certificates.begin(), r.certificates.end(), [&](const ChainCertificate& c) {
    if (nbhd(d, c.base, c.delta) != c.neighborhood || !is_subset(c.neighborhood, c.next)) return false;
    auto pts = sample_points(c.neighborhood, window, step);
    return std::all_of(pts.begin(), pts.end(), [&](const Rational& x) { return contains_point(c.next, x); });
  });
}

// ---- metrizability verdicts ----

std::string_view to_string(VerdictPart p) {
  switch (p) {
    case VerdictPart::Topology: return "topology";
    case VerdictPart::Bornology: return "bornology";
    case VerdictPart::Chain: return "chain";
    case VerdictPart::Properness: return "properness";
    case VerdictPart::Base: return "base";
  }
  return "?";
}

std::optional<VerdictPart> MetrizabilityReport::first_failure() const {
  for (const auto& p : parts)
    if (!p.ok) return p.part;
  return std::nullopt;
}

bool MetrizabilityReport::failed(VerdictPart p) const {
  return std::any_of(parts.begin(), parts.end(), [&](const PartResult& r) { return r.part == p && !r.ok; });
}

namespace {

constexpr long kBoundedBaseChecks = 16;

PartResult topology_part(LineId id, const QuasiMetric& d) {
  TopologyKind mine = line_topology(id), theirs = topology_of(d);
  std::string detail = "tau(d) = " + std::string(to_string(theirs)) + ", line topology = " + std::string(to_string(mine));
  return {VerdictPart::Topology, mine == theirs, detail};
}

PartResult bornology_part(const Bornology& b, const QuasiMetric& d, const std::vector<RealSet>& probes) {
  for (const auto& a : probes)
    if (bornology_member(b, a) != is_bounded_set(d, a))
      return {VerdictPart::Bornology, false,
              to_string(a) + (bornology_member(b, a) ? " is in B but not d-bounded" : " is d-bounded but not in B")};
  if (auto base = bornology_base(b)) {
    for (long n = base->start; n <= base->start + kBoundedBaseChecks; ++n)
      if (!is_bounded_set(d, base->at(n)))
        return {VerdictPart::Bornology, false, "B_" + std::to_string(n) + " is not d-bounded"};
  }
  for (long x = -4; x <= 4; ++x)
    for (const auto& r : {Rational(1, 2), Rational(1), Rational(4)}) {
      RealSet bl = ball(d, Rational(x), r);
      if (!bornology_member(b, bl)) return {VerdictPart::Bornology, false, "ball " + to_string(bl) + " is not in B"};
    }
  return {VerdictPart::Bornology, true, "probes, base elements and balls agree"};
}

PartResult chain_part(const Bornology& b, const QuasiMetric& d, long n_cap, bool uniform) {
  auto base = bornology_base(b);
  if (!base) return {VerdictPart::Chain, false, "no countable base"};
  ChainReport r = uniform ? uniform_chain_check(d, *base, n_cap) : chain_search(d, *base, n_cap);
  std::string detail = verdict_string(r) + ", delta " + to_string(r.delta_used) + ": " + r.note;
  return {VerdictPart::Chain, r.verdict != ChainReport::Verdict::FailAt, detail};
}

PartResult proper_part(const Bornology& b, const QuasiMetric& d) {
  ProperReport r = proper_check(b, topology_of(d), topology_of(conjugate(d)));
  return {VerdictPart::Properness, r.proper, r.detail};
}

PartResult base_part(LineId id, const Bornology& b, long n_cap) {
  bool ok = base_check(b, line_topology(id), n_cap);
  return {VerdictPart::Base, ok, ok ? "open members form a base" : "open members do not form a base"};
}

// An unsupported metric operation fails the part instead of the run.
template <class F>
PartResult guarded(VerdictPart p, F&& f) {
  try {
    return f();
  } catch (const UnsupportedOperation& e) {
    return {p, false, std::string("unsupported: ") + e.what()};
  }
}

MetrizabilityReport assemble(std::vector<PartResult> parts) {
  MetrizabilityReport r;
  r.parts = std::move(parts);
  r.consistent = !r.first_failure().has_value();
  return r;
}

}  // namespace

MetrizabilityReport metrizable_verdict(LineId id, const Bornology& b, const QuasiMetric& d,
                                       const std::vector<RealSet>& probes, long n_cap) {
  return assemble({
      topology_part(id, d),
      guarded(VerdictPart::Bornology, [&] { return bornology_part(b, d, probes); }),
      guarded(VerdictPart::Chain, [&] { return chain_part(b, d, n_cap, false); }),
      proper_part(b, d),
      base_part(id, b, n_cap),
  });
}

MetrizabilityReport uniform_verdict(LineId id, const Bornology& b, const QuasiMetric& d, long n_cap) {
  return assemble({
      topology_part(id, d),
      guarded(VerdictPart::Chain, [&] { return chain_part(b, d, n_cap, true); }),
      proper_part(b, d),
      base_part(id, b, n_cap),
  });
}

namespace {

using K = MetrizabilityClaim::Kind;

LineId st(LineVariant v) { return line(LineFamily::Standard, v); }
LineId sg(LineVariant v) { return line(LineFamily::Sorgenfrey, v); }
LineId up(LineVariant v) { return upper_line(v); }
Bornology sm(LineId id) { return Bornology::of_line(id, LineBornKind::Sm); }
Bornology cb(LineId id) { return Bornology::of_line(id, LineBornKind::CB); }
Bornology acb(LineId id) { return Bornology::of_line(id, LineBornKind::ACB); }
QuasiMetric m(MetricName n) { return metric(n); }

MetrizabilityClaim yes(K kind, LineId id, Bornology b, MetricName d, std::string anchor) {
  return {kind, id, std::move(b), m(d), true, std::nullopt, std::move(anchor)};
}

MetrizabilityClaim no(K kind, LineId id, Bornology b, MetricName d, VerdictPart blamed, std::string anchor) {
  return {kind, id, std::move(b), m(d), false, blamed, std::move(anchor)};
}

std::vector<MetrizabilityClaim> build_claims() {
  using V = LineVariant;
  using M = MetricName;
  std::vector<MetrizabilityClaim> c;
  // Upper-topology lines.
  for (auto b : {acb(up(V::uu)), sm(up(V::uu))})
    c.push_back(yes(K::Metrizable, up(V::uu), b, M::rho_u, "ACB(uu) = Sm(uu) = UB, quasi-pseudometrizable by rho_u"));
  for (auto b : {acb(up(V::ul)), sm(up(V::ul))})
    c.push_back(yes(K::Metrizable, up(V::ul), b, M::rho_u1, "ACB(ul) = Sm(ul) = all sets, by rho_u1"));
  c.push_back(no(K::Metrizable, up(V::uf), Bornology::lb(), M::rho_u, VerdictPart::Properness,
                 "uf is not LB-quasi-pseudometrizable: int_u A is empty for A in LB"));
  c.push_back(no(K::Metrizable, up(V::uf), sm(up(V::uf)), M::rho_u, VerdictPart::Properness,
                 "uf is not Sm-quasi-pseudometrizable: small sets have empty upper interior"));
  c.push_back(yes(K::Metrizable, up(V::uf), acb(up(V::uf)), M::rho_u, "ACB(uf) = CB(uf) = UB, by rho_u"));
  for (auto v : {V::uu, V::ul, V::uf})
    c.push_back(yes(K::Metrizable, up(v), cb(up(v)), M::rho_u, "the upper lines are CB-quasi-pseudometrizable by rho_u"));

  // Standard lines.
  c.push_back(no(K::Metrizable, st(V::ut), sm(st(V::ut)), M::d_n, VerdictPart::Properness,
                 "ut is not Sm-quasi-metrizable: small sets have empty natural interior"));
  c.push_back(yes(K::Metrizable, st(V::ut), acb(st(V::ut)), M::d_n, "ut is ACB-metrizable by d_n"));
  for (auto d : {M::d_n, M::d_n1})
    c.push_back(yes(K::UniformWrt, st(V::ut), acb(st(V::ut)), d, "(ut, d_n) and (ut, d_n1) are ACB-uniformly metrizable"));
  for (auto d : {M::d_n_plus, M::d_n_plus_1})
    c.push_back(no(K::UniformWrt, st(V::ut), acb(st(V::ut)), d, VerdictPart::Chain,
                   "(ut, d+_n) is not uniformly ACB-quasi-metrizable: neighborhoods of [-m, m] swallow (-inf, m)"));
  for (auto v : {V::lst, V::lom}) {
    c.push_back(yes(K::Metrizable, st(v), sm(st(v)), M::d_n, "Sm = CB = ACB = B(d_n) for lst and lom"));
    c.push_back(yes(K::UniformWrt, st(v), sm(st(v)), M::d_n, "(lst, d_n) and (lom, d_n) are uniformly Sm-metrizable"));
    c.push_back(no(K::UniformWrt, st(v), sm(st(v)), M::d_n_plus, VerdictPart::Chain,
                   "(lst, d+_n) and (lom, d+_n) are not uniformly Sm-metrizable"));
  }
  for (auto v : {V::l_plus_om, V::l_plus_st}) {
    c.push_back(yes(K::UniformWrt, st(v), acb(st(v)), M::d_n_plus, "(l+ lines, d+_n) are uniformly ACB-metrizable by d+_n"));
    c.push_back(yes(K::Metrizable, st(v), sm(st(v)), M::d_n_plus, "the l+ lines are Sm-metrizable: Sm = ACB = B(d+_n)"));
    c.push_back(yes(K::Metrizable, st(v), sm(st(v)), M::d_u, "the l+ lines are Sm-metrizable by d_u"));
    c.push_back(yes(K::UniformWrt, st(v), sm(st(v)), M::d_n, "(l+ lines, d_n) are uniformly Sm-metrizable"));
    c.push_back(yes(K::UniformWrt, st(v), acb(st(v)), M::d_n, "(l+ lines, d_n) are uniformly ACB-metrizable"));
  }
  for (auto v : {V::om, V::slom, V::rom, V::st}) {
    c.push_back(yes(K::Metrizable, st(v), sm(st(v)), M::d_n1, "om, slom, rom, st are Sm-metrizable by d_n1"));
    c.push_back(yes(K::Metrizable, st(v), cb(st(v)), M::d_n, "om, slom, rom, st are CB-metrizable by d_n"));
  }

  // Sorgenfrey lines.
  for (auto v : {V::lst, V::lom})
    for (auto b : {acb(sg(v)), sm(sg(v))}) {
      c.push_back(yes(K::Metrizable, sg(v), b, M::rho_0, "Sorgenfrey lst and lom are ACB- and Sm-quasi-metrizable by rho_0"));
      c.push_back(yes(K::UniformWrt, sg(v), b, M::rho_0, "(Sorgenfrey lst/lom, rho_0) are uniformly ACB = Sm-quasi-metrizable"));
      c.push_back(no(K::UniformWrt, sg(v), b, M::rho_S_minus, VerdictPart::Chain,
                     "(Sorgenfrey lst/lom, rho_S^-) are not uniformly ACB = Sm-quasi-metrizable"));
    }
  for (auto v : {V::l_plus_st, V::l_plus_om})
    for (auto b : {acb(sg(v)), sm(sg(v))}) {
      c.push_back(yes(K::Metrizable, sg(v), b, M::rho_S, "Sorgenfrey l+ lines are ACB- and Sm-quasi-metrizable by rho_S"));
      c.push_back(yes(K::UniformWrt, sg(v), b, M::rho_0, "(Sorgenfrey l+ lines, rho_0) are uniformly quasi-metrizable"));
    }
  for (auto v : {V::l_minus_om, V::l_minus_st})
    for (auto b : {acb(sg(v)), sm(sg(v))}) {
      c.push_back(yes(K::Metrizable, sg(v), b, M::rho_L, "Sorgenfrey l- lines are ACB- and Sm-quasi-metrizable by rho_L"));
      c.push_back(yes(K::UniformWrt, sg(v), b, M::rho_0, "(Sorgenfrey l- lines, rho_0) are uniformly quasi-metrizable"));
    }
  for (auto v : {V::om, V::slom, V::st, V::sl_plus_om})
    for (auto b : {acb(sg(v)), sm(sg(v))}) {
      c.push_back(yes(K::Metrizable, sg(v), b, M::rho_S1, "Sorgenfrey om, slom, st, sl+om are quasi-metrizable by rho_S1"));
      c.push_back(yes(K::UniformWrt, sg(v), b, M::rho_0, "(Sorgenfrey om/slom/st/sl+om, rho_0) are uniformly quasi-metrizable"));
    }
  for (auto b : {sm(sg(V::ut)), acb(sg(V::ut))})
    c.push_back(no(K::Metrizable, sg(V::ut), b, M::rho_S, VerdictPart::Base,
                   "Sorgenfrey ut: open finite sets do not form a base for FB"));
  for (const auto& id : all_lines())
    if (id.family == LineFamily::Sorgenfrey)
      c.push_back(no(K::Metrizable, id, cb(id), M::rho_S, VerdictPart::Base,
                     "no Sorgenfrey line is CB-metrizable: relatively compact sets are countable"));
  return c;
}

}  // namespace

const std::vector<MetrizabilityClaim>& metrizability_claims() {
  static const std::vector<MetrizabilityClaim> claims = build_claims();
  return claims;
}

ClaimOutcome check_claim(const MetrizabilityClaim& c, const std::vector<RealSet>& probes, long n_cap) {
  ClaimOutcome o;
  o.report = c.kind == K::Metrizable ? metrizable_verdict(c.line, c.bornology, c.metric, probes, n_cap)
                                     : uniform_verdict(c.line, c.bornology, c.metric, n_cap);
  o.agrees = c.holds ? o.report.consistent : !o.report.consistent && (!c.blamed || o.report.failed(*c.blamed));
  return o;
}

// ---- strict continuity ----

StrictContReport strict_cont_refute(const PiecewiseAffineMap& f, LineId src, LineId dst,
                                    const std::vector<FamilySpec>& battery) {
  StrictContReport r;
  for (const auto& fam : battery) {
    if (!cov_member(dst, fam)) {
      r.skipped.push_back(to_string(fam) + ": not admissible on " + to_string(dst));
      continue;
    }
    auto pre = preimage_family(f, fam);
    if (!pre) {
      r.skipped.push_back(to_string(fam) + ": preimage family is not representable");
      continue;
    }
    if (!cov_member(src, *pre)) {
      r.verdict = StrictContReport::Verdict::Refuted;
      r.witness = fam;
      r.witness_preimage = *pre;
      return r;
    }
  }
  return r;
}

// ---- gts axioms ----

bool AxiomReport::all_pass() const {
  return std::none_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.violation.has_value(); });
}

AxiomSamples default_axiom_samples(LineId id) {
  AxiomSamples s;
  auto iv = [&](long a, long b) {
    if (id.family == LineFamily::Sorgenfrey) return RealSet::of(Interval::closed_open(Rational(a), Rational(b)));
    return RealSet::of(Interval::open(Rational(a), Rational(b)));
  };
  RealSet below = RealSet::of(Interval::open(kNegInf, Rational(1)));
  RealSet above = id.family == LineFamily::Sorgenfrey ? RealSet::of(Interval::make(Rational(0), true, kPosInf, false))
                                                      : RealSet::of(Interval::open(Rational(0), kPosInf));
  s.sets = {RealSet(), RealSet::reals(), iv(0, 2), iv(1, 3), iv(-3, -1), below, above, unite(iv(0, 1), iv(2, 3))};
  for (std::size_t i = 0; i < 8 && i < probe_corpus().size(); ++i) s.sets.push_back(probe_corpus()[i]);
  s.families = sm_refuter_battery(id, RealSet::of(Interval::closed(Rational(-2), Rational(3))));
  if (auto cover = small_open_cover(id)) s.families.push_back(*cover);
  s.families.push_back(FamilySpec::finite({}));
  s.families.push_back(FamilySpec::finite({iv(0, 2), iv(1, 3), below}));
  s.families.push_back(FamilySpec::finite({below, above}));
  return s;
}

namespace {

void record(AxiomResult& a, bool ok, const std::string& what) {
  ++a.checked;
  if (!ok && !a.violation) a.violation = what;
}

// Subsets of `items` with 1..k elements, in lexicographic index order.
void for_each_subset(std::size_t size, long k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (!pick.empty()) f(pick);
    if (static_cast<long>(pick.size()) == k) return;
    for (std::size_t i = from; i < size; ++i) {
      pick.push_back(i);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
}

}  // namespace

AxiomReport axiom_probe(LineId id, const AxiomSamples& samples, long depth) {
  constexpr std::size_t kMaxOpens = 8;
  AxiomReport rep;
  std::vector<RealSet> opens;
  for (const auto& s : samples.sets)
    if (op_member(id, s) && opens.size() < kMaxOpens) opens.push_back(s);
  std::vector<FamilySpec> adm;
  for (const auto& f : samples.families)
    if (cov_member(id, f)) adm.push_back(f);

  // (i) finite families of opens.
  AxiomResult& a1 = rep.axioms[0];
  record(a1, cov_member(id, FamilySpec::finite({})) && op_member(id, RealSet::reals()),
         "the empty family or the whole line is rejected");
  for_each_subset(opens.size(), depth, [&](const std::vector<std::size_t>& idx) {
    std::vector<RealSet> ms;
    RealSet u, v = RealSet::reals();
    for (auto i : idx) {
      ms.push_back(opens[i]);
      u = unite(u, opens[i]);
      v = intersect(v, opens[i]);
    }
    FamilySpec f = FamilySpec::finite(ms);
    record(a1, op_member(id, u) && op_member(id, v) && cov_member(id, f), "finite family " + to_string(f));
  });

  // (ii) restriction to an open set.
  AxiomResult& a2 = rep.axioms[1];
  for (const auto& f : adm)
    for (const auto& v : opens) {
      FamilySpec g = FamilySpec::restricted(f, v);
      record(a2, cov_member(id, g), to_string(f) + " restricted to " + to_string(v));
    }

  // (iii) refining each member by a finite admissible family covering it.
  AxiomResult& a3 = rep.axioms[2];
  for (const auto& f : adm)
    for (const auto& g : adm) {
      auto gm = explicit_members(g);
      if (!gm || !is_subset(union_of(f), union_of(g))) {
        ++a3.skipped;
        continue;
      }
      bool pieces_ok = true;
      for (const auto& u : representative_members(f, 8))
        pieces_ok = pieces_ok && cov_member(id, FamilySpec::restricted(g, u));
      if (!pieces_ok) {
        ++a3.skipped;
        continue;
      }
      std::vector<FamilySpec> parts;
      for (const auto& w : *gm) parts.push_back(FamilySpec::restricted(f, w));
      FamilySpec h = FamilySpec::union_of_families(std::move(parts));
      record(a3, cov_member(id, h), "refinement of " + to_string(f) + " by " + to_string(g));
    }

  // (iv) coarsenings with the same union.
  AxiomResult& a4 = rep.axioms[3];
  for (const auto& f : adm) {
    RealSet u = union_of(f);
    if (op_member(id, u)) {
      record(a4, cov_member(id, FamilySpec::union_of_families({f, FamilySpec::finite({u})})),
             to_string(f) + " together with its union");
      record(a4, cov_member(id, FamilySpec::finite({u})), "the union of " + to_string(f));
    } else {
      ++a4.skipped;
    }
    if (const auto* p = std::get_if<PeriodicFamily>(&f.node); p && p->range.kind == IndexRange::Kind::All) {
      RealSet seed = unite(p->seed, shift(p->seed, p->period));
      if (op_member(id, seed)) {
        FamilySpec coarse = FamilySpec::periodic(seed, Rational(2 * p->period));
        record(a4, cov_member(id, coarse), "pairwise merge of " + to_string(f));
      } else {
        ++a4.skipped;
      }
    }
  }

  // (v) sets that are open on every member.
  AxiomResult& a5 = rep.axioms[4];
  for (const auto& f : adm) {
    RealSet u = union_of(f);
    std::vector<RealSet> candidates{u};
    for (const auto& s : samples.sets) candidates.push_back(intersect(s, u));
    for (const auto& v : candidates) {
      auto traces = explicit_members(FamilySpec::restricted(f, v));
      if (!traces) {
        ++a5.skipped;
        continue;
      }
      bool pre = std::all_of(traces->begin(), traces->end(), [&](const RealSet& t) { return op_member(id, t); });
      if (!pre) continue;
      record(a5, op_member(id, v), to_string(v) + " is open on every member of " + to_string(f));
    }
  }
  return rep;
}

// ---- initial bornology ----

bool initial_bornology_member(const std::vector<PiecewiseAffineMap>& maps, const std::vector<Bornology>& borns,
                              const RealSet& a) {
  if (maps.size() != borns.size()) throw std::invalid_argument("maps and bornologies must align");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!bornology_member(borns[i], image(maps[i], a))) return false;
  return true;
}

}  // namespace gts
