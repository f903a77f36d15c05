#include "gts/lines.hpp"

#include <algorithm>
#include <array>

namespace gts {

namespace {

using V = LineVariant;

constexpr std::array<std::pair<V, std::string_view>, 16> kVariantNames{{
    {V::ut, "ut"},
    {V::om, "om"},
    {V::st, "st"},
    {V::lom, "lom"},
    {V::lst, "lst"},
    {V::slom, "slom"},
    {V::l_plus_om, "l_plus_om"},
    {V::l_minus_om, "l_minus_om"},
    {V::l_plus_st, "l_plus_st"},
    {V::l_minus_st, "l_minus_st"},
    {V::sl_plus_om, "sl_plus_om"},
    {V::sl_minus_om, "sl_minus_om"},
    {V::rom, "rom"},
    {V::uu, "uu"},
    {V::ul, "ul"},
    {V::uf, "uf"},
}};

std::string_view variant_name(V v) {
  for (const auto& [k, n] : kVariantNames)
    if (k == v) return n;
  return "?";
}

bool is_upper_variant(V v) { return v == V::uu || v == V::ul || v == V::uf; }

const ExtRat kNegInf = ExtRat::neg_inf();
const ExtRat kPosInf = ExtRat::pos_inf();

}  // namespace

const std::vector<LineId>& all_lines() {
  static const std::vector<LineId> lines = [] {
    std::vector<LineId> out;
    for (auto fam : {LineFamily::Standard, LineFamily::Sorgenfrey})
      for (const auto& [v, _] : kVariantNames)
        if (!is_upper_variant(v)) out.push_back({fam, v});
    for (auto v : {V::uu, V::ul, V::uf}) out.push_back({LineFamily::Upper, v});
    return out;
  }();
  return lines;
}

LineId line(LineFamily family, LineVariant variant) {
  if ((family == LineFamily::Upper) != is_upper_variant(variant))
    throw ConstructionError("no such line: family and variant do not match");
  return {family, variant};
}

LineId upper_line(LineVariant variant) { return line(LineFamily::Upper, variant); }

std::string to_string(LineId id) {
  switch (id.family) {
    case LineFamily::Standard: return "standard/" + std::string(variant_name(id.variant));
    case LineFamily::Sorgenfrey: return "sorgenfrey/" + std::string(variant_name(id.variant));
    case LineFamily::Upper: return std::string(variant_name(id.variant));
  }
  return "?";
}

std::optional<LineId> parse_line(std::string_view text) {
  for (const auto& id : all_lines())
    if (to_string(id) == text) return id;
  return std::nullopt;
}

TopologyKind line_topology(LineId id) {
  switch (id.family) {
    case LineFamily::Standard: return TopologyKind::Nat;
    case LineFamily::Sorgenfrey: return TopologyKind::SorgR;
    case LineFamily::Upper: return TopologyKind::Upper;
  }
  return TopologyKind::Nat;
}

MemberShape member_shape(LineId id) {
  switch (id.variant) {
    case V::ut:
    case V::st:
    case V::lst:
    case V::l_plus_st:
    case V::l_minus_st: return MemberShape::TauOpen;
    case V::om:
    case V::rom: return MemberShape::FiniteUnion;
    case V::lom:
    case V::slom: return MemberShape::LocallyFinite;
    case V::l_plus_om:
    case V::sl_plus_om: return MemberShape::NoLeftTail;
    case V::l_minus_om:
    case V::sl_minus_om: return MemberShape::NoRightTail;
    case V::uu:
    case V::ul:
    case V::uf: return MemberShape::UpperOpen;
  }
  return MemberShape::TauOpen;
}

FamilyRule family_rule(LineId id) {
  switch (id.variant) {
    case V::ut:
    case V::uf: return FamilyRule::Any;
    case V::om:
    case V::st:
    case V::slom:
    case V::sl_plus_om:
    case V::sl_minus_om:
    case V::rom: return FamilyRule::EssFinite;
    case V::lom:
    case V::lst: return FamilyRule::LocallyEssFinite;
    case V::l_plus_om:
    case V::l_plus_st: return FamilyRule::LocallyEssFiniteAndFiniteBelowZero;
    case V::l_minus_om:
    case V::l_minus_st: return FamilyRule::LocallyEssFiniteAndFiniteAboveZero;
    case V::uu: return FamilyRule::EfUpperBounded;
    case V::ul: return FamilyRule::EfLowerBounded;
  }
  return FamilyRule::Any;
}

std::string_view to_string(MemberShape s) {
  switch (s) {
    case MemberShape::TauOpen: return "open";
    case MemberShape::FiniteUnion: return "finite union of basic intervals";
    case MemberShape::LocallyFinite: return "locally finite union of basic intervals";
    case MemberShape::NoLeftTail: return "locally finite union, finite towards -inf";
    case MemberShape::NoRightTail: return "locally finite union, finite towards +inf";
    case MemberShape::UpperOpen: return "upper open";
  }
  return "?";
}

std::string_view to_string(FamilyRule r) {
  switch (r) {
    case FamilyRule::Any: return "any family";
    case FamilyRule::EssFinite: return "essentially finite";
    case FamilyRule::LocallyEssFinite: return "locally essentially finite";
    case FamilyRule::LocallyEssFiniteAndFiniteBelowZero:
      return "locally essentially finite, essentially finite on (-inf, 0)";
    case FamilyRule::LocallyEssFiniteAndFiniteAboveZero:
      return "locally essentially finite, essentially finite on (0, +inf)";
    case FamilyRule::EfUpperBounded: return "EF over the sets bounded above";
    case FamilyRule::EfLowerBounded: return "EF over the sets bounded below";
  }
  return "?";
}

bool basic_union(LineFamily family, const RealSet& u) {
  switch (family) {
    case LineFamily::Standard: return is_open(u, TopologyKind::Nat);
    // [a, b) and (-inf, b) are exactly the half-open clopen pieces.
    case LineFamily::Sorgenfrey:
      return is_open(u, TopologyKind::SorgR) && closure(u, TopologyKind::SorgR) == u;
    case LineFamily::Upper: return is_open(u, TopologyKind::Upper);
  }
  return false;
}

bool op_member(LineId id, const RealSet& u) {
  switch (member_shape(id)) {
    case MemberShape::TauOpen: return is_open(u, line_topology(id));
    case MemberShape::FiniteUnion: return basic_union(id.family, u) && !u.has_tails();
    case MemberShape::LocallyFinite: return basic_union(id.family, u);
    case MemberShape::NoLeftTail: return basic_union(id.family, u) && !u.left_tail();
    case MemberShape::NoRightTail: return basic_union(id.family, u) && !u.right_tail();
    case MemberShape::UpperOpen: return is_open(u, TopologyKind::Upper);
  }
  return false;
}

namespace {

// Ladder members differ only in one endpoint, so a few levels settle shape questions.
constexpr long kShapeLevels = 8;

std::optional<std::string> shape_failure(const FamilySpec& f, const std::function<bool(const RealSet&)>& ok,
                                         std::string_view what) {
  for (const auto& m : representative_members(f, kShapeLevels))
    if (!ok(m)) return "member " + to_string(m) + " is not " + std::string(what);
  return std::nullopt;
}

RealSet negative_half() { return RealSet::of(Interval::open(kNegInf, Rational(0))); }
RealSet positive_half() { return RealSet::of(Interval::open(Rational(0), kPosInf)); }

CovVerdict ess_rule(const FamilySpec& f, const RealSet* on, std::string_view where) {
  EssFinVerdict v = on ? ess_finite_on(f, *on) : ess_finite(f);
  if (v.essentially_finite) return {true, "admissible"};
  return {false, "not essentially finite" + std::string(where) + ": " + v.obstruction};
}

}  // namespace

CovVerdict cov_verdict(LineId id, const FamilySpec& f) {
  if (auto bad = shape_failure(f, [&](const RealSet& m) { return op_member(id, m); }, to_string(member_shape(id))))
    return {false, *bad};
  switch (family_rule(id)) {
    case FamilyRule::Any: return {true, "admissible"};
    case FamilyRule::EssFinite: return ess_rule(f, nullptr, "");
    case FamilyRule::LocallyEssFinite:
      if (!locally_ess_finite(f)) return {false, "not locally essentially finite"};
      return {true, "admissible"};
    case FamilyRule::LocallyEssFiniteAndFiniteBelowZero: {
      if (!locally_ess_finite(f)) return {false, "not locally essentially finite"};
      RealSet half = negative_half();
      return ess_rule(f, &half, " on (-inf, 0)");
    }
    case FamilyRule::LocallyEssFiniteAndFiniteAboveZero: {
      if (!locally_ess_finite(f)) return {false, "not locally essentially finite"};
      RealSet half = positive_half();
      return ess_rule(f, &half, " on (0, +inf)");
    }
    case FamilyRule::EfUpperBounded: return ef_cov_verdict(TopologyKind::Upper, Bornology::ub(), f);
    case FamilyRule::EfLowerBounded: return ef_cov_verdict(TopologyKind::Upper, Bornology::lb(), f);
  }
  return {false, "unknown rule"};
}

bool cov_member(LineId id, const FamilySpec& f) { return cov_verdict(id, f).member; }

// ---- bornologies ----

std::string_view to_string(BornClass c) {
  switch (c) {
    case BornClass::Finite: return "finite";
    case BornClass::All: return "all";
    case BornClass::Bounded: return "bounded";
    case BornClass::Above: return "bounded above";
    case BornClass::Below: return "bounded below";
    case BornClass::DiscreteAbove: return "bounded above, isolated points";
  }
  return "?";
}

bool in_class(BornClass c, const RealSet& a) {
  Boundedness b = boundedness(a);
  auto all_points = [](const std::vector<Interval>& v) {
    return std::all_of(v.begin(), v.end(), [](const Interval& i) { return i.lo == i.hi; });
  };
  switch (c) {
    case BornClass::Finite: return !a.has_tails() && all_points(a.core());
    case BornClass::All: return true;
    case BornClass::Bounded: return b.bounded;
    case BornClass::Above: return b.bounded_above;
    case BornClass::Below: return b.bounded_below;
    case BornClass::DiscreteAbove: {
      if (!b.bounded_above || !all_points(a.core())) return false;
      auto t = a.left_tail();
      return !t || all_points(t->pattern);
    }
  }
  return false;
}

BornClass sm_class(LineId id) {
  switch (id.variant) {
    case V::ut: return BornClass::Finite;
    case V::lom:
    case V::lst: return BornClass::Bounded;
    case V::l_plus_om:
    case V::l_plus_st:
    case V::uu: return BornClass::Above;
    case V::l_minus_om:
    case V::l_minus_st: return BornClass::Below;
    case V::uf: return BornClass::DiscreteAbove;
    default: return BornClass::All;
  }
}

BornClass cb_class(LineId id) {
  switch (id.family) {
    case LineFamily::Standard: return BornClass::Bounded;
    case LineFamily::Sorgenfrey: return BornClass::Finite;
    case LineFamily::Upper: return BornClass::Above;
  }
  return BornClass::Finite;
}

BornClass acb_class(LineId id) {
  switch (id.variant) {
    case V::ut: return id.family == LineFamily::Standard ? BornClass::Bounded : BornClass::Finite;
    case V::uf: return BornClass::Above;
    default: return sm_class(id);
  }
}

bool sm_member(LineId id, const RealSet& a) { return in_class(sm_class(id), a); }
bool cb_member(LineId id, const RealSet& a) { return in_class(cb_class(id), a); }
bool acb_member(LineId id, const RealSet& a) { return in_class(acb_class(id), a); }

LineId pt_of(LineId id) {
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

bool pt_flagged(LineId id) { return id.family == LineFamily::Sorgenfrey && id.variant == V::rom; }

// ---- base schemas ----

ExtRat AffineEnd::at(long n) const {
  if (!alpha.is_finite()) return alpha;
  return ExtRat(Rational(alpha.value() + beta * n));
}

BaseSchema BaseSchema::intervals(std::vector<SchemaInterval> parts, long start) {
  for (const auto& p : parts) {
    if (!p.lo.alpha.is_finite() && p.lo.beta != 0) throw ConstructionError("an infinite end cannot move");
    if (!p.hi.alpha.is_finite() && p.hi.beta != 0) throw ConstructionError("an infinite end cannot move");
    if (p.lo.beta > 0 || p.hi.beta < 0)
      throw ConstructionError("base schema is not monotone: lower ends must not rise, upper ends must not fall");
  }
  return BaseSchema{Kind::Intervals, std::move(parts), start};
}

BaseSchema BaseSchema::integer_grid() { return BaseSchema{Kind::IntegerGrid, {}, 0}; }

RealSet BaseSchema::at(long n) const {
  if (kind == Kind::IntegerGrid) {
    std::vector<Rational> pts;
    for (long k = -n; k <= n; ++k) pts.emplace_back(k);
    return RealSet::points(pts);
  }
  std::vector<Interval> raw;
  for (const auto& p : parts) {
    ExtRat lo = p.lo.at(n), hi = p.hi.at(n);
    if (hi < lo || (lo == hi && !(p.lo_closed && p.hi_closed))) continue;
    raw.push_back(Interval::make(lo, p.lo_closed && lo.is_finite(), hi, p.hi_closed && hi.is_finite()));
  }
  return RealSet::normalize(raw);
}

namespace {

long ceil_long(const Rational& q) { return rat_ceil(q).get_num().get_si(); }

}  // namespace

long BaseSchema::saturation_index(const RealSet& a) const {
  if (kind == Kind::IntegerGrid) return std::max(start, ceil_long(magnitude(a)));
  Rational m = magnitude(a);
  for (const auto& p : parts)
    for (const auto* e : {&p.lo, &p.hi})
      if (e->alpha.is_finite()) m = std::max(m, Rational(abs(e->alpha.value())));
  m += 2;
  long n = start;
  for (const auto& p : parts)
    for (const auto* e : {&p.lo, &p.hi})
      if (e->alpha.is_finite() && e->beta != 0) n = std::max(n, ceil_long(Rational(2 * m / abs(e->beta))) + 1);
  return n;
}

std::string to_string(const BaseSchema& s) {
  if (s.kind == BaseSchema::Kind::IntegerGrid) return "{-n, ..., n}";
  auto end = [](const AffineEnd& e) {
    if (!e.alpha.is_finite() || e.beta == 0) return to_string(e.alpha);
    std::string lin = (e.beta == 1 ? "" : e.beta == -1 ? "-" : to_string(e.beta) + "*") + "n";
    if (e.alpha.value() == 0) return lin;
    return to_string(e.alpha) + (e.beta > 0 ? " + " + lin : " " + lin);
  };
  std::string out;
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    const auto& p = s.parts[i];
    out += (i ? " U " : "") + std::string(p.lo_closed ? "[" : "(") + end(p.lo) + ", " + end(p.hi) +
           (p.hi_closed ? "]" : ")");
  }
  if (out.empty()) out = "{}";
  return out + (s.start ? ", n >= " + std::to_string(s.start) : "");
}

std::string_view to_string(LineBornKind k) {
  switch (k) {
    case LineBornKind::Sm: return "Sm";
    case LineBornKind::CB: return "CB";
    case LineBornKind::ACB: return "ACB";
  }
  return "?";
}

Bornology Bornology::metric_bounded(QuasiMetric d) {
  Bornology b = of_kind(Kind::MetricBounded);
  b.metric = d;
  return b;
}

Bornology Bornology::custom(BaseSchema s) {
  Bornology b = of_kind(Kind::Custom);
  b.schema = std::move(s);
  return b;
}

Bornology Bornology::of_line(LineId id, LineBornKind k) {
  Bornology b = of_kind(Kind::OfLine);
  b.line = id;
  b.which = k;
  return b;
}

std::string to_string(const Bornology& b) {
  switch (b.kind) {
    case Bornology::Kind::FB: return "FB";
    case Bornology::Kind::ALL: return "ALL";
    case Bornology::Kind::NatBounded: return "CB_nat";
    case Bornology::Kind::UB: return "UB";
    case Bornology::Kind::LB: return "LB";
    case Bornology::Kind::MetricBounded: return "B(" + to_string(*b.metric) + ")";
    case Bornology::Kind::Custom: return "schema(" + to_string(*b.schema) + ")";
    case Bornology::Kind::OfLine: return std::string(to_string(b.which)) + "(" + to_string(b.line) + ")";
  }
  return "?";
}

std::optional<BornClass> class_of(const Bornology& b) {
  switch (b.kind) {
    case Bornology::Kind::FB: return BornClass::Finite;
    case Bornology::Kind::ALL: return BornClass::All;
    case Bornology::Kind::NatBounded: return BornClass::Bounded;
    case Bornology::Kind::UB: return BornClass::Above;
    case Bornology::Kind::LB: return BornClass::Below;
    case Bornology::Kind::MetricBounded:
      switch (bounded_class(*b.metric)) {
        case BoundedClass::Bounded: return BornClass::Bounded;
        case BoundedClass::Above: return BornClass::Above;
        case BoundedClass::Below: return BornClass::Below;
        case BoundedClass::All: return BornClass::All;
      }
      return std::nullopt;
    case Bornology::Kind::Custom: return std::nullopt;
    case Bornology::Kind::OfLine:
      switch (b.which) {
        case LineBornKind::Sm: return sm_class(b.line);
        case LineBornKind::CB: return cb_class(b.line);
        case LineBornKind::ACB: return acb_class(b.line);
      }
  }
  return std::nullopt;
}

bool bornology_member(const Bornology& b, const RealSet& a) {
  if (b.kind == Bornology::Kind::MetricBounded) return is_bounded_set(*b.metric, a);
  if (b.kind == Bornology::Kind::Custom) return is_subset(a, b.schema->at(b.schema->saturation_index(a)));
  return in_class(*class_of(b), a);
}

BaseSchema base_of(BornClass c) {
  AffineEnd ninf{kNegInf}, pinf{kPosInf}, grow_down{Rational(0), Rational(-1)}, grow_up{Rational(0), Rational(1)};
  switch (c) {
    case BornClass::Finite: return BaseSchema::integer_grid();
    case BornClass::All: return BaseSchema::intervals({{ninf, false, pinf, false}});
    case BornClass::Bounded: return BaseSchema::intervals({{grow_down, true, grow_up, true}});
    case BornClass::Above: return BaseSchema::intervals({{ninf, false, grow_up, false}});
    case BornClass::Below: return BaseSchema::intervals({{grow_down, false, pinf, false}});
    case BornClass::DiscreteAbove: break;
  }
  throw UnsupportedOperation("the bounded-above discrete sets have no countable base of representable sets");
}

std::optional<BaseSchema> bornology_base(const Bornology& b) {
  if (b.kind == Bornology::Kind::Custom) return b.schema;
  BornClass c = *class_of(b);
  if (c == BornClass::DiscreteAbove) return std::nullopt;
  return base_of(c);
}

CovVerdict ef_cov_verdict(TopologyKind tau, const Bornology& b, const FamilySpec& f) {
  auto open_in_tau = [&](const RealSet& m) { return is_open(m, tau); };
  auto base = bornology_base(b);
  if (!base) return {false, "bornology " + to_string(b) + " has no representable countable base"};
  // Essential finiteness on B_n is inherited by subsets, so a large index decides.
  RealSet features = RealSet::of(Interval::closed(-feature_bound(f), feature_bound(f)));
  long n_max = std::max(64L, base->saturation_index(features));
  for (const auto& m : representative_members(f, kShapeLevels))
    if (!open_in_tau(m)) return {false, "member " + to_string(m) + " is not open"};
  RealSet top = base->at(base->start + n_max);
  EssFinVerdict v = ess_finite_on(restrict_family(f, top), top);
  if (!v.essentially_finite) return {false, "not essentially finite on " + to_string(top) + ": " + v.obstruction};
  return {true, "admissible"};
}

// ---- smallness probes ----

namespace {

RealSet basic_seed(LineFamily family) {
  if (family == LineFamily::Sorgenfrey) return RealSet::of(Interval::closed_open(Rational(0), Rational(2)));
  return RealSet::of(Interval::open(Rational(0), Rational(2)));
}

std::vector<Rational> component_midpoints(const RealSet& a) {
  std::vector<Rational> out;
  for (const auto& c : components_in(a, Interval::closed(Rational(-16), Rational(16))))
    if (c.lo.is_finite() && c.hi.is_finite() && c.lo < c.hi) out.push_back(Rational((c.lo.value() + c.hi.value()) / 2));
  return out;
}

}  // namespace

std::vector<FamilySpec> sm_refuter_battery(LineId id, const RealSet& a) {
  std::vector<FamilySpec> out;
  if (id.family != LineFamily::Upper) {
    RealSet seed = basic_seed(id.family);
    out.push_back(FamilySpec::periodic(seed, Rational(1)));
    out.push_back(FamilySpec::periodic(seed, Rational(1), IndexRange::from(0)));
    out.push_back(FamilySpec::periodic(seed, Rational(1), IndexRange::upto(-2)));
  }
  std::vector<Rational> below_limits = component_midpoints(a), above_limits = below_limits;
  if (auto s = supremum(a); s && s->is_finite()) below_limits.push_back(s->value());
  if (auto i = infimum(a); i && i->is_finite()) above_limits.push_back(i->value());
  for (const auto& p : below_limits) out.push_back(FamilySpec::ladder_below(p));
  out.push_back(FamilySpec::ladder_below(kPosInf));
  if (id.family != LineFamily::Upper) {
    bool closed = id.family == LineFamily::Sorgenfrey;
    for (const auto& p : above_limits) out.push_back(FamilySpec::ladder_above(p, Rational(1), closed));
    out.push_back(FamilySpec::ladder_above(kNegInf, Rational(1), closed));
  }
  return out;
}

std::optional<FamilySpec> sm_refute(LineId id, const RealSet& a) {
  for (auto& f : sm_refuter_battery(id, a))
    if (!ess_finite_on(f, a).essentially_finite && cov_member(id, f)) return f;
  return std::nullopt;
}

const std::vector<RealSet>& probe_corpus() {
  static const std::vector<RealSet> corpus = [] {
    auto r = [](long n, long d = 1) { return make_rational(n, d); };
    auto right_tail = [](std::vector<Interval> pat, Rational period, Rational cut) {
      return RealSet::normalize({}, std::nullopt, PeriodicTail{std::move(pat), std::move(period), std::move(cut)});
    };
    auto left_tail = [](std::vector<Interval> pat, Rational period, Rational cut) {
      return RealSet::normalize({}, PeriodicTail{std::move(pat), std::move(period), std::move(cut)});
    };
    std::vector<Rational> three{r(-1), r(2), r(7, 2)};
    std::vector<RealSet> v{
        RealSet(),
        RealSet::point(r(0)),
        RealSet::points(three),
        RealSet::of(Interval::closed(r(0), r(1))),
        RealSet::of(Interval::open(r(0), r(1))),
        RealSet::of(Interval::closed_open(r(0), r(1))),
        RealSet::of(Interval::open_closed(r(-3), r(-1))),
        RealSet::of(Interval::closed(r(-5), r(5))),
        RealSet::of(Interval::open(kNegInf, r(0))),
        RealSet::of(Interval::make(kNegInf, false, r(3), true)),
        RealSet::of(Interval::open(r(0), kPosInf)),
        RealSet::of(Interval::closed_open(r(-2), kPosInf)),
        RealSet::reals(),
        right_tail({Interval::point(r(0))}, r(1), r(-1, 2)),
        left_tail({Interval::point(r(0))}, r(1), r(1, 2)),
        unite(right_tail({Interval::point(r(0))}, r(1), r(-1, 2)), left_tail({Interval::point(r(0))}, r(1), r(1, 2))),
        right_tail({Interval::closed_open(r(0), r(1, 2))}, r(1), r(0)),
        left_tail({Interval::open(r(0), r(1, 4))}, r(1), r(0)),
        RealSet::normalize({}, PeriodicTail{{Interval::open(r(0), r(1, 2))}, r(1), r(0)},
                           PeriodicTail{{Interval::open(r(0), r(1, 2))}, r(1), r(0)}),
        unite(RealSet::of(Interval::closed(r(0), r(1))), RealSet::point(r(5))),
        unite(RealSet::point(r(0)), RealSet::of(Interval::open(kNegInf, r(-3)))),
        unite(left_tail({Interval::point(r(0))}, r(1), r(-1, 2)), RealSet::of(Interval::closed(r(1), r(2)))),
        unite(RealSet::of(Interval::open(r(1, 2), r(3, 4))), RealSet::of(Interval::open_closed(r(5), r(6)))),
        unite(RealSet::point(r(-1, 3)), right_tail({Interval::point(r(0))}, r(1, 2), r(1))),
        unite(RealSet::of(Interval::closed(r(-1), r(0))), right_tail({Interval::closed(r(0), r(1, 4))}, r(1), r(2))),
        unite(left_tail({Interval::point(r(1, 2))}, r(2), r(0)), RealSet::point(r(10))),
    };
    return v;
  }();
  return corpus;
}

std::optional<FamilySpec> small_open_cover(LineId id) {
  switch (sm_class(id)) {
    case BornClass::All: return FamilySpec::finite({RealSet::reals()});
    case BornClass::Bounded: return FamilySpec::periodic(basic_seed(id.family), Rational(1));
    case BornClass::Above: return FamilySpec::ladder_below(kPosInf);
    case BornClass::Below: return FamilySpec::ladder_above(kNegInf, Rational(1), id.family == LineFamily::Sorgenfrey);
    case BornClass::Finite:
    case BornClass::DiscreteAbove: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace gts
